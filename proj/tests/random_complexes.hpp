#pragma once

// Random valid bounded double complexes for property suites: direct sums
// of indecomposable blocks (dots, anticommuting squares, one-step arrows,
// corner zigzags) followed by a random invertible base change per cell, so
// validity (both squares and the anticommutator vanish) is preserved.

#include <random>

#include "folcoh/complexes.hpp"

namespace folcoh_testing {

using namespace folcoh;

class RandomComplexBuilder {
 public:
  explicit RandomComplexBuilder(std::uint64_t seed) : rng_(seed) {}

  DoubleComplex build() {
    cells_.clear();
    entries_.clear();
    std::uniform_int_distribution<int> nblocks(1, 6);
    std::uniform_int_distribution<int> pos(0, 2);
    std::uniform_int_distribution<int> kind(0, 5);
    int blocks = nblocks(rng_);
    for (int b = 0; b < blocks; ++b) add_block(kind(rng_), pos(rng_), pos(rng_));

    DoubleComplex dc;
    for (const auto& [key, dim] : cells_)
      if (dim > 0) dc.cells[key] = dim;
    for (const auto& [key, dim] : dc.cells) {
      auto [p, q] = key;
      dc.delta1[key] = assemble(p, q, p + 1, q, delta1_entries_);
      dc.delta2[key] = assemble(p, q, p, q + 1, delta2_entries_);
    }
    base_change(dc);
    dc.check_structure();
    return dc;
  }

 private:
  struct Entry {
    CellKey src, tgt;
    int src_idx, tgt_idx;
    int sign;
  };

  std::mt19937_64 rng_;
  std::map<CellKey, int> cells_;
  std::vector<Entry> entries_;  // unused marker to keep struct layout simple
  std::vector<Entry> delta1_entries_;
  std::vector<Entry> delta2_entries_;

  int slot(CellKey k) { return cells_[k]++; }

  void arrow(std::vector<Entry>& fam, CellKey s, int si, CellKey t, int ti, int sign) {
    fam.push_back({s, t, si, ti, sign});
  }

  void add_block(int kind, int p, int q) {
    CellKey a{p, q}, right{p + 1, q}, up{p, q + 1}, diag{p + 1, q + 1};
    switch (kind) {
      case 0:  // dot
        slot(a);
        break;
      case 1: {  // anticommuting square
        int ia = slot(a), ib = slot(right), ic = slot(up), id = slot(diag);
        arrow(delta1_entries_, a, ia, right, ib, 1);
        arrow(delta1_entries_, up, ic, diag, id, 1);
        arrow(delta2_entries_, a, ia, up, ic, 1);
        arrow(delta2_entries_, right, ib, diag, id, -1);
        break;
      }
      case 2: {  // horizontal arrow
        int ia = slot(a), ib = slot(right);
        arrow(delta1_entries_, a, ia, right, ib, 1);
        break;
      }
      case 3: {  // vertical arrow
        int ia = slot(a), ic = slot(up);
        arrow(delta2_entries_, a, ia, up, ic, 1);
        break;
      }
      case 4: {  // corner: two arrows into the diagonal cell
        int ic = slot(up), id = slot(diag), ib = slot(right);
        arrow(delta1_entries_, up, ic, diag, id, 1);
        arrow(delta2_entries_, right, ib, diag, id, 1);
        break;
      }
      default: {  // corner: two arrows out of one cell
        int ia = slot(a), ib = slot(right), ic = slot(up);
        arrow(delta1_entries_, a, ia, right, ib, 1);
        arrow(delta2_entries_, a, ia, up, ic, 1);
        break;
      }
    }
  }

  Matrix assemble(int p, int q, int tp, int tq, const std::vector<Entry>& fam) {
    auto dim = [&](CellKey k) {
      auto it = cells_.find(k);
      return it == cells_.end() ? 0 : it->second;
    };
    Matrix m(dim({tp, tq}), dim({p, q}));
    for (const Entry& e : fam)
      if (e.src == CellKey{p, q} && e.tgt == CellKey{tp, tq})
        m.at(e.tgt_idx, e.src_idx) = Scalar(e.sign);
    return m;
  }

  Matrix random_invertible(int n) {
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> unit(0, 1);
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) lower.at(i, j) = Scalar(small(rng_));
      for (int j = i + 1; j < n; ++j) upper.at(i, j) = Scalar(small(rng_));
      upper.at(i, i) = Scalar(unit(rng_) ? 1 : -1);
    }
    return lower * upper;
  }

  void base_change(DoubleComplex& dc) {
    std::map<CellKey, Matrix> t, tinv;
    for (const auto& [key, dim] : dc.cells) {
      Matrix m = random_invertible(dim);
      t.emplace(key, m);
      tinv.emplace(key, inverse(m));
    }
    auto fetch = [&](CellKey k, int dim, bool inv) {
      auto& pool = inv ? tinv : t;
      auto it = pool.find(k);
      return it == pool.end() ? Matrix::identity(dim) : it->second;
    };
    for (auto& [key, mat] : dc.delta1) {
      CellKey tgt{key.first + 1, key.second};
      mat = fetch(tgt, mat.rows(), false) * mat * fetch(key, mat.cols(), true);
    }
    for (auto& [key, mat] : dc.delta2) {
      CellKey tgt{key.first, key.second + 1};
      mat = fetch(tgt, mat.rows(), false) * mat * fetch(key, mat.cols(), true);
    }
  }
};

}  // namespace folcoh_testing
