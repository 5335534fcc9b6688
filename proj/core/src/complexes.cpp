#include "folcoh/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "folcoh/errors.hpp"

namespace folcoh {

CellKey DoubleComplex::canonical(CellKey k) const {
  if (!period) return k;
  // Shift (1,1): slide to the q == 0 representative.
  return {k.first - k.second, 0};
}

int DoubleComplex::cell_dim(int p, int q) const {
  auto it = cells.find(canonical({p, q}));
  return it == cells.end() ? 0 : it->second;
}

Matrix DoubleComplex::d1(int p, int q) const {
  auto it = delta1.find(canonical({p, q}));
  if (it != delta1.end()) return it->second;
  return Matrix(cell_dim(p + 1, q), cell_dim(p, q));
}

Matrix DoubleComplex::d2(int p, int q) const {
  auto it = delta2.find(canonical({p, q}));
  if (it != delta2.end()) return it->second;
  return Matrix(cell_dim(p, q + 1), cell_dim(p, q));
}

void DoubleComplex::check_structure() const {
  for (const auto& [key, dim] : cells) {
    auto [p, q] = key;
    if (!(d1(p + 1, q) * d1(p, q)).is_zero()) throw Error("delta1^2 != 0");
    if (!(d2(p, q + 1) * d2(p, q)).is_zero()) throw Error("delta2^2 != 0");
    if (!(d2(p + 1, q) * d1(p, q) + d1(p, q + 1) * d2(p, q)).is_zero())
      throw Error("delta1 delta2 + delta2 delta1 != 0");
  }
}

int DoubleComplex::min_total_degree() const {
  int m = 0;
  bool first = true;
  for (const auto& [key, dim] : cells) {
    int t = key.first + key.second;
    if (first || t < m) m = t;
    first = false;
  }
  return m;
}

int DoubleComplex::max_total_degree() const {
  int m = 0;
  bool first = true;
  for (const auto& [key, dim] : cells) {
    int t = key.first + key.second;
    if (first || t > m) m = t;
    first = false;
  }
  return m;
}

int CochainComplex::dim(int j) const {
  auto it = degrees.find(j);
  return it == degrees.end() ? 0 : it->second;
}

Matrix CochainComplex::d_at(int j) const {
  auto it = d.find(j);
  return it == d.end() ? Matrix(dim(j + 1), dim(j)) : it->second;
}

Matrix CochainComplex::dl_at(int j) const {
  auto it = d_lambda.find(j);
  return it == d_lambda.end() ? Matrix(dim(j - 1), dim(j)) : it->second;
}

int CochainComplex::min_degree() const {
  return degrees.empty() ? 0 : degrees.begin()->first;
}

int CochainComplex::max_degree() const {
  return degrees.empty() ? 0 : degrees.rbegin()->first;
}

DoubleComplex double_complex_from_model(const ModelSpec& spec) {
  if (!spec.is_complex()) throw NotComplexModel("Dolbeault complex needs a complex model");
  DoubleComplex dc;
  int n = spec.num_generators();
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      int dim = int(monomial_basis(spec, p, q).size());
      if (dim == 0) continue;
      dc.cells[{p, q}] = dim;
      dc.delta1[{p, q}] = operator_matrix(spec, Op::Partial, p, q);
      dc.delta2[{p, q}] = operator_matrix(spec, Op::Bar, p, q);
    }
  }
  return dc;
}

DoubleComplex doub_construction(const CochainComplex& cx, int order1, int order2) {
  if (std::gcd(std::abs(order1), std::abs(order2)) != 1)
    throw GcdViolation("doub: orders must be coprime");
  if (!cx.has_d_lambda())
    throw MissingSecondDifferential("doub: complex carries only one differential");
  if (!(order1 == 1 && order2 == -1))
    throw Error("doub: only the order pair (1,-1) is representable here");
  DoubleComplex dc;
  dc.period = {1, 1};
  for (const auto& [j, dim] : cx.degrees) {
    dc.cells[{j, 0}] = dim;
    dc.delta1[{j, 0}] = cx.d_at(j);        // (j,0) -> (j+1,0)
    dc.delta2[{j, 0}] = cx.dl_at(j);       // (j,0) -> (j,1) ~ (j-1,0)
  }
  return dc;
}


// ---------------------------------------------------------------------------
// Total-degree slices and the spectral sequence engine
// ---------------------------------------------------------------------------

namespace {

struct TotalSlice {
  std::vector<CellKey> cells;  // actual (not canonicalized) keys, ascending p
  std::vector<int> offsets;
  int dim = 0;
  int offset_of(CellKey k) const {
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i] == k) return offsets[i];
    return -1;
  }
};

TotalSlice make_slice(const DoubleComplex& dc, int n) {
  TotalSlice s;
  if (!dc.periodic()) {
    for (const auto& [key, dim] : dc.cells)
      if (key.first + key.second == n) s.cells.push_back(key);
  } else {
    // Window cells are (j,0); the slice cell for diagonal j is ((n+j)/2,(n-j)/2).
    for (const auto& [key, dim] : dc.cells) {
      int j = key.first;
      if ((n + j) % 2 != 0) continue;
      s.cells.push_back({(n + j) / 2, (n - j) / 2});
    }
  }
  std::sort(s.cells.begin(), s.cells.end());
  for (const auto& c : s.cells) {
    s.offsets.push_back(s.dim);
    s.dim += dc.cell_dim(c.first, c.second);
  }
  return s;
}

enum class Part { Delta1, Delta2, Both };

Matrix slice_map(const DoubleComplex& dc, const TotalSlice& src, const TotalSlice& dst,
                 Part part) {
  Matrix m(dst.dim, src.dim);
  auto put = [&](const Matrix& block, int roff, int coff) {
    for (int i = 0; i < block.rows(); ++i)
      for (int j = 0; j < block.cols(); ++j) m.at(roff + i, coff + j) = block.at(i, j);
  };
  for (size_t c = 0; c < src.cells.size(); ++c) {
    auto [p, q] = src.cells[c];
    if (part != Part::Delta2) {
      int off = dst.offset_of({p + 1, q});
      if (off >= 0) put(dc.d1(p, q), off, src.offsets[c]);
    }
    if (part != Part::Delta1) {
      int off = dst.offset_of({p, q + 1});
      if (off >= 0) put(dc.d2(p, q), off, src.offsets[c]);
    }
  }
  return m;
}

class SpectralEngine {
 public:
  SpectralEngine(const DoubleComplex& dc) : dc_(dc) {}

  const TotalSlice& slice(int n) {
    auto it = slices_.find(n);
    if (it == slices_.end()) it = slices_.emplace(n, make_slice(dc_, n)).first;
    return it->second;
  }

  const Matrix& big_d(int n) {
    auto it = dmaps_.find(n);
    if (it == dmaps_.end())
      it = dmaps_.emplace(n, slice_map(dc_, slice(n), slice(n + 1), Part::Both)).first;
    return it->second;
  }

  // Coordinate subspace of Tot^n spanned by cells with first index >= a.
  Subspace filt(int n, int a) {
    const TotalSlice& s = slice(n);
    Matrix sel(s.dim, 0);
    std::vector<int> idx;
    for (size_t c = 0; c < s.cells.size(); ++c) {
      if (s.cells[c].first < a) continue;
      int dim = dc_.cell_dim(s.cells[c].first, s.cells[c].second);
      for (int k = 0; k < dim; ++k) idx.push_back(s.offsets[c] + k);
    }
    Matrix basis(s.dim, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j) basis.at(idx[j], j) = Scalar(1);
    return Subspace::span(s.dim, basis);
  }

  // Z_r^{p,q} = F^p(Tot^n) \cap D^{-1}(F^{p+r}(Tot^{n+1})), as a subspace of Tot^n.
  const Subspace& approximant(int p, int q, int r) {
    auto key = std::tuple(p, q, r);
    auto it = zs_.find(key);
    if (it != zs_.end()) return it->second;
    int n = p + q;
    Subspace z = intersect(filt(n, p), preimage(big_d(n), filt(n + 1, p + r)));
    return zs_.emplace(key, std::move(z)).first->second;
  }

  // Boundary part of E_r^{p,q}: Z_{r-1}^{p+1,q-1} + D(Z_{r-1}^{p-r+1,q+r-2}).
  Subspace boundaries(int p, int q, int r) {
    Subspace b = approximant(p + 1, q - 1, r - 1);
    const Subspace& prev = approximant(p - r + 1, q + r - 2, r - 1);
    return sum(b, image(big_d(p + q - 1) * prev.basis()));
  }

  int page_dim(int p, int q, int r) {
    if (r == 0) return dc_.cell_dim(p, q);
    return approximant(p, q, r).dim() - boundaries(p, q, r).dim();
  }

  // Rank of d_r : E_r^{p,q} -> E_r^{p+r,q-r+1}.
  int differential_rank(int p, int q, int r) {
    if (r == 0) return rank(dc_.d2(p, q));
    Subspace dz = image(big_d(p + q) * approximant(p, q, r).basis());
    Subspace bt = boundaries(p + r, q - r + 1, r);
    return sum(dz, bt).dim() - bt.dim();
  }

 private:
  const DoubleComplex& dc_;
  std::map<int, TotalSlice> slices_;
  std::map<int, Matrix> dmaps_;
  std::map<std::tuple<int, int, int>, Subspace> zs_;
};

DoubleComplex transpose(const DoubleComplex& dc) {
  DoubleComplex t;
  t.period = dc.period;
  for (const auto& [key, dim] : dc.cells) {
    auto [p, q] = key;
    CellKey tk = t.period ? t.canonical({q, p}) : CellKey{q, p};
    t.cells[tk] = dim;
    t.delta1[tk] = dc.d2(p, q);
    t.delta2[tk] = dc.d1(p, q);
  }
  return t;
}

std::vector<CellKey> support(const DoubleComplex& dc) {
  std::vector<CellKey> out;
  for (const auto& [key, dim] : dc.cells) out.push_back(key);
  return out;
}

int span_plus_two(const DoubleComplex& dc) {
  return dc.max_total_degree() - dc.min_total_degree() + 2;
}

}  // namespace

CochainComplex total_complex(const DoubleComplex& dc) {
  if (dc.periodic()) throw Unbounded("total complex of a periodic double complex");
  CochainComplex out;
  for (int n = dc.min_total_degree(); n <= dc.max_total_degree(); ++n) {
    TotalSlice s = make_slice(dc, n);
    if (s.dim > 0) out.degrees[n] = s.dim;
  }
  for (const auto& [n, dim] : out.degrees)
    out.d[n] = slice_map(dc, make_slice(dc, n), make_slice(dc, n + 1), Part::Both);
  return out;
}

int total_dim(const DoubleComplex& dc, int n) { return make_slice(dc, n).dim; }

Matrix total_part_map(const DoubleComplex& dc, int n, bool use_delta1, bool use_delta2) {
  Part part = use_delta1 && use_delta2 ? Part::Both : use_delta1 ? Part::Delta1 : Part::Delta2;
  return slice_map(dc, make_slice(dc, n), make_slice(dc, n + 1), part);
}

SpectralPage spectral_page(const DoubleComplex& dc, Filtration f, int r) {
  if (r < 0) throw Error("spectral page index must be >= 0");
  if (f == Filtration::Second) {
    DoubleComplex t = transpose(dc);
    SpectralPage page = spectral_page(t, Filtration::First, r);
    page.filtration = Filtration::Second;
    return page;
  }
  SpectralPage page;
  page.r = r;
  page.filtration = f;
  SpectralEngine eng(dc);
  for (CellKey key : support(dc)) {
    auto [p, q] = key;
    page.dims[key] = eng.page_dim(p, q, r);
    page.differential_ranks[key] = eng.differential_rank(p, q, r);
  }
  return page;
}

int degeneration_page(const DoubleComplex& dc, Filtration f) {
  if (f == Filtration::Second) return degeneration_page(transpose(dc), Filtration::First);
  SpectralEngine eng(dc);
  int r_max = span_plus_two(dc);
  std::vector<int> first_nonzero;  // pages r with some nonzero d_r
  for (int r = 1; r <= r_max; ++r) {
    for (CellKey key : support(dc)) {
      if (eng.differential_rank(key.first, key.second, r) > 0) {
        first_nonzero.push_back(r);
        break;
      }
    }
  }
  // No differential can reach past the total-degree span, so pages beyond
  // r_max are silent and the last live page settles the answer.
  if (first_nonzero.empty()) return 1;
  return first_nonzero.back() + 1;
}

}  // namespace folcoh
