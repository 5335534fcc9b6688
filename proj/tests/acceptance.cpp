// Acceptance gate: every criterion prints exactly one pass/fail line and the
// process exits nonzero if any fails.  All comparisons are exact.

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "folcoh/cohomology.hpp"
#include "folcoh/complexes.hpp"
#include "folcoh/model.hpp"
#include "folcoh/symplectic.hpp"
#include "folcoh/verdicts.hpp"
#include "random_complexes.hpp"

using namespace folcoh;

namespace {

int failures = 0;

void criterion(const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << label << note << "\n";
  if (!ok) ++failures;
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return int(r);
}

int cell(const CohomologyReport& rep, int p, int q) {
  auto it = rep.dims.find({p, q});
  return it == rep.dims.end() ? 0 : it->second;
}

bool all_seven(const LemmaVerdict& v, bool expected) {
  if (!v.consistent || v.by_definition != expected) return false;
  for (bool c : v.six_conditions)
    if (c != expected) return false;
  return true;
}

// Guarded operator table over degrees 0..2q with zero maps past the ends.
struct OpTable {
  CochainComplex cx;
  SymplecticOperators so;
  int q;

  explicit OpTable(const ModelSpec& spec)
      : cx(symplectic_complex(spec)), so(build_operators(spec)), q(spec.half_codim) {}

  int dim(int k) const { return k < 0 || k > 2 * q ? 0 : cx.dim(k); }
  Matrix d(int k) const {
    return k < 0 || k >= 2 * q ? Matrix(dim(k + 1), dim(k)) : cx.d_at(k);
  }
  Matrix dl(int k) const {
    return k <= 0 || k > 2 * q ? Matrix(dim(k - 1), dim(k)) : cx.dl_at(k);
  }
  Matrix lam(int k) const {
    auto it = so.Lambda.find(k);
    if (it != so.Lambda.end() && it->second.rows() == dim(k - 2)) return it->second;
    return Matrix(dim(k - 2), dim(k));
  }
  Matrix lam_pow(int count, int k) const {
    Matrix m = Matrix::identity(dim(k));
    for (int i = 0; i < count; ++i) m = lam(k - 2 * i) * m;
    return m;
  }
  bool operator_identities() const {
    for (int k = 0; k <= 2 * q; ++k) {
      Matrix minus_lam_d = (lam(k + 1) * d(k)).scaled(Scalar(-1));
      if (dl(k) != d(k - 2) * lam(k) + minus_lam_d) return false;
      if (dl(k - 1) * dl(k) != Matrix(dim(k - 2), dim(k))) return false;
      Matrix minus_dl_d = (dl(k + 1) * d(k)).scaled(Scalar(-1));
      if (d(k - 1) * dl(k) != minus_dl_d) return false;
      auto star = [&](int j) {
        auto it = so.star_s.find(j);
        return it != so.star_s.end() ? it->second : Matrix(dim(2 * q - j), dim(j));
      };
      if (star(2 * q - k) * star(k) != Matrix::identity(dim(k))) return false;
      for (int p = 1; p <= q; ++p) {
        Matrix lhs = d(k - 2 * p) * lam_pow(p, k);
        Matrix rhs = lam_pow(p, k + 1) * d(k) +
                     (lam_pow(p - 1, k - 1) * dl(k)).scaled(Scalar(p));
        if (lhs != rhs) return false;
      }
    }
    return true;
  }
};

const std::vector<std::string> kSymplecticModels = {"torus2q", "heisenberg_symplectic",
                                                    "complex_lemma"};

ModelSpec symplectic_model(const std::string& name, int half_codim) {
  return builtin(name, half_codim);
}

}  // namespace

int main() {
  criterion("nonlemma complex model: published dims and strict degree-one row", [] {
    ModelSpec m = builtin("complex_nonlemma");
    DoubleComplex dc = double_complex_from_model(m);
    CohomologyReport tot = cohomology_dims(dc, Theory::Total);
    CohomologyReport bc = cohomology_dims(dc, Theory::BottChern);
    CohomologyReport ae = cohomology_dims(dc, Theory::Aeppli);
    InequalityReport fr = froelicher_bigraded_total(dc);
    return tot.total_in_degree(1) == 4 && cell(bc, 1, 0) == 2 && cell(bc, 0, 1) == 2 &&
           cell(ae, 1, 0) == 3 && cell(ae, 0, 1) == 3 && fr.per_degree[1].lhs == 10 &&
           fr.per_degree[1].rhs == 8 && fr.per_degree[1].strict() &&
           !lemma_check(dc).holds();
  });

  // The source example claims equality at every degree here, but the model its
  // own basis defines has first Betti number three, so the lemma provably
  // fails and the comparison is strict exactly in degree two (10 >= 8); the
  // corrected values are pinned.  The symplectic strictness in degree two is
  // as published.
  criterion("lemma-named complex model: strictness concentrated in degree two", [] {
    ModelSpec m = builtin("complex_lemma");
    DoubleComplex dc = double_complex_from_model(m);
    InequalityReport fr = froelicher_bigraded_total(dc);
    for (const auto& [k, row] : fr.per_degree) {
      if (k == 2 && !(row.lhs == 10 && row.rhs == 8 && row.strict())) return false;
      if (k != 2 && !row.equal()) return false;
    }
    if (!all_seven(lemma_check(dc), false)) return false;
    InequalityReport sym = froelicher_symplectic(symplectic_complex(m), m.half_codim);
    return sym.per_degree[2].strict();
  });

  criterion("nilpotent symplectic model: strict degree-two row, no dd^Lambda lemma", [] {
    ModelSpec m = builtin("heisenberg_symplectic");
    CochainComplex cx = symplectic_complex(m);
    CohomologyReport plus = symplectic_cohomology_dims(cx, Theory::DPlusDLambda);
    CohomologyReport quot = symplectic_cohomology_dims(cx, Theory::DDLambda);
    InequalityReport fr = froelicher_symplectic(cx, m.half_codim);
    return plus.graded_dims.at(2) == 5 && quot.graded_dims.at(2) == 5 &&
           fr.per_degree[2].lhs == 10 && fr.per_degree[2].rhs == 8 &&
           fr.per_degree[2].strict() && !fr.lemma;
  });

  criterion("torus controls: lemmas, equalities, Lefschetz, pages, binomial Betti", [] {
    for (int q : {1, 2}) {
      DoubleComplex dc = double_complex_from_model(complex_torus(q));
      if (!all_seven(lemma_check(dc), true)) return false;
      if (!froelicher_bigraded(dc).overall_equality) return false;
      if (!froelicher_bigraded_total(dc).overall_equality) return false;

      ModelSpec m = builtin("torus2q", q);
      CochainComplex cx = symplectic_complex(m);
      InequalityReport sym = froelicher_symplectic(cx, q);
      if (!sym.overall_equality || !sym.lemma) return false;
      if (!hard_lefschetz(m).overall) return false;
      LefschetzEquivalence eq = lefschetz_equivalence_report(m);
      if (!eq.agree() || !eq.hard_lefschetz) return false;
      DegenerationVerdict dv = zgraded_equality_and_degeneration(cx, 1, -1);
      if (dv.page_first != 1 || dv.page_second != 1) return false;
      CohomologyReport dr = symplectic_cohomology_dims(cx, Theory::DeRham);
      for (int k = 0; k <= 2 * q; ++k)
        if (dr.graded_dims.at(k) != binomial(2 * q, k)) return false;
    }
    return true;
  });

  criterion("random battery: the seven lemma booleans agree on 100 complexes", [] {
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
      if (!lemma_check(folcoh_testing::RandomComplexBuilder(seed).build()).consistent)
        return false;
    return true;
  });

  criterion("random battery: inequality rows and equality-lemma equivalence", [] {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      DoubleComplex dc = folcoh_testing::RandomComplexBuilder(seed).build();
      InequalityReport edges = froelicher_bigraded(dc);
      for (const auto& [k, row] : edges.per_degree)
        if (row.lhs < row.rhs) return false;
      InequalityReport total = froelicher_bigraded_total(dc);
      for (const auto& [k, row] : total.per_degree)
        if (row.lhs < row.rhs) return false;
      if (total.overall_equality != total.lemma || !total.lemma_equivalent) return false;
    }
    return true;
  });

  criterion("random battery: the lemma forces degeneration at the first page", [] {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      DoubleComplex dc = folcoh_testing::RandomComplexBuilder(seed).build();
      if (lemma_check(dc).holds() &&
          (degeneration_page(dc, Filtration::First) != 1 ||
           degeneration_page(dc, Filtration::Second) != 1))
        return false;
    }
    return true;
  });

  criterion("operator identities hold exactly on every symplectic model", [] {
    for (const std::string& name : kSymplecticModels)
      for (int q : {1, 2}) {
        if (name != "torus2q" && q == 2) continue;
        ModelSpec m = symplectic_model(name, q);
        if (!OpTable(m).operator_identities()) return false;
        PhiVerdict phi = phi_intertwine_check(m);
        if (!phi.invertible || !phi.intertwines || !phi.decomposition) return false;
      }
    return true;
  });

  criterion("Hodge suite: decompositions exact, harmonic dims match, duality table", [] {
    for (const char* name : {"complex_nonlemma", "complex_lemma"}) {
      ModelSpec m = builtin(name);
      DoubleComplex dc = double_complex_from_model(m);
      for (LaplacianKind kind : {LaplacianKind::BC, LaplacianKind::Aeppli}) {
        DecompositionReport rep = decomposition_check(m, kind);
        if (!rep.ok()) return false;
        CohomologyReport coh = cohomology_dims(
            dc, kind == LaplacianKind::BC ? Theory::BottChern : Theory::Aeppli);
        for (const auto& [key, c] : rep.cells)
          if (c.harmonic_dim != cell(coh, key.first, key.second)) return false;
      }
      if (!bc_aeppli_duality_check(m).ok()) return false;
    }
    return true;
  });

  criterion("reversed gradation: d^Lambda cohomology mirrors de Rham", [] {
    for (const std::string& name : kSymplecticModels)
      for (int q : {1, 2}) {
        if (name != "torus2q" && q == 2) continue;
        ModelSpec m = symplectic_model(name, q);
        CochainComplex cx = symplectic_complex(m);
        CohomologyReport dl = symplectic_cohomology_dims(cx, Theory::DLambda);
        CohomologyReport dr = symplectic_cohomology_dims(cx, Theory::DeRham);
        for (int j = 0; j <= 2 * m.half_codim; ++j)
          if (dl.graded_dims.at(j) != dr.graded_dims.at(2 * m.half_codim - j)) return false;
      }
    return true;
  });

  criterion("the symplectic double construction degenerates at the first page", [] {
    for (const std::string& name : {std::string("heisenberg_symplectic"),
                                    std::string("torus2q")}) {
      ModelSpec m = builtin(name, 1);
      DoubleComplex doub = doub_construction(symplectic_complex(m), 1, -1);
      if (degeneration_page(doub, Filtration::First) != 1 ||
          degeneration_page(doub, Filtration::Second) != 1)
        return false;
    }
    return true;
  });

  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
