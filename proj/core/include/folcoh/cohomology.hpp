#pragma once

#include <map>

#include "folcoh/complexes.hpp"

namespace folcoh {

enum class Theory {
  Total,
  Delta1,
  Delta2,
  BottChern,
  Aeppli,
  DeRham,
  DLambda,
  DPlusDLambda,
  DDLambda,
};

const char* theory_name(Theory t);

/// Dimension table of one cohomology theory.  Bigraded theories fill
/// `dims`/`representatives`; graded theories (total and the symplectic
/// family) fill the `graded_` pair.  Representatives are echelonized
/// coset representatives inside the numerator subspace.
struct CohomologyReport {
  Theory theory = Theory::Total;
  std::map<CellKey, int> dims;
  std::map<CellKey, Subspace> representatives;
  std::map<int, int> graded_dims;
  std::map<int, Subspace> graded_representatives;

  int total_in_degree(int n) const;  // sum over p+q = n (graded: direct lookup)
};

CohomologyReport cohomology_dims(const DoubleComplex& dc, Theory theory);

CohomologyReport symplectic_cohomology_dims(const CochainComplex& cx, Theory theory);

/// Adjoint of the operator leaving (p,q), i.e. the map (p,q) -> source
/// bidegree given by the conjugate transpose in the orthonormal monomial
/// basis.  Partial: (p,q) -> (p-1,q); Bar: (p,q) -> (p,q-1); D is graded,
/// Lambda^p -> Lambda^{p-1} (pass q = 0).
Matrix adjoint_matrix(const ModelSpec& spec, Op which, int p, int q);

enum class LaplacianKind { BC, Aeppli };

struct LaplacianSpec {
  LaplacianKind which = LaplacianKind::BC;
  std::map<CellKey, Matrix> matrices;
};

LaplacianSpec laplacian(const ModelSpec& spec, LaplacianKind which);

struct DecompositionCell {
  int harmonic_dim = 0;
  int middle_dim = 0;  // Im(d1 d2) for BC, Im d1 + Im d2 for Aeppli
  int last_dim = 0;    // Im d1* + Im d2* for BC, Im (d1 d2)* for Aeppli
  bool dims_sum = false;
  bool intersections_trivial = false;
  bool orthogonal = false;
  bool ok() const { return dims_sum && intersections_trivial && orthogonal; }
};

struct DecompositionReport {
  LaplacianKind which = LaplacianKind::BC;
  std::map<CellKey, DecompositionCell> cells;
  bool ok() const;
};

DecompositionReport decomposition_check(const ModelSpec& spec, LaplacianKind which);

struct DualityReport {
  /// (p,q) -> (dim H_BC^{p,q}, dim H_A^{n-p,n-q}).
  std::map<CellKey, std::pair<int, int>> pairs;
  bool ok() const;
};

/// Requires homological orientability (one-dimensional top cohomology);
/// throws NotOrientable otherwise.
DualityReport bc_aeppli_duality_check(const ModelSpec& spec);

}  // namespace folcoh
