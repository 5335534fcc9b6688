#pragma once

#include <map>
#include <optional>
#include <utility>

#include "folcoh/linalg.hpp"
#include "folcoh/model.hpp"

namespace folcoh {

using CellKey = std::pair<int, int>;

/// Bigraded space with anticommuting square-zero differentials delta1 of
/// order (1,0) and delta2 of order (0,1).  Either bounded (finite support)
/// or periodic under the shift (1,1), in which case `cells` stores one
/// window of representatives with q == 0 and (p,q) is read modulo the shift.
class DoubleComplex {
 public:
  std::map<CellKey, int> cells;          // nonzero dims only
  std::map<CellKey, Matrix> delta1;      // keyed by source cell
  std::map<CellKey, Matrix> delta2;
  std::optional<std::pair<int, int>> period;  // shift vector; only (1,1) supported

  bool periodic() const { return period.has_value(); }
  CellKey canonical(CellKey k) const;
  int cell_dim(int p, int q) const;
  Matrix d1(int p, int q) const;  // (p,q) -> (p+1,q)
  Matrix d2(int p, int q) const;  // (p,q) -> (p,q+1)

  /// Throws Error unless delta1^2 = delta2^2 = delta1 delta2 + delta2 delta1 = 0.
  void check_structure() const;

  int min_total_degree() const;  // over the stored window
  int max_total_degree() const;
};

/// Z-graded complex with d of order +1 and optionally d_lambda of order -1.
struct CochainComplex {
  std::map<int, int> degrees;  // nonzero dims only
  std::map<int, Matrix> d;         // keyed by source degree j: V^j -> V^{j+1}
  std::map<int, Matrix> d_lambda;  // V^j -> V^{j-1}; empty map if absent

  bool has_d_lambda() const { return !d_lambda.empty(); }
  int dim(int j) const;
  Matrix d_at(int j) const;
  Matrix dl_at(int j) const;
  int min_degree() const;
  int max_degree() const;
};

enum class Filtration { First, Second };

struct SpectralPage {
  int r = 0;
  Filtration filtration = Filtration::First;
  std::map<CellKey, int> dims;
  std::map<CellKey, int> differential_ranks;  // rank of d_r out of each cell
};

/// The Dolbeault double complex of a validated complex model:
/// delta1 = partial, delta2 = bar.
DoubleComplex double_complex_from_model(const ModelSpec& spec);

/// Doub^{p,q}(V) := V^{order1 p + order2 q} with the differentials re-graded
/// to orders (1,0)/(0,1).  Requires gcd(|order1|,|order2|) = 1 and both
/// differentials present.  For orders (1,-1) the result is periodic with
/// shift (1,1); other order pairs are rejected as unsupported.
DoubleComplex doub_construction(const CochainComplex& cx, int order1, int order2);

/// Total complex of a bounded double complex; throws Unbounded on periodic
/// input (its total degrees do not stabilize).
CochainComplex total_complex(const DoubleComplex& dc);

/// Dimension of Tot^n (works for bounded and periodic complexes).
int total_dim(const DoubleComplex& dc, int n);

/// Tot^n -> Tot^{n+1} assembled from the chosen differential components.
Matrix total_part_map(const DoubleComplex& dc, int n, bool use_delta1, bool use_delta2);

SpectralPage spectral_page(const DoubleComplex& dc, Filtration f, int r);

/// Smallest r >= 1 with all page differentials d_s = 0 for s >= r.
int degeneration_page(const DoubleComplex& dc, Filtration f);

}  // namespace folcoh
