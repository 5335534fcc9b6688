#pragma once

#include <map>

#include "folcoh/cohomology.hpp"
#include "folcoh/complexes.hpp"

namespace folcoh {

/// The operator families attached to a model with a valid two-form omega,
/// all expressed in the total-degree monomial bases.  Keys run over every
/// degree 0..2q; maps leaving the range are stored as empty-target zero
/// matrices so compositions stay well-typed.
struct SymplecticOperators {
  int half_codim = 0;
  std::map<int, Matrix> star_s;     // Lambda^k -> Lambda^{2q-k}
  std::map<int, Matrix> L;          // wedge with omega, Lambda^k -> Lambda^{k+2}
  std::map<int, Matrix> Lambda;     // Lambda^k -> Lambda^{k-2}
  std::map<int, Matrix> d_lambda;   // Lambda^k -> Lambda^{k-1}
  std::map<int, Matrix> pairing_G;  // bilinear extension of the inverse of omega
};

/// Assembles the star, Lefschetz, and d_lambda operators and verifies the
/// defining identities exactly during construction.  Throws
/// NoSymplecticForm / DegenerateForm on bad input.
SymplecticOperators build_operators(const ModelSpec& spec);

/// Z-graded complex of the model with both d and d_lambda attached.
CochainComplex symplectic_complex(const ModelSpec& spec);

struct PhiVerdict {
  bool invertible = false;
  bool intertwines = false;     // d Phi = Phi (d + (1/2i) d_lambda)
  bool decomposition = false;   // the images Phi(Lambda^k) are in direct sum
  std::map<int, int> u_dims;    // key q-k -> dim of the k-th image
  bool ok() const { return invertible && intertwines && decomposition; }
};

/// Builds Phi = e^{i omega} e^{Lambda/2i} on the Gaussian-field total
/// exterior algebra and checks the intertwining theorem.
PhiVerdict phi_intertwine_check(const ModelSpec& spec);

struct LefschetzCell {
  int map_rank = 0;
  int source_dim = 0;
  int target_dim = 0;
  bool is_iso = false;
};

struct LefschetzVerdict {
  std::map<int, LefschetzCell> per_k;
  bool overall = false;
};

/// Rank of [alpha] -> [omega^k ^ alpha] : H^{q-k} -> H^{q+k} for 0 <= k <= q.
LefschetzVerdict hard_lefschetz(const ModelSpec& spec);

struct LefschetzEquivalence {
  bool hard_lefschetz = false;
  bool quotient_iso = false;      // H(Omega, d_lambda) -> H(Omega/d Omega, d_lambda)
  bool closed_have_dl_reps = false;  // Ker d within Ker d_lambda + Im d
  bool ddlambda_lemma = false;
  bool agree() const {
    return hard_lefschetz == quotient_iso && quotient_iso == closed_have_dl_reps &&
           closed_have_dl_reps == ddlambda_lemma;
  }
};

LefschetzEquivalence lefschetz_equivalence_report(const ModelSpec& spec);

}  // namespace folcoh
