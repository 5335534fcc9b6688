#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folcoh/linalg.hpp"
#include "folcoh/scalar.hpp"

namespace folcoh {

enum class GenType { Holo, Antiholo, Real };

/// Degree-one algebra generator.  Holo/Real carry bidegree (1,0),
/// Antiholo (0,1); real symplectic models leave the q-slot unused.
struct Generator {
  std::string symbol;
  GenType type = GenType::Real;
};

/// coeff * g_i ^ g_j with i < j.
struct WedgeTerm {
  Scalar coeff;
  int i = 0, j = 0;
  bool operator==(const WedgeTerm&) const = default;
};

/// Normalized 2-form: terms sorted by (i,j), i < j, nonzero coefficients,
/// at most one term per monomial.
using TwoForm = std::vector<WedgeTerm>;

TwoForm normalize_two_form(TwoForm t);

/// A finite invariant-form model: exterior algebra generated in degree one
/// with constant structure coefficients.
struct ModelSpec {
  std::string name;
  CoeffField field = CoeffField::Rational;
  std::vector<Generator> generators;
  std::vector<TwoForm> d;        // differential of each generator
  std::vector<int> conjugation;  // involution on generator indices; empty for real models
  std::optional<TwoForm> omega;
  int half_codim = 0;

  int num_generators() const { return int(generators.size()); }
  bool is_complex() const { return !conjugation.empty(); }
  int count(GenType t) const;
};

/// Strictly increasing generator-index list; the empty list is the
/// degree-zero basis element.
using Monomial = std::vector<int>;

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::string summary() const;
};

enum class Op { D, Partial, Bar };

ModelSpec parse_model(const std::string& text);
std::string to_model_json(const ModelSpec& spec);

ValidationReport validate(const ModelSpec& spec);

/// Lexicographically ordered monomials of bidegree (p,q); real models use
/// q = 0.  Out-of-range bidegrees yield the empty list.
std::vector<Monomial> monomial_basis(const ModelSpec& spec, int p, int q);

/// All monomials of total degree k, lex ordered (basis of Lambda^k).
std::vector<Monomial> total_basis(const ModelSpec& spec, int k);

/// Matrix of the operator from the (p,q) monomial basis.  Partial targets
/// (p+1,q), Bar targets (p,q+1); D on a complex model targets the stacked
/// basis (p+1,q) then (p,q+1), and on a real model ((p+1,0)).
Matrix operator_matrix(const ModelSpec& spec, Op which, int p, int q);

/// D as a matrix between total-degree bases Lambda^k -> Lambda^{k+1}.
Matrix total_operator_matrix(const ModelSpec& spec, int k);

ModelSpec builtin(const std::string& name, int half_codim = 1);

/// Complex q-torus: q closed holomorphic + q antiholomorphic generators
/// with the standard Kaehler form (Gaussian field).
ModelSpec complex_torus(int q);

/// Same model with scalars promoted to Q(i).
ModelSpec complexify(ModelSpec spec);

/// Wedge with sign bookkeeping; empty optional when indices repeat.
std::optional<std::pair<int, Monomial>> wedge_monomials(const Monomial& a, const Monomial& b);

/// d of a monomial as (coefficient, monomial) pairs in Lambda^{k+1}.
std::vector<std::pair<Scalar, Monomial>> differentiate(const ModelSpec& spec, const Monomial& m);

}  // namespace folcoh
