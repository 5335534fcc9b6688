#include <doctest.h>

#include "folcoh/model.hpp"

using namespace folcoh;

namespace {

long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Basis-permutation matrix of conjugation (p,q) -> (q,p), entries +-1.
Matrix conj_matrix(const ModelSpec& spec, int p, int q) {
  auto src = monomial_basis(spec, p, q);
  auto dst = monomial_basis(spec, q, p);
  Matrix c(int(dst.size()), int(src.size()));
  for (int j = 0; j < int(src.size()); ++j) {
    Monomial m;
    for (int idx : src[j]) m.push_back(spec.conjugation[idx]);
    Monomial sorted;
    auto w = wedge_monomials(m, {});
    REQUIRE(w.has_value());
    for (int i = 0; i < int(dst.size()); ++i) {
      if (dst[i] == w->second) c.at(i, j) = Scalar(w->first);
    }
  }
  return c;
}

}  // namespace

TEST_CASE("parsing the torus document gives a zero differential") {
  ModelSpec torus = builtin("torus2q", 2);
  CHECK(torus.num_generators() == 4);
  for (const auto& t : torus.d) CHECK(t.empty());
  CHECK(validate(torus).ok());
}

TEST_CASE("the Heisenberg-type model matches its coframe derivatives") {
  // d(dz - x dy) = -dx ^ dy and the other three coframe forms are closed.
  ModelSpec m = builtin("heisenberg_symplectic");
  CHECK(m.num_generators() == 4);
  CHECK(m.half_codim == 2);
  REQUIRE(m.d[2].size() == 1);
  CHECK(m.d[2][0].i == 0);
  CHECK(m.d[2][0].j == 1);
  CHECK(m.d[2][0].coeff == Scalar(-1));
  CHECK(m.d[0].empty());
  CHECK(m.d[1].empty());
  CHECK(m.d[3].empty());
  REQUIRE(m.omega.has_value());
  CHECK(m.omega->size() == 2);
  CHECK(validate(m).ok());

  Matrix d1 = operator_matrix(m, Op::D, 1, 0);
  int nonzero_cols = 0;
  for (int j = 0; j < d1.cols(); ++j) {
    bool nz = false;
    for (int i = 0; i < d1.rows(); ++i) nz = nz || !d1.at(i, j).is_zero();
    nonzero_cols += nz;
  }
  CHECK(nonzero_cols == 1);
  CHECK(d1.at(0, 2) == Scalar(-1));  // a3 -> -a1^a2, first degree-2 monomial
}

TEST_CASE("parse failures carry positions and generator diagnostics") {
  CHECK_THROWS_AS(parse_model("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_model(R"({"name":"x","field":"rational","generators":[
    {"symbol":"g","type":"real"},{"symbol":"g","type":"real"}],"half_codim":1})"),
                  DuplicateGenerator);
  CHECK_THROWS_AS(parse_model(R"({"name":"x","field":"rational",
    "generators":[{"symbol":"g","type":"real"}],
    "d":{"h":[{"coeff":"1","wedge":["g","g"]}]},"half_codim":1})"),
                  UnknownGenerator);
}

TEST_CASE("a hand-built derivation violating d^2 = 0 parses but fails validate") {
  // d(g1) = g2^g3, d(g2) = g1^g4 gives d^2(g1) = -g1^g3^g4 != 0.
  ModelSpec bad = parse_model(R"({
    "name": "bad", "field": "rational",
    "generators": [{"symbol":"g1","type":"real"},{"symbol":"g2","type":"real"},
                   {"symbol":"g3","type":"real"},{"symbol":"g4","type":"real"}],
    "d": {"g1": [{"coeff":"1","wedge":["g2","g3"]}],
          "g2": [{"coeff":"1","wedge":["g1","g4"]}]},
    "half_codim": 2})");
  ValidationReport rep = validate(bad);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.checks[0].pass);  // d_squared_zero
}

TEST_CASE("complex_nonlemma validates with the Dolbeault identities") {
  ModelSpec m = builtin("complex_nonlemma");
  CHECK(m.is_complex());
  CHECK(m.half_codim == 3);
  CHECK(validate(m).ok());
  auto b10 = monomial_basis(m, 1, 0);
  CHECK(b10.size() == 3);
}

TEST_CASE("degenerate omega fails the maximal rank check") {
  ModelSpec m = parse_model(R"({
    "name": "deg", "field": "rational",
    "generators": [{"symbol":"a1","type":"real"},{"symbol":"a2","type":"real"},
                   {"symbol":"a3","type":"real"},{"symbol":"a4","type":"real"}],
    "d": {},
    "omega": [{"coeff":"1","wedge":["a1","a2"]}],
    "half_codim": 2})");
  ValidationReport rep = validate(m);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "omega_maximal_rank") {
      found = true;
      CHECK_FALSE(c.pass);
    }
  CHECK(found);
}

TEST_CASE("monomial bases are lex ordered with binomial counts") {
  ModelSpec m62 = builtin("complex_nonlemma");
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      CHECK(int(monomial_basis(m62, p, q).size()) == choose(3, p) * choose(3, q));
  CHECK(monomial_basis(m62, 0, 0).size() == 1);
  CHECK(monomial_basis(m62, 0, 0)[0].empty());

  ModelSpec m61 = builtin("heisenberg_symplectic");
  CHECK(total_basis(m61, 2).size() == 6);
  auto deg2 = total_basis(m61, 2);
  CHECK(deg2.front() == Monomial{0, 1});
  CHECK(deg2.back() == Monomial{2, 3});
}

TEST_CASE("bar operator of the complex_lemma model hits the (1,1) component") {
  // d(dz2 + conj(z1) dz1) = d(conj(z1)) ^ dz1, a (1,1) target.
  ModelSpec m = builtin("complex_lemma");
  CHECK(validate(m).ok());
  Matrix bar = operator_matrix(m, Op::Bar, 1, 0);
  // theta1 is closed, theta2 maps to the dzbar1 ^ dz1 component.
  for (int i = 0; i < bar.rows(); ++i) CHECK(bar.at(i, 0).is_zero());
  bool theta2_nonzero = false;
  for (int i = 0; i < bar.rows(); ++i) theta2_nonzero |= !bar.at(i, 1).is_zero();
  CHECK(theta2_nonzero);
  Matrix partial = operator_matrix(m, Op::Partial, 1, 0);
  CHECK(partial.is_zero());
}

TEST_CASE("d = partial + bar and all squares vanish on every builtin complex model") {
  for (const char* name : {"complex_nonlemma", "complex_lemma"}) {
    ModelSpec m = builtin(name);
    int n = m.num_generators();
    for (int k = 0; k <= n; ++k)
      CHECK((total_operator_matrix(m, k + 1) * total_operator_matrix(m, k)).is_zero());
    for (int p = 0; p <= m.half_codim; ++p) {
      for (int q = 0; q <= m.half_codim; ++q) {
        Matrix dp = operator_matrix(m, Op::Partial, p, q);
        Matrix db = operator_matrix(m, Op::Bar, p, q);
        Matrix stacked = operator_matrix(m, Op::D, p, q);
        CHECK(stacked == Matrix::vstack(dp, db));
      }
    }
  }
}

TEST_CASE("conjugation intertwines partial and bar") {
  for (const char* name : {"complex_nonlemma", "complex_lemma"}) {
    ModelSpec m = builtin(name);
    for (int p = 0; p <= m.half_codim; ++p) {
      for (int q = 0; q <= m.half_codim; ++q) {
        Matrix lhs = conj_matrix(m, p + 1, q) * operator_matrix(m, Op::Partial, p, q).conjugate();
        Matrix rhs = operator_matrix(m, Op::Bar, q, p) * conj_matrix(m, p, q);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("torus, any operator, any bidegree: zero matrix") {
  ModelSpec t = complex_torus(2);
  CHECK(validate(t).ok());
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      CHECK(operator_matrix(t, Op::Partial, p, q).is_zero());
      CHECK(operator_matrix(t, Op::Bar, p, q).is_zero());
    }
}

TEST_CASE("real models refuse the Dolbeault operators") {
  ModelSpec m = builtin("heisenberg_symplectic");
  CHECK_THROWS_AS(operator_matrix(m, Op::Partial, 1, 0), NotComplexModel);
  CHECK_THROWS_AS(builtin("no_such_model"), UnknownModel);
}

TEST_CASE("model json round-trips through the parser") {
  ModelSpec m = builtin("complex_lemma");
  ModelSpec back = parse_model(to_model_json(m));
  CHECK(back.name == m.name);
  CHECK(back.num_generators() == m.num_generators());
  for (int g = 0; g < m.num_generators(); ++g) CHECK(back.d[g] == m.d[g]);
  CHECK(back.conjugation == m.conjugation);
}
