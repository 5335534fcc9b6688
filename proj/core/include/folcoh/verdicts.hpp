#pragma once

#include <array>
#include <map>

#include "folcoh/cohomology.hpp"
#include "folcoh/complexes.hpp"

namespace folcoh {

/// The delta1-delta2-lemma, decided by the definition and by the six
/// equivalent subspace equalities, all evaluated on every total degree.
/// Condition order: Ker d1 cap Ker d2 cap Im D = Im d1d2 (the definition);
/// Ker d2 cap Im d1 = Im d1d2 together with its mirror;
/// Ker d1 cap Ker d2 cap (Im d1 + Im d2) = Im d1d2;
/// Im d1 + Im d2 + Ker D = Ker d1d2;
/// Im d2 + Ker d1 = Ker d1d2 together with its mirror;
/// Im d1 + Im d2 + (Ker d1 cap Ker d2) = Ker d1d2.
struct LemmaVerdict {
  bool by_definition = false;
  std::array<bool, 6> six_conditions{};
  bool consistent = false;  // all seven booleans coincide

  bool holds() const { return by_definition; }
};

LemmaVerdict lemma_check(const DoubleComplex& dc);

struct DegreeInequality {
  int lhs = 0;
  int rhs = 0;
  bool equal() const { return lhs == rhs; }
  bool strict() const { return lhs > rhs; }
};

struct InequalityReport {
  std::map<int, DegreeInequality> per_degree;
  bool overall_equality = true;
  bool lemma = false;            // verdict of the matching lemma
  // overall_equality <=> lemma where that is a theorem; for the edge-cohomology
  // comparison only lemma => equality is checked (the converse can fail).
  bool lemma_equivalent = false;
};

/// Per total degree: dim BC + dim Aeppli against dim H_d1 + dim H_d2.
/// Equality can hold without the lemma, so only the implication from the
/// lemma is cross-checked.
InequalityReport froelicher_bigraded(const DoubleComplex& dc);

/// Per total degree: dim BC + dim Aeppli against twice the total cohomology.
/// Equality at every degree is equivalent to the lemma.
InequalityReport froelicher_bigraded_total(const DoubleComplex& dc);

/// Per degree j: dim H_{d+dl} + dim H_{ddl} against the de Rham dims at j
/// and 2q - j.
InequalityReport froelicher_symplectic(const CochainComplex& cx, int half_codim);

struct DegenerationVerdict {
  bool equality = false;       // Froelicher equality at every degree
  int page_first = 0;          // degeneration pages of the two filtrations
  int page_second = 0;
  bool lemma = false;          // Z-graded delta1-delta2-lemma
  bool equivalence_holds = false;  // (equality and pages == 1) <=> lemma
};

/// The equality-plus-degeneration criterion for a Z-graded complex with
/// differentials of coprime orders (only (1,-1) is representable).
DegenerationVerdict zgraded_equality_and_degeneration(const CochainComplex& cx, int order1,
                                                      int order2);

}  // namespace folcoh
