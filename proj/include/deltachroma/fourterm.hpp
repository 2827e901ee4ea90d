#pragma once

// Vassiliev moves on delta-matroids, 4-term relation checking, and the span
// of character values on primitive projections.

#include <functional>
#include <string>
#include <vector>

#include "deltachroma/linalg.hpp"
#include "deltachroma/setsystem.hpp"
#include "deltachroma/symfunc.hpp"
#include "deltachroma/xpoly.hpp"

namespace deltachroma {

// Second move on the raw family: toggles F u {a} for every F u {b} in Phi
// with F avoiding both a and b.
SetSystem second_vassiliev_family(const SetSystem& s, int a, int b);
// The paper's clause-by-clause form of the same move; used as a cross-check.
SetSystem second_vassiliev_family_alt(const SetSystem& s, int a, int b);

// First move on the raw family: for F containing both a and b, membership is
// toggled whenever F \ {a,b} is feasible; everything else is kept.
SetSystem first_vassiliev_family(const SetSystem& s, int a, int b);

DeltaMatroid second_vassiliev(const DeltaMatroid& d, int a, int b);
DeltaMatroid first_vassiliev(const DeltaMatroid& d, int a, int b);

struct FourTuple {
  DeltaMatroid d;
  DeltaMatroid d_first;        // D'_{ab}
  DeltaMatroid d_second;       // D~_{ab}
  DeltaMatroid d_both;         // D~'_{ab}
  int a;
  int b;
};

FourTuple four_term_tuple(const DeltaMatroid& d, int a, int b);

template <typename Value>
struct FourTermCheck {
  FourTuple tuple;
  Value lhs;  // f(D) - f(D'_{ab})
  Value rhs;  // f(D~_{ab}) - f(D~'_{ab})
  bool pass;
};

template <typename Invariant>
auto check_four_term(Invariant&& invariant, const DeltaMatroid& d, int a, int b) {
  FourTuple t = four_term_tuple(d, a, b);
  auto lhs = invariant(t.d) - invariant(t.d_first);
  auto rhs = invariant(t.d_second) - invariant(t.d_both);
  bool pass = (lhs == rhs);
  return FourTermCheck<decltype(lhs)>{std::move(t), std::move(lhs), std::move(rhs), pass};
}

// One failure found by a verification sweep. `tuple` is present for 4-term
// failures; `lhs`/`rhs` carry the rendered side values when they exist.
struct SweepWitness {
  std::string what;
  SetSystem d;
  int a = -1;
  int b = -1;
  std::optional<FourTuple> tuple;
  std::string lhs;
  std::string rhs;
};

struct SweepReport {
  long long instances = 0;
  long long passes = 0;
  long long failures = 0;
  std::vector<SweepWitness> witnesses;
};

// Exhaustive 4-term sweep over all canonical binary delta-matroids of the
// given grading and all ordered pairs, for character_xi and/or chromatic.
SweepReport four_term_sweep(int grading, bool even_only, bool check_character,
                            bool check_chromatic, int jobs = 1);

// Move-algebra sweep: both moves are involutions, they commute, the two
// second-move definitions agree, and both moves preserve SEA and binariness.
SweepReport move_algebra_sweep(int grading, bool even_only, int jobs = 1);

// Graphical <=> empty-set-feasible over all enumerated binary delta-matroids
// of the grading.
SweepReport graphical_lemma_sweep(int grading, bool even_only = false);

// Quasi-tree delta-matroid equals the delta-matroid of the interlacement
// graph's adjacency matrix, over all chord diagrams with `chords` chords.
SweepReport interlacement_sweep(int chords);

struct SpanReport {
  int grading = 0;
  bool even_only = false;
  int class_count = 0;
  int dimension = 0;
  std::vector<XPoly> basis;
  std::vector<bool> monomial_in_span;        // index = power of x, 0..grading
  bool zero_linear_subspace_contained = false;  // {1, x^2, ..., x^n} all in span
  bool linear_term_in_span = false;             // whether x itself lies in the span
};

// Collects character_xi(primitive_projection(D)) over all enumerated classes
// of the grading and row-reduces the coefficient vectors over Q.
SpanReport primitive_value_span(int grading, bool even_only);

}  // namespace deltachroma
