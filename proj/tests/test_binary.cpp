#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "deltachroma/binary.hpp"
#include "test_util.hpp"

using namespace deltachroma;
using dctest::dm;
using dctest::set_of;
using dctest::sys;

namespace {

std::vector<F2SymMatrix> all_symmetric_matrices(int n) {
  std::vector<F2SymMatrix> out;
  const int bits = n * (n + 1) / 2;
  for (std::uint32_t code = 0; code < (1u << bits); ++code) {
    F2SymMatrix a(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j, ++k)
        if ((code >> k) & 1) a.set_entry(i, j, true);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

TEST_CASE("matrices induce the expected small delta-matroids") {
  F2SymMatrix zero1(1);
  CHECK(delta_matroid_of_matrix(zero1) == dm(1, {{}}));
  F2SymMatrix one1(1);
  one1.set_entry(0, 0, true);
  CHECK(delta_matroid_of_matrix(one1) == dm(1, {{}, {1}}));
  F2SymMatrix k2(2);
  k2.set_entry(0, 1, true);
  CHECK(delta_matroid_of_matrix(k2) == dm(2, {{}, {1, 2}}));
}

TEST_CASE("matrix construction validates symmetry and size") {
  CHECK_THROWS(F2SymMatrix(2, {2u, 0u}));  // a01 = 1 but a10 = 0
  CHECK_NOTHROW(F2SymMatrix(2, {2u, 1u}));
  CHECK_THROWS_AS(F2SymMatrix(17), CapError);
}

TEST_CASE("reconstruction examples") {
  auto a = reconstruct_matrix(sys(2, {{}, {1}, {2}}));
  REQUIRE(a.has_value());
  CHECK(a->entry(0, 0));
  CHECK(a->entry(1, 1));
  CHECK(a->entry(0, 1));
  CHECK(!reconstruct_matrix(sys(1, {{1}})).has_value());
  auto unit = reconstruct_matrix(SetSystem::unit());
  REQUIRE(unit.has_value());
  CHECK(unit->size() == 0);
  CHECK_THROWS_AS(reconstruct_matrix(SetSystem(1, {})), ImproperError);
}

TEST_CASE("reconstruction round-trips every matrix") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& a : all_symmetric_matrices(n)) {
      DeltaMatroid d = delta_matroid_of_matrix(a);
      auto back = reconstruct_matrix(d.system());
      REQUIRE(back.has_value());
      CHECK(*back == a);
    }
}

TEST_CASE("matrix delta-matroids are even exactly when the diagonal vanishes") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_symmetric_matrices(n))
      CHECK(is_even(delta_matroid_of_matrix(a)) == (a.diagonal() == 0));
}

TEST_CASE("restriction commutes with principal submatrices") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_symmetric_matrices(n)) {
      DeltaMatroid d = delta_matroid_of_matrix(a);
      const Mask full = d.system().full_mask();
      for (Mask u = 0; u <= full; ++u)
        CHECK(restrict_to(d, u) == delta_matroid_of_matrix(a.principal_submatrix(u)));
    }
}

TEST_CASE("binary witnesses") {
  auto w = binary_witness(dm(1, {{1}}));
  REQUIRE(w.has_value());
  CHECK(*w == set_of({1}));
  for (const auto& a : all_symmetric_matrices(3)) {
    auto witness = binary_witness(delta_matroid_of_matrix(a));
    REQUIRE(witness.has_value());
    CHECK(*witness == 0);  // ascending scan hits the feasible empty set first
  }
}

// Regression constant from the first exhaustive scan: the ascending-code scan
// of all proper SEA-valid systems on 3 elements reaches this canonical form
// as the first non-binary delta-matroid.
TEST_CASE("the frozen smallest non-binary delta-matroid") {
  auto d = dm(3, {{}, {1}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(canonicalize(d.system()) == d.system());
  CHECK(!is_binary(d));
  // Independent of the feasible-only scan: no twist at all is graphical.
  const Mask full = d.system().full_mask();
  for (Mask f = 0; f <= full; ++f)
    CHECK(!reconstruct_matrix(twist(d, f).system()).has_value());
}

TEST_CASE("feasible-only twist scanning loses nothing") {
  // A graphical twist puts the empty set into Phi*F, which forces F feasible.
  for (const auto& fam : dctest::all_proper_families(3)) {
    SetSystem s(3, fam);
    if (sea_violation(s)) continue;
    DeltaMatroid d = trusted_delta_matroid(s);
    bool by_feasible = binary_witness(d).has_value();
    bool by_all = false;
    for (Mask f = 0; f <= s.full_mask(); ++f)
      if (reconstruct_matrix(twist(d, f).system())) by_all = true;
    CHECK(by_feasible == by_all);
  }
}

// Class counts are regression constants recorded from the first run of the
// enumeration; n = 1 additionally matches the three one-element classes.
TEST_CASE("enumeration counts and the grading-1 classes") {
  CHECK(enumerate_binary_delta_matroids(0, false).size() == 1);
  auto g1 = enumerate_binary_delta_matroids(1, false);
  REQUIRE(g1.size() == 3);
  CHECK(g1[0] == dm(1, {{}}));
  CHECK(g1[1] == dm(1, {{}, {1}}));
  CHECK(g1[2] == dm(1, {{1}}));
  CHECK(enumerate_binary_delta_matroids(2, false).size() == 11);
  CHECK(enumerate_binary_delta_matroids(3, false).size() == 45);
  CHECK(enumerate_binary_delta_matroids(4, false).size() == 228);
  CHECK(enumerate_binary_delta_matroids(0, true).size() == 1);
  CHECK(enumerate_binary_delta_matroids(1, true).size() == 2);
  CHECK(enumerate_binary_delta_matroids(2, true).size() == 5);
  CHECK(enumerate_binary_delta_matroids(3, true).size() == 14);
  CHECK(enumerate_binary_delta_matroids(4, true).size() == 45);
  CHECK_THROWS_AS(enumerate_binary_delta_matroids(5, false), CapError);
  CHECK_THROWS_AS(enumerate_binary_delta_matroids(6, false, true), CapError);
}

TEST_CASE("enumerated classes are canonical, binary, sorted, and twist-closed") {
  for (int n = 0; n <= 4; ++n) {
    auto classes = enumerate_binary_delta_matroids(n, false);
    std::set<SetSystem> index;
    for (const auto& d : classes) {
      CHECK(canonicalize(d.system()) == d.system());
      CHECK(is_binary(d));
      index.insert(d.system());
    }
    CHECK(std::is_sorted(classes.begin(), classes.end()));
    CHECK(index.size() == classes.size());
    if (n > 3) continue;  // twist closure is cheap only at small gradings
    for (const auto& d : classes)
      for (Mask f = 0; f <= d.system().full_mask(); ++f)
        CHECK(index.count(canonicalize(twist(d, f).system())) == 1);
  }
}

TEST_CASE("graphical is equivalent to a feasible empty set on binary classes") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& d : enumerate_binary_delta_matroids(n, false))
      CHECK(is_graphical(d) == d.system().contains(0));
}

TEST_CASE("even enumeration filters by parity") {
  for (const auto& d : enumerate_binary_delta_matroids(3, true)) CHECK(is_even(d));
}

TEST_CASE("evenness examples") {
  CHECK(is_even(dm(2, {{}, {1, 2}})));
  CHECK(!is_even(dm(1, {{}, {1}})));
  CHECK(is_even(dm(1, {{1}})));
}
