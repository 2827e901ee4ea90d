#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "deltachroma/binary.hpp"
#include "deltachroma/graphs.hpp"
#include "deltachroma/hopf.hpp"
#include "deltachroma/linalg.hpp"
#include "deltachroma/symfunc.hpp"
#include "test_util.hpp"

using namespace deltachroma;
using dctest::dm;
using dctest::set_of;

namespace {

HopfElement unit() { return HopfElement::unit(); }

TensorElement tensor_of(const HopfElement& a, const HopfElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term({ka, kb}, ca * cb);
  return out;
}

}  // namespace

TEST_CASE("coproduct on the one-element x class") {
  auto d13 = dm(1, {{1}});
  TensorElement expect = tensor_of(unit(), HopfElement::basis(d13));
  expect += tensor_of(HopfElement::basis(d13), unit());
  CHECK(coproduct(HopfElement::basis(d13)) == expect);
}

TEST_CASE("coproduct on the K2 class") {
  auto k2 = dm(2, {{}, {1, 2}});
  auto d11 = HopfElement::basis(dm(1, {{}}));
  TensorElement expect = tensor_of(unit(), HopfElement::basis(k2));
  expect += tensor_of(HopfElement::basis(k2), unit());
  expect += tensor_of(d11, d11);
  expect += tensor_of(d11, d11);
  CHECK(coproduct(HopfElement::basis(k2)) == expect);
}

TEST_CASE("coproduct of the unit") {
  CHECK(coproduct(unit()) == tensor_of(unit(), unit()));
}

TEST_CASE("coassociativity and cocommutativity through grading 4") {
  using Triple = std::map<std::tuple<SetSystem, SetSystem, SetSystem>, XPoly>;
  auto add = [](Triple& t, const std::tuple<SetSystem, SetSystem, SetSystem>& key,
                const XPoly& c) {
    auto it = t.find(key);
    if (it == t.end())
      t.emplace(key, c);
    else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  };
  for (int n = 0; n <= 4; ++n)
    for (const auto& d : enumerate_binary_delta_matroids(n, false)) {
      TensorElement once = coproduct_basis(d);
      CHECK(once.swapped() == once);  // cocommutativity
      Triple left, right;
      for (const auto& [pair, c] : once.terms()) {
        TensorElement left_inner = coproduct_basis(trusted_delta_matroid(pair.first));
        for (const auto& [inner, c2] : left_inner.terms())
          add(left, {inner.first, inner.second, pair.second}, c * c2);
        TensorElement right_inner = coproduct_basis(trusted_delta_matroid(pair.second));
        for (const auto& [inner, c2] : right_inner.terms())
          add(right, {pair.first, inner.first, inner.second}, c * c2);
      }
      CHECK(left == right);  // coassociativity
    }
}

TEST_CASE("character values on small classes") {
  CHECK(character_xi(dm(1, {{}, {1}})) == XPoly(-1));
  CHECK(character_xi(dm(1, {{}})) == XPoly(1));
  CHECK(character_xi(dm(1, {{1}})) == XPoly::x_power(1));
  auto squared = HopfElement::basis(dm(1, {{1}})) * HopfElement::basis(dm(1, {{1}}));
  CHECK(character_xi(squared) == XPoly::x_power(2));
  CHECK(character_xi(dm(2, {{}, {1, 2}})) == XPoly(0));
  CHECK(character_xi(dm(2, {{1}, {2}})) == XPoly(0));
}

TEST_CASE("character agrees with the factorization route") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& fam : dctest::all_proper_families(n)) {
      SetSystem s(n, fam);
      if (sea_violation(s)) continue;
      DeltaMatroid d = trusted_delta_matroid(s);
      auto f = factorize_connected(d);
      XPoly by_factors(1);
      for (const auto& factor : f.factors) {
        if (factor.size() != 1) {
          by_factors = XPoly(0);
          break;
        }
        if (factor.feasible() == std::vector<Mask>{0})
          by_factors *= XPoly(1);
        else if (factor.feasible() == std::vector<Mask>{1})
          by_factors *= XPoly::x_power(1);
        else
          by_factors *= XPoly(-1);
      }
      CHECK(character_xi(d) == by_factors);
    }
}

TEST_CASE("character is multiplicative") {
  auto classes1 = enumerate_binary_delta_matroids(1, false);
  auto classes2 = enumerate_binary_delta_matroids(2, false);
  for (const auto& a : classes2)
    for (const auto& b : classes2)
      CHECK(character_xi(HopfElement::basis(a) * HopfElement::basis(b)) ==
            character_xi(a) * character_xi(b));
  for (const auto& a : classes1)
    for (const auto& b : classes2)
      CHECK(character_xi(HopfElement::basis(a) * HopfElement::basis(b)) ==
            character_xi(a) * character_xi(b));
}

TEST_CASE("character restricted to framed-graph images") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : dctest::all_framed_graphs(n)) {
      XPoly value = character_xi(delta_matroid_of_framed_graph(g));
      if (g.edge_count() == 0) {
        int framed = popcount(g.framing_mask());
        XPoly expect = (framed % 2) ? XPoly(-1) : XPoly(1);
        CHECK(value == expect);
      } else if (n >= 2) {
        // Connected graphs with at least two vertices evaluate to zero.
        Mask reached = 1;
        for (int step = 0; step < n; ++step)
          for (int v = 0; v < n; ++v)
            if (reached & (Mask{1} << v)) reached |= g.neighbors(v);
        if (reached == (Mask{1} << n) - 1) CHECK(value == XPoly(0));
      }
    }
}

TEST_CASE("xi composition examples") {
  auto k2 = dm(2, {{}, {1, 2}});
  CHECK(xi_composition({2}, k2) == character_xi(k2));
  CHECK(xi_composition({1, 1}, k2) == XPoly(2));
  CHECK(xi_composition({1, 1}, dm(2, {{1}, {2}})) == XPoly::x_power(2, 2));
  CHECK_THROWS(xi_composition({1, 1, 1}, k2));
  CHECK_THROWS(xi_composition({1, 0, 1}, k2));
}

TEST_CASE("xi composition is independent of part order") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& d : enumerate_binary_delta_matroids(n, false)) {
      for (const Partition& a : partitions_of(n)) {
        std::vector<int> parts = a.parts();
        std::sort(parts.begin(), parts.end());
        XPoly reference = xi_composition(parts, d);
        do {
          CHECK(xi_composition(parts, d) == reference);
        } while (std::next_permutation(parts.begin(), parts.end()));
      }
    }
}

TEST_CASE("primitive projection on grading one is the identity") {
  for (const auto& d : enumerate_binary_delta_matroids(1, false)) {
    HopfElement h = HopfElement::basis(d);
    CHECK(primitive_projection(h) == h);
  }
}

TEST_CASE("primitive projection annihilates squares") {
  auto d13 = HopfElement::basis(dm(1, {{1}}));
  CHECK(primitive_projection(d13 * d13).is_zero());
}

TEST_CASE("the digon projection example") {
  auto digon = dm(2, {{1}, {2}});
  auto x_elt = HopfElement::basis(dm(1, {{1}}));
  HopfElement expect = HopfElement::basis(digon) - x_elt * x_elt;
  CHECK(primitive_projection(HopfElement::basis(digon)) == expect);
  CHECK(character_xi(primitive_projection(HopfElement::basis(digon))) == -XPoly::x_power(2));
}

TEST_CASE("projection properties at gradings 2 and 3") {
  for (int n = 2; n <= 3; ++n) {
    auto classes = enumerate_binary_delta_matroids(n, false);
    for (const auto& d : classes) {
      HopfElement pi = primitive_projection(HopfElement::basis(d));
      if (!pi.is_zero()) {
        CHECK(primitive_projection(pi) == pi);      // idempotent
        CHECK(reduced_coproduct(pi).is_zero());     // lands in primitives
      }
    }
    // Products of positive-grading elements are annihilated.
    for (int k = 1; k < n; ++k)
      for (const auto& a : enumerate_binary_delta_matroids(k, false))
        for (const auto& b : enumerate_binary_delta_matroids(n - k, false))
          CHECK(primitive_projection(HopfElement::basis(a) * HopfElement::basis(b)).is_zero());
  }
}

TEST_CASE("basis terms split into projection plus decomposables") {
  for (int n = 2; n <= 3; ++n) {
    auto classes = enumerate_binary_delta_matroids(n, false);
    std::map<SetSystem, int> index;
    for (const auto& d : classes) index.emplace(d.system(), static_cast<int>(index.size()));
    auto vec_of = [&](const HopfElement& h) {
      std::vector<Rational> v(classes.size(), Rational(0));
      for (const auto& [key, coeff] : h.terms()) {
        REQUIRE(coeff.degree() <= 0);
        v[static_cast<size_t>(index.at(key))] = coeff.coeff(0);
      }
      return v;
    };
    RowSpace products(static_cast<int>(classes.size()));
    for (int k = 1; k < n; ++k)
      for (const auto& a : enumerate_binary_delta_matroids(k, false))
        for (const auto& b : enumerate_binary_delta_matroids(n - k, false))
          products.insert(vec_of(HopfElement::basis(a) * HopfElement::basis(b)));
    for (const auto& d : classes) {
      HopfElement h = HopfElement::basis(d);
      HopfElement rest = h - primitive_projection(h);
      CHECK(products.contains(vec_of(rest)));
    }
  }
}

TEST_CASE("fast projection character equals the projection composed with xi") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : enumerate_binary_delta_matroids(n, false))
      CHECK(character_of_primitive_projection(d) ==
            character_xi(primitive_projection(HopfElement::basis(d))));
}

TEST_CASE("grading bookkeeping") {
  auto mixed = HopfElement::basis(dm(1, {{}})) + unit();
  CHECK(!mixed.grading().has_value());
  CHECK_THROWS(primitive_projection(mixed));
  CHECK_THROWS(reduced_coproduct(unit()));
  CHECK(primitive_projection(HopfElement()).is_zero());
}
