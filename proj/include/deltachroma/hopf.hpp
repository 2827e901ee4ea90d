#pragma once

// The Hopf algebra spanned by canonical delta-matroid classes: coproduct by
// ground-set splitting, the character taking 1/x/-1 on the three one-element
// classes, iterated-coproduct compositions, and the projection onto
// primitives along decomposables.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "deltachroma/setsystem.hpp"
#include "deltachroma/xpoly.hpp"

namespace deltachroma {

// Finite linear combination of canonical delta-matroid classes with
// polynomial-in-x coefficients. Keys are always canonical forms; zero
// coefficients are dropped.
class HopfElement {
 public:
  HopfElement() = default;

  static HopfElement unit();                       // the empty-ground-set class
  static HopfElement basis(const DeltaMatroid& d); // canonicalizes its argument

  const std::map<SetSystem, XPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Ground-set size shared by all terms; nullopt when empty or mixed.
  std::optional<int> grading() const;

  void add_term(const SetSystem& canonical_key, const XPoly& coeff);

  HopfElement& operator+=(const HopfElement& o);
  HopfElement operator+(const HopfElement& o) const;
  HopfElement operator-(const HopfElement& o) const;
  HopfElement operator*(const XPoly& s) const;
  HopfElement operator*(const HopfElement& o) const;  // bilinear disjoint union
  bool operator==(const HopfElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const HopfElement& o) const { return !(*this == o); }

 private:
  std::map<SetSystem, XPoly> terms_;
};

class TensorElement {
 public:
  using Key = std::pair<SetSystem, SetSystem>;

  const std::map<Key, XPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& key, const XPoly& coeff);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement operator-(const TensorElement& o) const;
  TensorElement swapped() const;  // exchanges the tensor factors
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

 private:
  std::map<Key, XPoly> terms_;
};

// Splits each basis term over all 2^n ordered bipartitions of its ground set.
TensorElement coproduct(const HopfElement& h);
TensorElement coproduct_basis(const DeltaMatroid& d);

// Coproduct minus h (x) 1 minus 1 (x) h; defined for positive gradings.
TensorElement reduced_coproduct(const HopfElement& h);

// The character: zero on any term with a connected factor of size > 1,
// otherwise the product over one-element factors of
//   ({1};{{}}) -> 1,  ({1};{{1}}) -> x,  ({1};{{},{1}}) -> -1.
XPoly character_xi(const DeltaMatroid& d);
XPoly character_xi(const HopfElement& h);

// xi(D|_U) for every U below the ground set, indexed by mask.
std::vector<XPoly> xi_restriction_table(const DeltaMatroid& d);

// xi^(a): sum over ordered tuples of disjoint subsets covering the ground
// set with |U_i| = a_i of the product of character values on restrictions.
// Requires h homogeneous with grading equal to the weight of a.
XPoly xi_composition(const std::vector<int>& parts, const HopfElement& h);
XPoly xi_composition(const std::vector<int>& parts, const DeltaMatroid& d);

// First Eulerian idempotent: pi(h) = sum_{k>=1} ((-1)^(k-1)/k) m^(k-1) of the
// (k-1)-fold reduced coproduct. Annihilates products of positive-grading
// elements and fixes primitives; requires h homogeneous of grading >= 1.
HopfElement primitive_projection(const HopfElement& h);

// character_xi(primitive_projection(D)) computed without materializing the
// projection: the character is multiplicative, so each ordered set partition
// contributes the product of restriction values directly.
XPoly character_of_primitive_projection(const DeltaMatroid& d);

}  // namespace deltachroma
