#pragma once

// Minimal exact row-space tooling over Q: incremental rank and membership
// tests by reduced-row-echelon insertion.

#include <vector>

#include "deltachroma/xpoly.hpp"

namespace deltachroma {

class RowSpace {
 public:
  explicit RowSpace(int dimension) : dim_(dimension) {}

  int ambient_dimension() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& basis() const { return rows_; }

  // Returns true if the vector enlarged the space.
  bool insert(std::vector<Rational> v);

  bool contains(std::vector<Rational> v) const;

 private:
  // Reduces v against the stored echelon rows; returns the pivot column or
  // -1 when v reduces to zero.
  int reduce(std::vector<Rational>& v) const;

  int dim_;
  std::vector<std::vector<Rational>> rows_;  // echelon, pivot = first nonzero, scaled to 1
  std::vector<int> pivots_;
};

// Coefficient vector of p over powers 0..dimension-1; throws if p is too big.
std::vector<Rational> xpoly_to_vector(const XPoly& p, int dimension);

}  // namespace deltachroma
