#include "deltachroma/linalg.hpp"

#include "deltachroma/setsystem.hpp"

namespace deltachroma {

int RowSpace::reduce(std::vector<Rational>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[static_cast<size_t>(p)] == 0) continue;
    const Rational f = v[static_cast<size_t>(p)];
    for (int j = 0; j < dim_; ++j) v[static_cast<size_t>(j)] -= f * rows_[r][static_cast<size_t>(j)];
  }
  for (int j = 0; j < dim_; ++j)
    if (v[static_cast<size_t>(j)] != 0) return j;
  return -1;
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != dim_) throw Error("vector dimension mismatch");
  int pivot = reduce(v);
  if (pivot < 0) return false;
  const Rational inv = Rational(1) / v[static_cast<size_t>(pivot)];
  for (auto& x : v) x *= inv;
  // Keep stored rows reduced against the new one.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = rows_[r][static_cast<size_t>(pivot)];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j)
      rows_[r][static_cast<size_t>(j)] -= f * v[static_cast<size_t>(j)];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
  if (static_cast<int>(v.size()) != dim_) throw Error("vector dimension mismatch");
  return reduce(v) < 0;
}

std::vector<Rational> xpoly_to_vector(const XPoly& p, int dimension) {
  if (p.degree() >= dimension) throw Error("polynomial degree exceeds vector dimension");
  std::vector<Rational> v(static_cast<size_t>(dimension), Rational(0));
  for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i)] = p.coeff(i);
  return v;
}

}  // namespace deltachroma
