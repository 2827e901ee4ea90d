#pragma once

// Symmetric functions in the power-sum basis over Q[x], the monomial-basis
// transition machinery, and the chromatic morphism into them.

#include <map>
#include <string>
#include <vector>

#include "deltachroma/hopf.hpp"
#include "deltachroma/xpoly.hpp"

namespace deltachroma {

inline constexpr int kPartitionWeightCap = 12;

// Weakly decreasing positive parts; the empty partition has weight 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts descending, rejects non-positive parts

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }

  // Serialization order: lexicographic on the parts vector, so within one
  // weight (1,1,..) comes first and (n) last.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  std::string to_string() const;  // "[2,1]"

 private:
  std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int n);

// Element of Q[x][p_1, p_2, ...]: partition lambda indexes the power-sum
// monomial p_lambda.
class SymFunc {
 public:
  SymFunc() = default;

  static SymFunc power_sum(const Partition& p, XPoly coeff = XPoly(1));

  const std::map<Partition, XPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  XPoly coeff(const Partition& p) const;

  void add_term(const Partition& p, const XPoly& coeff);
  SymFunc& operator+=(const SymFunc& o);
  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const XPoly& s) const;
  SymFunc operator*(const SymFunc& o) const;  // p_lambda p_mu = p_{lambda union mu}
  bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  std::string to_string() const;  // "p[1,1]:1, p[2]:-1"

 private:
  std::map<Partition, XPoly> terms_;
};

// Transition matrix at one weight: entry [i][j] is the coefficient of
// m_{mu_j} in p_{lambda_i}, with both indices running over partitions_of(w)
// in serialization order. Cached per weight; thread-safe.
const std::vector<std::vector<Rational>>& p_to_m_matrix(int weight);
// Its exact inverse: coefficient of p_{mu_j} in m_{lambda_i}.
const std::vector<std::vector<Rational>>& m_to_p_matrix(int weight);

// The standard monomial symmetric function m_a written in power sums.
SymFunc monomial_in_power_sums(const Partition& a);

// The universal morphism into (P, zeta): Psi(h) = sum_{a |- n} xi^(a)(h) m_a.
// Requires h homogeneous; the result is quasihomogeneous of degree n.
SymFunc chromatic(const HopfElement& h);

// Substitutes p_k := t for every k.
TPoly specialize_all(const SymFunc& s);

// Substitutes p_k := c_1^k + ... + c_N^k and expands.
CPoly evaluate_truncated(const SymFunc& s, int num_vars);

}  // namespace deltachroma
