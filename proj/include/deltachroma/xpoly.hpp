#pragma once

// Exact coefficient arithmetic: rationals, univariate polynomials in the
// formal parameter x, univariate polynomials in t over Q[x], and dense
// multivariate polynomials in finitely many color variables c_1..c_N.
//
// Everything is exact; identities downstream are checked as polynomial
// identities, never as sampled evaluations.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace deltachroma {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Polynomial in x over Q. Coefficient i is the coefficient of x^i;
// no trailing zeros are stored, so the zero polynomial has no terms.
class XPoly {
 public:
  XPoly() = default;
  XPoly(int constant) : coeffs_{constant ? std::vector<Rational>{Rational(constant)} : std::vector<Rational>{}} {}
  explicit XPoly(const Rational& constant);
  explicit XPoly(std::vector<Rational> coeffs);  // trims trailing zeros

  static XPoly x_power(int k, Rational coeff = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly& operator*=(const XPoly& o);
  XPoly operator*(const Rational& s) const;
  bool operator==(const XPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const XPoly& o) const { return coeffs_ != o.coeffs_; }
  bool operator<(const XPoly& o) const;  // ordering for use as map key

  Rational evaluate(const Rational& x) const;

  // Canonical string form, descending powers: "0", "-1", "x", "2*x^2-1", "3/2*x^2-1".
  std::string to_string() const;
  // Parses the canonical syntax (whitespace tolerated). Throws std::invalid_argument.
  static XPoly parse(const std::string& text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline XPoly operator*(const Rational& s, const XPoly& p) { return p * s; }

// Polynomial in t with XPoly coefficients (the target of p_k := t).
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<XPoly> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  XPoly coeff(int k) const;
  const std::vector<XPoly>& coeffs() const { return coeffs_; }

  TPoly& operator+=(const TPoly& o);
  TPoly operator+(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const TPoly& o) const { return coeffs_ != o.coeffs_; }

  XPoly evaluate(const Rational& t) const;

  static TPoly t_power(int k, XPoly coeff = XPoly(1));
  std::string to_string() const;  // e.g. "t^2-t", "x*t", "(x^2-1)*t"

 private:
  void trim();
  std::vector<XPoly> coeffs_;
};

// Polynomial in the color variables c_1..c_N with XPoly coefficients,
// stored as exponent vector -> coefficient. Exponent vectors all have
// length N and are kept free of zero-coefficient entries.
class CPoly {
 public:
  explicit CPoly(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, XPoly>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponents, const XPoly& coeff);
  CPoly& operator+=(const CPoly& o);
  CPoly operator+(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  bool operator==(const CPoly& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  static CPoly constant(int num_vars, const XPoly& c);
  // c_1^k + c_2^k + ... + c_N^k
  static CPoly power_sum(int num_vars, int k);

  std::string to_string() const;

 private:
  int num_vars_;
  std::map<std::vector<int>, XPoly> terms_;
};

}  // namespace deltachroma
