#include "deltachroma/xpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace deltachroma {

XPoly::XPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

XPoly::XPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::x_power(int k, Rational coeff) {
  if (coeff == 0) return XPoly();
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c[static_cast<size_t>(k)] = std::move(coeff);
  return XPoly(std::move(c));
}

Rational XPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

XPoly XPoly::operator+(const XPoly& o) const {
  XPoly r = *this;
  r += o;
  return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
  XPoly r = *this;
  r -= o;
  return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
  if (is_zero() || o.is_zero()) return XPoly();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return XPoly(std::move(c));
}

XPoly& XPoly::operator*=(const XPoly& o) {
  *this = *this * o;
  return *this;
}

XPoly XPoly::operator*(const Rational& s) const {
  if (s == 0) return XPoly();
  XPoly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

bool XPoly::operator<(const XPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

Rational XPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

namespace {

std::string rational_str(const Rational& r) { return r.str(); }

// Renders |coeff| * x^p without a leading sign.
std::string term_str(const Rational& abs_coeff, int p) {
  if (p == 0) return rational_str(abs_coeff);
  std::string xs = (p == 1) ? "x" : "x^" + std::to_string(p);
  if (abs_coeff == 1) return xs;
  return rational_str(abs_coeff) + "*" + xs;
}

}  // namespace

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int p = degree(); p >= 0; --p) {
    const Rational& c = coeffs_[static_cast<size_t>(p)];
    if (c == 0) continue;
    if (out.empty()) {
      out += (c < 0 ? "-" : "");
    } else {
      out += (c < 0 ? "-" : "+");
    }
    out += term_str(c < 0 ? Rational(-c) : c, p);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
};

BigInt parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw std::invalid_argument("expected digits in polynomial: " + c.s);
  return BigInt(c.s.substr(start, c.i - start));
}

Rational parse_rational(Cursor& c) {
  BigInt num = parse_integer(c);
  if (!c.done() && c.peek() == '/') {
    ++c.i;
    BigInt den = parse_integer(c);
    if (den == 0) throw std::invalid_argument("zero denominator in polynomial: " + c.s);
    return Rational(num, den);
  }
  return Rational(num);
}

}  // namespace

XPoly XPoly::parse(const std::string& text) {
  Cursor c{text};
  if (c.done()) throw std::invalid_argument("empty polynomial string");
  XPoly result;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in polynomial: " + text);
    }
    first = false;
    Rational coeff(1);
    bool have_coeff = false;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_rational(c);
      have_coeff = true;
    }
    int power = 0;
    bool have_x = false;
    if (!c.done() && c.peek() == '*') {
      ++c.i;
      if (c.done() || c.peek() != 'x') throw std::invalid_argument("expected x after '*': " + text);
    }
    if (!c.done() && c.peek() == 'x') {
      ++c.i;
      have_x = true;
      power = 1;
      if (!c.done() && c.peek() == '^') {
        ++c.i;
        power = static_cast<int>(parse_integer(c));
      }
    }
    if (!have_coeff && !have_x) throw std::invalid_argument("malformed term in polynomial: " + text);
    result += XPoly::x_power(power, Rational(sign) * coeff);
  }
  return result;
}

// ---------------------------------------------------------------------------
// TPoly

TPoly::TPoly(std::vector<XPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPoly TPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return XPoly();
  return coeffs_[static_cast<size_t>(k)];
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

TPoly TPoly::operator+(const TPoly& o) const {
  TPoly r = *this;
  r += o;
  return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return TPoly();
  std::vector<XPoly> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return TPoly(std::move(c));
}

XPoly TPoly::evaluate(const Rational& t) const {
  XPoly acc;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * XPoly(t) + coeffs_[i];
  return acc;
}

TPoly TPoly::t_power(int k, XPoly coeff) {
  if (coeff.is_zero()) return TPoly();
  std::vector<XPoly> c(static_cast<size_t>(k) + 1);
  c[static_cast<size_t>(k)] = std::move(coeff);
  return TPoly(std::move(c));
}

std::string TPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int p = degree(); p >= 0; --p) {
    const XPoly& c = coeffs_[static_cast<size_t>(p)];
    if (c.is_zero()) continue;
    // Single-term coefficients get rendered inline; anything else is parenthesized.
    bool monomial = true;
    int nonzero = 0;
    for (const auto& q : c.coeffs())
      if (q != 0) ++nonzero;
    monomial = (nonzero == 1);
    std::string cs = c.to_string();
    std::string piece;
    if (p == 0) {
      piece = monomial ? cs : "(" + cs + ")";
    } else {
      std::string ts = (p == 1) ? "t" : "t^" + std::to_string(p);
      if (monomial && cs == "1")
        piece = ts;
      else if (monomial && cs == "-1")
        piece = "-" + ts;
      else if (monomial)
        piece = cs + "*" + ts;
      else
        piece = "(" + cs + ")*" + ts;
    }
    if (!out.empty() && piece[0] != '-') out += "+";
    out += piece;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// CPoly

void CPoly::add_term(const std::vector<int>& exponents, const XPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly r = *this;
  r += o;
  return r;
}

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly r(num_vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(e1);
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

CPoly CPoly::constant(int num_vars, const XPoly& c) {
  CPoly r(num_vars);
  r.add_term(std::vector<int>(static_cast<size_t>(num_vars), 0), c);
  return r;
}

CPoly CPoly::power_sum(int num_vars, int k) {
  CPoly r(num_vars);
  for (int i = 0; i < num_vars; ++i) {
    std::vector<int> e(static_cast<size_t>(num_vars), 0);
    e[static_cast<size_t>(i)] = k;
    r.add_term(e, XPoly(1));
  }
  return r;
}

std::string CPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending exponent vectors put c1-leading monomials first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "c" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.to_string();
    std::string piece;
    if (mono.empty())
      piece = cs;
    else if (cs == "1")
      piece = mono;
    else if (cs == "-1")
      piece = "-" + mono;
    else if (c.coeffs().size() == 1)
      piece = cs + "*" + mono;
    else
      piece = "(" + cs + ")*" + mono;
    if (!out.empty() && piece[0] != '-') out += "+";
    out += piece;
  }
  return out;
}

}  // namespace deltachroma
