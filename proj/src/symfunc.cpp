#include "deltachroma/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace deltachroma {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw Error("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error("partition weight must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition(current));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  std::sort(out.begin(), out.end());
  return out;
}

SymFunc SymFunc::power_sum(const Partition& p, XPoly coeff) {
  SymFunc s;
  s.add_term(p, coeff);
  return s;
}

XPoly SymFunc::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? XPoly() : it->second;
}

void SymFunc::add_term(const Partition& p, const XPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  r += o;
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  SymFunc r = *this;
  for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
  return r;
}

SymFunc SymFunc::operator*(const XPoly& s) const {
  SymFunc r;
  for (const auto& [p, c] : terms_) r.add_term(p, c * s);
  return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  SymFunc r;
  for (const auto& [p1, c1] : terms_)
    for (const auto& [p2, c2] : o.terms_) {
      std::vector<int> merged = p1.parts();
      merged.insert(merged.end(), p2.parts().begin(), p2.parts().end());
      r.add_term(Partition(std::move(merged)), c1 * c2);
    }
  return r;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += ", ";
    out += "p" + p.to_string() + ":" + c.to_string();
  }
  return out;
}

namespace {

// Number of maps from the part instances of lambda onto the positions of mu
// such that the parts sent to position j sum to mu_j. Computed position by
// position over the multiset of remaining parts.
Rational map_count(const Partition& lambda, const Partition& mu) {
  std::vector<int> values;   // distinct part values of lambda
  std::vector<int> counts;   // multiplicities
  for (int p : lambda.parts()) {
    if (!values.empty() && values.back() == p) {
      ++counts.back();
    } else {
      values.push_back(p);
      counts.push_back(1);
    }
  }
  std::function<long long(std::vector<int>&, size_t)> rec = [&](std::vector<int>& rem,
                                                                size_t pos) -> long long {
    if (pos == mu.parts().size()) {
      for (int c : rem)
        if (c) return 0;
      return 1;
    }
    // Choose how many instances of each value go to position mu_pos.
    const int target = mu.parts()[pos];
    long long total = 0;
    std::vector<int> take(values.size(), 0);
    std::function<void(size_t, int, long long)> choose = [&](size_t vi, int remaining_sum,
                                                             long long ways) {
      if (remaining_sum == 0) {
        for (size_t i = 0; i < take.size(); ++i) rem[i] -= take[i];
        total += ways * rec(rem, pos + 1);
        for (size_t i = 0; i < take.size(); ++i) rem[i] += take[i];
        return;
      }
      if (vi == values.size()) return;
      long long binom = 1;
      for (int t = 0; t * values[vi] <= remaining_sum && t <= rem[vi]; ++t) {
        if (t > 0) binom = binom * (rem[vi] - t + 1) / t;
        take[vi] = t;
        choose(vi + 1, remaining_sum - t * values[vi], ways * binom);
      }
      take[vi] = 0;
    };
    choose(0, target, 1);
    return total;
  };
  std::vector<int> rem = counts;
  return Rational(rec(rem, 0));
}

struct TransitionTables {
  std::vector<std::vector<Rational>> p_to_m;
  std::vector<std::vector<Rational>> m_to_p;
};

const TransitionTables& tables_for(int weight) {
  if (weight < 0 || weight > kPartitionWeightCap)
    throw CapError("partition weight " + std::to_string(weight) + " over cap " +
                   std::to_string(kPartitionWeightCap));
  static std::mutex mu;
  static std::map<int, TransitionTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(weight);
  if (it != cache.end()) return it->second;

  const auto parts = partitions_of(weight);
  const size_t m = parts.size();
  TransitionTables t;
  t.p_to_m.assign(m, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) t.p_to_m[i][j] = map_count(parts[i], parts[j]);

  // Invert by Gauss-Jordan over exact rationals.
  auto a = t.p_to_m;
  t.m_to_p.assign(m, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < m; ++i) t.m_to_p[i][i] = 1;
  for (size_t col = 0; col < m; ++col) {
    size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw Error("transition matrix unexpectedly singular");
    std::swap(a[pivot], a[col]);
    std::swap(t.m_to_p[pivot], t.m_to_p[col]);
    Rational inv = Rational(1) / a[col][col];
    for (size_t j = 0; j < m; ++j) {
      a[col][j] *= inv;
      t.m_to_p[col][j] *= inv;
    }
    for (size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < m; ++j) {
        a[r][j] -= f * a[col][j];
        t.m_to_p[r][j] -= f * t.m_to_p[col][j];
      }
    }
  }
  return cache.emplace(weight, std::move(t)).first->second;
}

}  // namespace

const std::vector<std::vector<Rational>>& p_to_m_matrix(int weight) {
  return tables_for(weight).p_to_m;
}

const std::vector<std::vector<Rational>>& m_to_p_matrix(int weight) {
  return tables_for(weight).m_to_p;
}

SymFunc monomial_in_power_sums(const Partition& a) {
  const int w = a.weight();
  const auto parts = partitions_of(w);
  const auto& inv = m_to_p_matrix(w);
  const size_t row =
      static_cast<size_t>(std::lower_bound(parts.begin(), parts.end(), a) - parts.begin());
  SymFunc out;
  for (size_t j = 0; j < parts.size(); ++j)
    if (inv[row][j] != 0) out.add_term(parts[j], XPoly(inv[row][j]));
  return out;
}

SymFunc chromatic(const HopfElement& h) {
  if (h.is_zero()) return SymFunc();
  auto grading = h.grading();
  if (!grading) throw Error("chromatic needs a homogeneous element");
  SymFunc out;
  for (const Partition& a : partitions_of(*grading)) {
    XPoly value = xi_composition(a.parts(), h);
    if (!value.is_zero()) out += monomial_in_power_sums(a) * value;
  }
  return out;
}

TPoly specialize_all(const SymFunc& s) {
  TPoly out;
  for (const auto& [p, c] : s.terms()) out += TPoly::t_power(p.length(), c);
  return out;
}

CPoly evaluate_truncated(const SymFunc& s, int num_vars) {
  CPoly out(num_vars);
  for (const auto& [p, c] : s.terms()) {
    CPoly term = CPoly::constant(num_vars, c);
    for (int part : p.parts()) term = term * CPoly::power_sum(num_vars, part);
    out += term;
  }
  return out;
}

}  // namespace deltachroma
