#include "deltachroma/hopf.hpp"

#include <algorithm>

namespace deltachroma {

HopfElement HopfElement::unit() {
  HopfElement h;
  h.add_term(SetSystem::unit(), XPoly(1));
  return h;
}

HopfElement HopfElement::basis(const DeltaMatroid& d) {
  HopfElement h;
  h.add_term(canonicalize(d.system()), XPoly(1));
  return h;
}

std::optional<int> HopfElement::grading() const {
  if (terms_.empty()) return std::nullopt;
  int n = terms_.begin()->first.size();
  for (const auto& [key, coeff] : terms_)
    if (key.size() != n) return std::nullopt;
  return n;
}

void HopfElement::add_term(const SetSystem& canonical_key, const XPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(canonical_key);
  if (it == terms_.end()) {
    terms_.emplace(canonical_key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

HopfElement HopfElement::operator+(const HopfElement& o) const {
  HopfElement r = *this;
  r += o;
  return r;
}

HopfElement HopfElement::operator-(const HopfElement& o) const {
  HopfElement r = *this;
  for (const auto& [key, coeff] : o.terms_) r.add_term(key, -coeff);
  return r;
}

HopfElement HopfElement::operator*(const XPoly& s) const {
  HopfElement r;
  for (const auto& [key, coeff] : terms_) r.add_term(key, coeff * s);
  return r;
}

HopfElement HopfElement::operator*(const HopfElement& o) const {
  HopfElement r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      DeltaMatroid p = product(trusted_delta_matroid(k1), trusted_delta_matroid(k2));
      r.add_term(canonicalize(p.system()), c1 * c2);
    }
  return r;
}

void TensorElement::add_term(const Key& key, const XPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement r = *this;
  for (const auto& [key, coeff] : o.terms_) r.add_term(key, -coeff);
  return r;
}

TensorElement TensorElement::swapped() const {
  TensorElement r;
  for (const auto& [key, coeff] : terms_) r.add_term({key.second, key.first}, coeff);
  return r;
}

TensorElement coproduct_basis(const DeltaMatroid& d) {
  TensorElement out;
  const Mask full = d.system().full_mask();
  for (Mask u = 0;; ++u) {
    SetSystem left = canonicalize(restrict_to(d, u).system());
    SetSystem right = canonicalize(restrict_to(d, full & ~u).system());
    out.add_term({std::move(left), std::move(right)}, XPoly(1));
    if (u == full) break;
  }
  return out;
}

TensorElement coproduct(const HopfElement& h) {
  TensorElement out;
  for (const auto& [key, coeff] : h.terms()) {
    TensorElement piece = coproduct_basis(trusted_delta_matroid(key));
    for (const auto& [pair, c] : piece.terms()) out.add_term(pair, c * coeff);
  }
  return out;
}

TensorElement reduced_coproduct(const HopfElement& h) {
  TensorElement out;
  for (const auto& [key, coeff] : h.terms()) {
    if (key.size() == 0) throw Error("reduced coproduct needs positive grading");
    DeltaMatroid d = trusted_delta_matroid(key);
    const Mask full = key.full_mask();
    for (Mask u = 1; u < full; ++u) {
      SetSystem left = canonicalize(restrict_to(d, u).system());
      SetSystem right = canonicalize(restrict_to(d, full & ~u).system());
      out.add_term({std::move(left), std::move(right)}, coeff);
    }
  }
  return out;
}

XPoly character_xi(const DeltaMatroid& d) {
  // The character vanishes unless D is a product of one-element systems,
  // i.e. Phi equals the cross product of its single-element projections.
  // Phi always sits inside that product, so comparing sizes suffices.
  const auto& fam = d.feasible();
  Mask sometimes_in = 0, always_in = d.system().full_mask();
  for (Mask f : fam) {
    sometimes_in |= f;
    always_in &= f;
  }
  const Mask mixed = sometimes_in & ~always_in;
  if (fam.size() != (size_t{1} << popcount(mixed))) return XPoly(0);
  XPoly value = XPoly::x_power(popcount(always_in));
  return (popcount(mixed) & 1) ? -value : value;
}

XPoly character_xi(const HopfElement& h) {
  XPoly out;
  for (const auto& [key, coeff] : h.terms()) out += coeff * character_xi(trusted_delta_matroid(key));
  return out;
}

std::vector<XPoly> xi_restriction_table(const DeltaMatroid& d) {
  const Mask full = d.system().full_mask();
  std::vector<XPoly> table(size_t{1} << d.size());
  for (Mask u = 0;; ++u) {
    table[u] = character_xi(restrict_to(d, u));
    if (u == full) break;
  }
  return table;
}

namespace {

// Sum over ordered tuples of disjoint subsets with prescribed sizes covering
// `remaining` of the product of table values.
XPoly composition_sum(const std::vector<XPoly>& table, Mask remaining,
                      const std::vector<int>& parts, size_t idx) {
  if (idx == parts.size()) return remaining == 0 ? XPoly(1) : XPoly(0);
  XPoly total;
  // Iterate over submasks of `remaining` of size parts[idx].
  for (Mask u = remaining;; u = (u - 1) & remaining) {
    if (popcount(u) == parts[idx] && !table[u].is_zero()) {
      XPoly rest = composition_sum(table, remaining & ~u, parts, idx + 1);
      total += table[u] * rest;
    }
    if (u == 0) break;
  }
  return total;
}

}  // namespace

XPoly xi_composition(const std::vector<int>& parts, const DeltaMatroid& d) {
  int weight = 0;
  for (int p : parts) {
    if (p <= 0) throw Error("partition parts must be positive");
    weight += p;
  }
  if (weight != d.size()) throw Error("partition weight does not match grading");
  const auto table = xi_restriction_table(d);
  return composition_sum(table, d.system().full_mask(), parts, 0);
}

XPoly xi_composition(const std::vector<int>& parts, const HopfElement& h) {
  if (h.is_zero()) return XPoly(0);
  if (!h.grading()) throw Error("xi composition needs a homogeneous element");
  XPoly out;
  for (const auto& [key, coeff] : h.terms())
    out += coeff * xi_composition(parts, trusted_delta_matroid(key));
  return out;
}

namespace {

// Enumerates ordered set partitions of `remaining` into nonempty blocks,
// calling visit(blocks) for each complete partition.
template <typename Visit>
void ordered_set_partitions(Mask remaining, std::vector<Mask>& blocks, Visit&& visit) {
  if (remaining == 0) {
    visit(blocks);
    return;
  }
  for (Mask u = remaining; u; u = (u - 1) & remaining) {
    blocks.push_back(u);
    ordered_set_partitions(remaining & ~u, blocks, visit);
    blocks.pop_back();
  }
}

}  // namespace

HopfElement primitive_projection(const HopfElement& h) {
  auto grading = h.grading();
  if (h.is_zero()) return HopfElement();
  if (!grading) throw Error("primitive projection needs a homogeneous element");
  if (*grading < 1) throw Error("primitive projection needs grading >= 1");
  HopfElement out;
  for (const auto& [key, coeff] : h.terms()) {
    DeltaMatroid d = trusted_delta_matroid(key);
    const Mask full = key.full_mask();
    // Restriction classes per subset, computed once.
    std::vector<DeltaMatroid> restricted;
    restricted.reserve(size_t{1} << key.size());
    for (Mask u = 0;; ++u) {
      restricted.push_back(restrict_to(d, u));
      if (u == full) break;
    }
    std::vector<Mask> blocks;
    ordered_set_partitions(full, blocks, [&](const std::vector<Mask>& bs) {
      const size_t k = bs.size();
      DeltaMatroid prod = restricted[bs[0]];
      for (size_t i = 1; i < k; ++i) prod = product(prod, restricted[bs[i]]);
      Rational weight{(k % 2 == 1) ? 1 : -1, static_cast<int>(k)};
      out.add_term(canonicalize(prod.system()), coeff * XPoly(weight));
    });
  }
  return out;
}

XPoly character_of_primitive_projection(const DeltaMatroid& d) {
  if (d.size() < 1) throw Error("primitive projection needs grading >= 1");
  const auto table = xi_restriction_table(d);
  const Mask full = d.system().full_mask();
  // Per-block-count integer accumulation: every ordered-set-partition term
  // contributes a signed monomial, so only the x-power counts are tracked
  // and the 1/k weights are applied once at the end.
  const int n = d.size();
  std::vector<std::vector<long long>> counts(static_cast<size_t>(n) + 1,
                                             std::vector<long long>(static_cast<size_t>(n) + 1, 0));
  std::vector<Mask> blocks;
  ordered_set_partitions(full, blocks, [&](const std::vector<Mask>& bs) {
    int sign = 1, power = 0;
    for (Mask b : bs) {
      const XPoly& v = table[b];
      if (v.is_zero()) return;
      power += v.degree();
      if (v.coeffs().back() < 0) sign = -sign;
    }
    counts[bs.size()][static_cast<size_t>(power)] += sign;
  });
  XPoly out;
  for (size_t k = 1; k < counts.size(); ++k) {
    Rational weight{(k % 2 == 1) ? 1 : -1, static_cast<long long>(k)};
    for (size_t p = 0; p < counts[k].size(); ++p)
      if (counts[k][p] != 0) out += XPoly::x_power(static_cast<int>(p), weight * counts[k][p]);
  }
  return out;
}

}  // namespace deltachroma
