#include "deltachroma/setsystem.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace deltachroma {

namespace {

std::string mask_to_string(Mask f, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; f; ++i, f >>= 1) {
    if (f & 1) {
      if (!first) out += ",";
      out += labels[static_cast<size_t>(i)];
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

SeaViolationError::SeaViolationError(SeaWitness w)
    : Error("symmetric exchange axiom violated"), witness(w) {}

SetSystem::SetSystem(int n, std::vector<Mask> feasible, std::vector<std::string> labels)
    : n_(n), feasible_(std::move(feasible)), labels_(std::move(labels)) {
  if (n < 0 || n > kGroundSetCap)
    throw CapError("ground set size " + std::to_string(n) + " outside [0, " +
                   std::to_string(kGroundSetCap) + "]");
  const Mask full = full_mask();
  for (Mask f : feasible_)
    if (f & ~full) throw Error("feasible mask uses elements outside the ground set");
  std::sort(feasible_.begin(), feasible_.end());
  if (std::adjacent_find(feasible_.begin(), feasible_.end()) != feasible_.end())
    throw Error("duplicate feasible set");
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n)
      throw Error("label list size does not match ground set size");
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("labels must be pairwise distinct");
  }
}

SetSystem SetSystem::unit() { return SetSystem(0, {0}); }

bool SetSystem::contains(Mask f) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), f);
}

std::vector<std::string> SetSystem::labels() const {
  if (!labels_.empty()) return labels_;
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string SetSystem::to_string() const {
  const auto names = labels();
  std::string out = "(" + mask_to_string(full_mask(), names) + ";{";
  for (size_t i = 0; i < feasible_.size(); ++i) {
    if (i) out += ",";
    out += mask_to_string(feasible_[i], names);
  }
  return out + "})";
}

std::optional<SeaWitness> sea_violation(const SetSystem& s) {
  if (!s.is_proper()) throw ImproperError();
  // Membership bitmap over all subsets; at n <= 16 this is at most 8 KiB.
  std::vector<bool> member(size_t{1} << s.size(), false);
  for (Mask f : s.feasible()) member[f] = true;
  for (Mask x : s.feasible()) {
    for (Mask y : s.feasible()) {
      Mask diff = x ^ y;
      for (Mask abit = diff; abit;) {
        Mask a = abit & (~abit + 1);
        abit ^= a;
        bool ok = false;
        for (Mask bbit = diff; bbit;) {
          Mask b = bbit & (~bbit + 1);
          bbit ^= b;
          if (member[x ^ a ^ (a == b ? 0 : b)]) {
            ok = true;
            break;
          }
        }
        if (!ok) return SeaWitness{x, y, __builtin_ctz(a)};
      }
    }
  }
  return std::nullopt;
}

DeltaMatroid validate_delta_matroid(SetSystem s) {
  if (auto w = sea_violation(s)) throw SeaViolationError(*w);
  return DeltaMatroid(std::move(s));
}

DeltaMatroid trusted_delta_matroid(SetSystem s) {
#ifndef NDEBUG
  if (s.size() <= 6) assert(!sea_violation(s).has_value());
#endif
  if (!s.is_proper()) throw ImproperError();
  return DeltaMatroid(std::move(s));
}

DeltaMatroid twist(const DeltaMatroid& d, Mask a) {
  const SetSystem& s = d.system();
  if (a & ~s.full_mask()) throw Error("twist set is not a subset of the ground set");
  std::vector<Mask> out;
  out.reserve(s.feasible().size());
  for (Mask f : s.feasible()) out.push_back(f ^ a);
  return trusted_delta_matroid(SetSystem(s.size(), std::move(out)));
}

namespace {

// Deletes the single element at bit position e (feasible masks shrink by one
// bit; positions above e shift down).
std::vector<Mask> delete_element(const std::vector<Mask>& feasible, int e) {
  const Mask ebit = Mask{1} << e;
  const Mask low = ebit - 1;
  bool any_avoids = false;
  for (Mask f : feasible)
    if (!(f & ebit)) {
      any_avoids = true;
      break;
    }
  std::vector<Mask> out;
  out.reserve(feasible.size());
  for (Mask f : feasible) {
    if (any_avoids && (f & ebit)) continue;
    Mask g = (f & low) | ((f >> 1) & ~low);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

DeltaMatroid restrict_to(const DeltaMatroid& d, Mask u) {
  const SetSystem& s = d.system();
  if (u & ~s.full_mask()) throw Error("restriction set is not a subset of the ground set");
  std::vector<Mask> fam = s.feasible();
  int n = s.size();
  for (int e = n - 1; e >= 0; --e) {
    if (u & (Mask{1} << e)) continue;
    fam = delete_element(fam, e);
    --n;
  }
  return trusted_delta_matroid(SetSystem(n, std::move(fam)));
}

DeltaMatroid product(const DeltaMatroid& a, const DeltaMatroid& b) {
  const int n = a.size() + b.size();
  if (n > kGroundSetCap)
    throw CapError("product ground set size " + std::to_string(n) + " exceeds cap");
  std::vector<Mask> out;
  out.reserve(a.feasible().size() * b.feasible().size());
  for (Mask f2 : b.feasible())
    for (Mask f1 : a.feasible()) out.push_back(f1 | (f2 << a.size()));
  return trusted_delta_matroid(SetSystem(n, std::move(out)));
}

namespace {

// Extracts the sub-mask of f indexed by u, compressed to the low bits.
Mask compress(Mask f, Mask u) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; u >> i; ++i) {
    if (u & (Mask{1} << i)) {
      if (f & (Mask{1} << i)) out |= Mask{1} << j;
      ++j;
    }
  }
  return out;
}

// Tests whether Phi splits as a cross product over the bipartition (u, w),
// and if so returns the two projected families (compressed).
bool try_split(const std::vector<Mask>& feasible, Mask u, Mask w, std::vector<Mask>* proj_u,
               std::vector<Mask>* proj_w) {
  std::vector<Mask> pu, pw;
  pu.reserve(feasible.size());
  pw.reserve(feasible.size());
  for (Mask f : feasible) {
    pu.push_back(f & u);
    pw.push_back(f & w);
  }
  std::sort(pu.begin(), pu.end());
  pu.erase(std::unique(pu.begin(), pu.end()), pu.end());
  std::sort(pw.begin(), pw.end());
  pw.erase(std::unique(pw.begin(), pw.end()), pw.end());
  // Phi is always contained in the cross product of its projections, so the
  // split is exact iff the sizes match.
  if (pu.size() * pw.size() != feasible.size()) return false;
  for (Mask& f : pu) f = compress(f, u);
  for (Mask& f : pw) f = compress(f, w);
  *proj_u = std::move(pu);
  *proj_w = std::move(pw);
  return true;
}

void factorize_rec(const SetSystem& sys, Mask element_set, std::vector<Mask>* blocks,
                   std::vector<DeltaMatroid>* factors) {
  const int n = sys.size();
  if (n == 0) return;
  const Mask full = sys.full_mask();
  // Scan bipartitions (u, full \ u) with element 0 in u, ascending by mask.
  for (Mask u = 1; u < full; u += 2) {
    const Mask w = full & ~u;
    std::vector<Mask> pu, pw;
    if (!try_split(sys.feasible(), u, w, &pu, &pw)) continue;
    // Map the split back to the caller's element labels before recursing.
    Mask orig_u = 0, orig_w = 0;
    {
      int j = 0;
      for (int i = 0; i < kGroundSetCap; ++i)
        if (element_set & (Mask{1} << i)) {
          Mask bit = Mask{1} << j;
          if (u & bit) orig_u |= Mask{1} << i;
          if (w & bit) orig_w |= Mask{1} << i;
          ++j;
        }
    }
    factorize_rec(SetSystem(popcount(u), std::move(pu)), orig_u, blocks, factors);
    factorize_rec(SetSystem(popcount(w), std::move(pw)), orig_w, blocks, factors);
    return;
  }
  blocks->push_back(element_set);
  factors->push_back(trusted_delta_matroid(sys));
}

}  // namespace

ConnectedFactorization factorize_connected(const DeltaMatroid& d) {
  ConnectedFactorization out;
  factorize_rec(d.system(), d.system().full_mask(), &out.blocks, &out.factors);
  // Deterministic output: blocks ordered by least element.
  std::vector<size_t> idx(out.blocks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
    return (out.blocks[i] & (~out.blocks[i] + 1)) < (out.blocks[j] & (~out.blocks[j] + 1));
  });
  ConnectedFactorization sorted;
  for (size_t i : idx) {
    sorted.blocks.push_back(out.blocks[i]);
    sorted.factors.push_back(out.factors[i]);
  }
  return sorted;
}

bool is_connected(const DeltaMatroid& d) {
  if (d.size() == 0) return false;
  return factorize_connected(d).blocks.size() == 1;
}

SetSystem relabel(const SetSystem& s, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != s.size()) throw Error("permutation size mismatch");
  std::vector<Mask> out;
  out.reserve(s.feasible().size());
  for (Mask f : s.feasible()) {
    Mask g = 0;
    for (int i = 0; i < s.size(); ++i)
      if (f & (Mask{1} << i)) g |= Mask{1} << perm[static_cast<size_t>(i)];
    out.push_back(g);
  }
  return SetSystem(s.size(), std::move(out));
}

SetSystem canonicalize(const SetSystem& s) {
  const int n = s.size();
  if (n > kCanonicalCap)
    throw CapError("canonicalization refused for ground set size " + std::to_string(n) +
                   " (cap " + std::to_string(kCanonicalCap) + ")");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best = s.feasible();
  std::vector<Mask> scratch(best.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    scratch.clear();
    for (Mask f : s.feasible()) {
      Mask g = 0;
      for (int i = 0; i < n; ++i)
        if (f & (Mask{1} << i)) g |= Mask{1} << perm[static_cast<size_t>(i)];
      scratch.push_back(g);
    }
    std::sort(scratch.begin(), scratch.end());
    if (scratch < best) best = scratch;
  }
  return SetSystem(n, std::move(best));
}

DeltaMatroid canonicalize(const DeltaMatroid& d) {
  return trusted_delta_matroid(canonicalize(d.system()));
}

}  // namespace deltachroma
