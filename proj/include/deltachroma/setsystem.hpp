#pragma once

// Set systems and delta-matroids on ground sets of at most 16 elements.
// Elements are bit positions 0..n-1; a subset is a Mask. Feasible families
// are kept strictly sorted by mask value, which makes every value canonical
// for its labeling and every operation deterministic.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltachroma {

using Mask = std::uint32_t;

inline constexpr int kGroundSetCap = 16;   // hard cap on ground-set size
inline constexpr int kCanonicalCap = 8;    // n! relabeling scan beyond this is refused

inline int popcount(Mask m) { return __builtin_popcount(m); }

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapError : public Error {
 public:
  using Error::Error;
};

class ImproperError : public Error {
 public:
  ImproperError() : Error("set system is improper: no feasible sets") {}
};

// Witness of a Symmetric Exchange Axiom failure: feasible X, Y and an
// element a of X delta Y for which no valid exchange partner b exists.
struct SeaWitness {
  Mask x;
  Mask y;
  int a;
};

class SeaViolationError : public Error {
 public:
  explicit SeaViolationError(SeaWitness w);
  SeaWitness witness;
};

class SetSystem {
 public:
  // Feasible masks may arrive in any order; duplicates are rejected.
  SetSystem(int n, std::vector<Mask> feasible, std::vector<std::string> labels = {});

  static SetSystem unit();  // the empty-ground-set system ({};{{}})

  int size() const { return n_; }
  Mask full_mask() const { return n_ == 0 ? 0 : ((Mask{1} << n_) - 1); }
  const std::vector<Mask>& feasible() const { return feasible_; }
  bool is_proper() const { return !feasible_.empty(); }
  bool contains(Mask f) const;

  // Display labels; defaults to "1".."n" when none were supplied.
  std::vector<std::string> labels() const;
  bool has_labels() const { return !labels_.empty(); }

  std::string to_string() const;  // e.g. "({1,2};{{},{1,2}})"

  // Labels are presentation only; equality and ordering ignore them.
  bool operator==(const SetSystem& o) const { return n_ == o.n_ && feasible_ == o.feasible_; }
  bool operator!=(const SetSystem& o) const { return !(*this == o); }
  bool operator<(const SetSystem& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return feasible_ < o.feasible_;
  }

 private:
  int n_;
  std::vector<Mask> feasible_;
  std::vector<std::string> labels_;
};

// Returns a witness if the system violates SEA, nullopt if it is a
// delta-matroid. Throws ImproperError on an empty feasible family.
std::optional<SeaWitness> sea_violation(const SetSystem& s);

// A set system that has passed delta-matroid validation.
class DeltaMatroid {
 public:
  const SetSystem& system() const { return sys_; }
  int size() const { return sys_.size(); }
  const std::vector<Mask>& feasible() const { return sys_.feasible(); }

  bool operator==(const DeltaMatroid& o) const { return sys_ == o.sys_; }
  bool operator!=(const DeltaMatroid& o) const { return sys_ != o.sys_; }
  bool operator<(const DeltaMatroid& o) const { return sys_ < o.sys_; }

 private:
  friend DeltaMatroid validate_delta_matroid(SetSystem s);
  friend DeltaMatroid trusted_delta_matroid(SetSystem s);
  explicit DeltaMatroid(SetSystem s) : sys_(std::move(s)) {}
  SetSystem sys_;
};

// Full validation: properness plus the Symmetric Exchange Axiom.
// Throws ImproperError or SeaViolationError (with witness).
DeltaMatroid validate_delta_matroid(SetSystem s);

// Wraps a system produced by an SEA-preserving operation (twist, deletion,
// product, principal-minor families). In builds with assertions enabled the
// axiom is re-checked for small ground sets instead of being trusted.
DeltaMatroid trusted_delta_matroid(SetSystem s);

// Local duality: replaces every feasible F by F delta A.
DeltaMatroid twist(const DeltaMatroid& d, Mask a);

// Restriction D|_U by iterated single-element deletion of the complement.
// Deleting e keeps the sets avoiding e when any exist, and otherwise strips
// e from every set. The surviving elements are re-indexed in order, so the
// result lives on a ground set of size |U|.
DeltaMatroid restrict_to(const DeltaMatroid& d, Mask u);

// Disjoint union; the second factor's elements are shifted above the first.
DeltaMatroid product(const DeltaMatroid& a, const DeltaMatroid& b);

struct ConnectedFactorization {
  std::vector<Mask> blocks;            // partition of the ground set, sorted by least element
  std::vector<DeltaMatroid> factors;   // factor i lives on a ground set of size popcount(blocks[i])
};

// Finest product decomposition. The product of the returned factors, taken
// in block order, reconstructs the input exactly after relabeling.
ConnectedFactorization factorize_connected(const DeltaMatroid& d);

bool is_connected(const DeltaMatroid& d);

// Isomorphism-canonical form: the lexicographically least sorted feasible
// list over all n! relabelings. Refuses ground sets above kCanonicalCap.
SetSystem canonicalize(const SetSystem& s);

DeltaMatroid canonicalize(const DeltaMatroid& d);

// Applies a permutation of the ground set: element i is renamed perm[i].
SetSystem relabel(const SetSystem& s, const std::vector<int>& perm);

}  // namespace deltachroma
