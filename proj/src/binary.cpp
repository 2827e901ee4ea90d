#include "deltachroma/binary.hpp"

#include <algorithm>
#include <set>

namespace deltachroma {

F2SymMatrix::F2SymMatrix(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
  if (n < 0 || n > kGroundSetCap) throw CapError("matrix size outside [0, 16]");
}

F2SymMatrix::F2SymMatrix(int n, std::vector<Mask> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > kGroundSetCap) throw CapError("matrix size outside [0, 16]");
  if (static_cast<int>(rows_.size()) != n) throw Error("row count does not match matrix size");
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask r : rows_)
    if (r & ~full) throw Error("matrix row uses columns outside the matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (entry(i, j) != entry(j, i)) throw Error("matrix is not symmetric");
}

void F2SymMatrix::set_entry(int i, int j, bool v) {
  Mask bi = Mask{1} << j, bj = Mask{1} << i;
  if (v) {
    rows_[static_cast<size_t>(i)] |= bi;
    rows_[static_cast<size_t>(j)] |= bj;
  } else {
    rows_[static_cast<size_t>(i)] &= ~bi;
    rows_[static_cast<size_t>(j)] &= ~bj;
  }
}

Mask F2SymMatrix::diagonal() const {
  Mask d = 0;
  for (int i = 0; i < n_; ++i)
    if (entry(i, i)) d |= Mask{1} << i;
  return d;
}

bool F2SymMatrix::principal_det(Mask f) const {
  // Bit-parallel Gaussian elimination on the compressed submatrix.
  Mask rows[kGroundSetCap];
  int m = 0;
  for (int i = 0; i < n_; ++i) {
    if (!(f & (Mask{1} << i))) continue;
    // Compress the columns of row i to the positions selected by f.
    Mask r = 0;
    int j = 0;
    Mask cols = f;
    while (cols) {
      int c = __builtin_ctz(cols);
      cols &= cols - 1;
      if (entry(i, c)) r |= Mask{1} << j;
      ++j;
    }
    rows[m++] = r;
  }
  for (int col = 0; col < m; ++col) {
    const Mask bit = Mask{1} << col;
    int pivot = -1;
    for (int r = col; r < m; ++r)
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;  // singular
    std::swap(rows[col], rows[pivot]);
    for (int r = pivot + 1; r < m; ++r)
      if (rows[r] & bit) rows[r] ^= rows[col];
  }
  return true;
}

F2SymMatrix F2SymMatrix::principal_submatrix(Mask f) const {
  F2SymMatrix out(popcount(f));
  int ri = 0;
  for (int i = 0; i < n_; ++i) {
    if (!(f & (Mask{1} << i))) continue;
    int rj = 0;
    for (int j = 0; j < n_; ++j) {
      if (!(f & (Mask{1} << j))) continue;
      if (entry(i, j)) out.set_entry(ri, rj, true);
      ++rj;
    }
    ++ri;
  }
  return out;
}

DeltaMatroid delta_matroid_of_matrix(const F2SymMatrix& a) {
  const int n = a.size();
  std::vector<Mask> feasible;
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask f = 0;; ++f) {
    if (a.principal_det(f)) feasible.push_back(f);
    if (f == full) break;
  }
  return trusted_delta_matroid(SetSystem(n, std::move(feasible)));
}

std::optional<F2SymMatrix> reconstruct_matrix(const SetSystem& s) {
  if (!s.is_proper()) throw ImproperError();
  if (!s.contains(0)) return std::nullopt;  // graphical forces the empty set feasible
  const int n = s.size();
  F2SymMatrix a(n);
  for (int i = 0; i < n; ++i)
    if (s.contains(Mask{1} << i)) a.set_entry(i, i, true);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool aii = a.entry(i, i), ajj = a.entry(j, j);
      bool pair = s.contains((Mask{1} << i) | (Mask{1} << j));
      a.set_entry(i, j, (aii && ajj) != pair);
    }
  // The 1x1 and 2x2 minors determine the candidate uniquely; everything
  // larger must be verified.
  if (delta_matroid_of_matrix(a).system().feasible() != s.feasible()) return std::nullopt;
  return a;
}

bool is_graphical(const DeltaMatroid& d) { return reconstruct_matrix(d.system()).has_value(); }

std::optional<Mask> binary_witness(const DeltaMatroid& d) {
  for (Mask f : d.feasible()) {
    if (reconstruct_matrix(twist(d, f).system())) return f;
  }
  return std::nullopt;
}

bool is_binary(const DeltaMatroid& d) { return binary_witness(d).has_value(); }

bool is_even(const DeltaMatroid& d) {
  const auto& fam = d.feasible();
  const int parity = popcount(fam.front()) & 1;
  for (Mask f : fam)
    if ((popcount(f) & 1) != parity) return false;
  return true;
}

std::vector<DeltaMatroid> enumerate_binary_delta_matroids(int n, bool even_only,
                                                          bool allow_large) {
  if (n < 0 || n > kEnumerateHardCap || (n > kEnumerateCap && !allow_large))
    throw CapError("enumeration grading " + std::to_string(n) + " over cap" +
                   (n == kEnumerateHardCap ? " (pass allow_large)" : ""));
  const int bits = n * (n + 1) / 2;
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::set<SetSystem> seen;         // raw families, to skip repeat canonicalization
  std::set<SetSystem> canonical;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    F2SymMatrix a(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j, ++k)
        if ((code >> k) & 1) a.set_entry(i, j, true);
    DeltaMatroid base = delta_matroid_of_matrix(a);
    for (Mask t = 0;; ++t) {
      DeltaMatroid d = twist(base, t);
      if (seen.insert(d.system()).second) {
        canonical.insert(canonicalize(d.system()));
      }
      if (t == full) break;
    }
  }
  std::vector<DeltaMatroid> out;
  out.reserve(canonical.size());
  for (const SetSystem& s : canonical) {
    DeltaMatroid d = trusted_delta_matroid(s);
    if (even_only && !is_even(d)) continue;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace deltachroma
