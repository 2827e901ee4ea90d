#pragma once

// Symmetric matrices over F2 and the delta-matroids they induce via
// nonsingular principal submatrices; graphical reconstruction, binary
// testing, and exhaustive enumeration of binary delta-matroid classes.

#include <optional>
#include <vector>

#include "deltachroma/setsystem.hpp"

namespace deltachroma {

class F2SymMatrix {
 public:
  explicit F2SymMatrix(int n);
  // Row masks; bit j of rows[i] is entry (i,j). Must be symmetric.
  F2SymMatrix(int n, std::vector<Mask> rows);

  int size() const { return n_; }
  bool entry(int i, int j) const { return (rows_[static_cast<size_t>(i)] >> j) & 1; }
  void set_entry(int i, int j, bool v);  // keeps the matrix symmetric
  Mask row(int i) const { return rows_[static_cast<size_t>(i)]; }
  Mask diagonal() const;

  // Determinant over F2 of the principal submatrix indexed by f.
  // The empty submatrix has determinant 1.
  bool principal_det(Mask f) const;

  // Principal submatrix on the rows and columns in f, compressed.
  F2SymMatrix principal_submatrix(Mask f) const;

  bool operator==(const F2SymMatrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const F2SymMatrix& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<Mask> rows_;
};

// D(A): feasible sets are exactly the index sets of nonsingular principal
// submatrices. The empty set is always feasible.
DeltaMatroid delta_matroid_of_matrix(const F2SymMatrix& a);

// Recovers a matrix with D(A) = S, or nullopt when S is not graphical.
// Diagonal from singletons, off-diagonal from pairs, then full verification.
std::optional<F2SymMatrix> reconstruct_matrix(const SetSystem& s);

bool is_graphical(const DeltaMatroid& d);

// Twist set F with twist(d, F) graphical, or nullopt when d is not binary.
// Only feasible twist sets need scanning: a graphical twist D*F has the
// empty set feasible, which forces F into Phi. Scanning ascends by mask, so
// the witness is deterministic (the empty set whenever d itself is graphical).
std::optional<Mask> binary_witness(const DeltaMatroid& d);

bool is_binary(const DeltaMatroid& d);

// All feasible sets share cardinality parity.
bool is_even(const DeltaMatroid& d);

inline constexpr int kEnumerateCap = 4;       // exhaustive default
inline constexpr int kEnumerateHardCap = 5;   // reachable only with allow_large

// Canonical representatives of all binary delta-matroids of grading n:
// every D(A) over the 2^(n(n+1)/2) symmetric matrices, closed under all 2^n
// twists, canonicalized and deduplicated. Sorted ascending.
std::vector<DeltaMatroid> enumerate_binary_delta_matroids(int n, bool even_only,
                                                          bool allow_large = false);

}  // namespace deltachroma
