#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "colimex/field.hpp"

namespace colimex {

// Dense matrix over a Field. Zero-row and zero-column matrices are
// first-class: they represent maps in and out of zero objects and occur
// structurally throughout the library.
//
// Rationals are GMP arbitrary-precision fractions; prime-field entries are
// int64 residues in [0, p). Elimination uses first-nonzero pivoting, so every
// derived basis is deterministic given the input ordering.
class Mat {
 public:
  Mat() : Mat(Field::rationals(), 0, 0) {}
  Mat(Field f, int rows, int cols);

  static Mat identity(Field f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  // Entry access. set_int reduces mod p for prime fields; set_fraction
  // requires den != 0 (and den invertible mod p).
  void set_int(int r, int c, std::int64_t v);
  void set_fraction(int r, int c, std::int64_t num, std::int64_t den);
  bool entry_is_zero(int r, int c) const;
  std::string entry_string(int r, int c) const;  // "n" or "n/d"; residue for F_p
  void set_entry_string(int r, int c, const std::string& s);

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat transpose() const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  Mat cols_slice(int c0, int c1) const;  // [c0, c1)
  Mat rows_slice(int r0, int r1) const;

  // Row-major flattening to a (rows*cols) x 1 column, and back. Used to turn
  // matrix unknowns into plain vectors when assembling linear systems.
  Mat flattened() const;
  static Mat unflatten(Field f, int rows, int cols, const Mat& column);

  int rank() const;
  bool injective() const { return rank() == cols_; }
  bool surjective() const { return rank() == rows_; }

  // Columns form a basis of the null space; cols = cols(m) - rank(m).
  Mat kernel() const;

  // Full-row-rank q with q*m = 0 and rows(q) = rows(m) - rank(m). Its kernel
  // is exactly the column span of m, so q presents the quotient by im(m).
  Mat cokernel() const;

  // Any x with m*x = rhs (all columns simultaneously), or nullopt if some
  // column has no solution. Free variables are set to zero, so the witness
  // is deterministic. Throws on a row-count mismatch.
  std::optional<Mat> solve(const Mat& rhs) const;

  std::optional<Mat> inverse() const;

  // True iff v (a column) lies in the column span.
  bool spans_column(const Mat& v) const { return solve(v).has_value(); }

  std::string to_string() const;  // row-per-line debug form

 private:
  Field field_;
  int rows_, cols_;
  std::vector<std::int64_t> fe_;  // prime-field residues, row-major
  std::vector<mpq_class> qe_;    // rational entries, row-major

  template <class Ops>
  friend struct MatKernels;
};

}  // namespace colimex
