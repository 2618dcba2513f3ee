#pragma once

// Exact integer and rational linear algebra: matrices over Z, Hermite and
// Smith normal forms, saturated kernels and lattice quotients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extrop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix from row vectors; `cols` fixes the width when `rows` is empty.
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVec>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  std::vector<IntVec> row_vectors() const;

  IntMatrix transpose() const;
  IntVec apply(const IntVec& x) const;
  /// Submatrix of columns [begin, end).
  IntMatrix columns(std::size_t begin, std::size_t end) const;
  IntMatrix rows_range(std::size_t begin, std::size_t end) const;

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct HermiteForm {
  IntMatrix h;  ///< row Hermite normal form
  IntMatrix u;  ///< unimodular, h = u * m
};

/// Row-style HNF: pivots strictly positive, entries above a pivot reduced
/// into [0, pivot), zero rows last.
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  ///< diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix u;  ///< unimodular (rows x rows)
  IntMatrix v;  ///< unimodular (cols x cols), d = u * m * v
};

SmithForm snf(const IntMatrix& m);

/// Homomorphism Z^source -> Z^target stored as a target x source matrix.
class LatticeMap {
 public:
  LatticeMap() = default;
  LatticeMap(std::size_t source_rank, std::size_t target_rank);
  explicit LatticeMap(IntMatrix matrix);
  LatticeMap(std::size_t source_rank, std::size_t target_rank, IntMatrix matrix);

  static LatticeMap identity(std::size_t n);
  static LatticeMap zero(std::size_t source_rank, std::size_t target_rank);

  std::size_t source_rank() const noexcept { return source_rank_; }
  std::size_t target_rank() const noexcept { return target_rank_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVec operator()(const IntVec& x) const;
  RatVec operator()(const RatVec& x) const;
  /// (*this) after `first`: x -> this(first(x)).
  LatticeMap after(const LatticeMap& first) const;
  LatticeMap transpose() const;

  bool operator==(const LatticeMap& other) const = default;

 private:
  std::size_t source_rank_ = 0;
  std::size_t target_rank_ = 0;
  IntMatrix matrix_;
};

/// Basis (in HNF) of the saturated kernel lattice of `m`.
std::vector<IntVec> kernel_basis(const LatticeMap& m);

// ---- vector helpers -------------------------------------------------------

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
Int gcd_of(const IntVec& v);
bool is_zero(const IntVec& v);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
/// Clears denominators and divides by the content.
IntVec primitive(const RatVec& v);
RatVec to_rat(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& v);
IntVec negate(const IntVec& v);

std::string to_string(const IntVec& v);
std::string to_string(const Rat& q);

Int floor_div(const Int& a, const Int& b);

// ---- lattices -------------------------------------------------------------

std::size_t rank_of(const std::vector<IntVec>& vectors, std::size_t dim);
std::size_t rank_of(const IntMatrix& m);
/// HNF basis of span_R(vectors) ∩ Z^dim.
std::vector<IntVec> saturate(const std::vector<IntVec>& vectors, std::size_t dim);
/// HNF basis of { m in Z^dim : <m, v> = 0 for every v }.
std::vector<IntVec> orthogonal_lattice(const std::vector<IntVec>& vectors, std::size_t dim);
/// HNF basis of the lattice generated by `vectors` (not saturated).
std::vector<IntVec> lattice_basis(const std::vector<IntVec>& vectors, std::size_t dim);
/// Canonical form of a saturated lattice basis (row HNF, zero rows dropped).
std::vector<IntVec> hnf_rows(const std::vector<IntVec>& vectors, std::size_t dim);

Int determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Projection Z^ambient -> Z^(ambient - k) whose kernel is a saturated
/// sublattice of rank k, together with an integral section.  The projection
/// is in row HNF, so it is canonical for a given sublattice.
struct LatticeQuotient {
  LatticeMap projection;  ///< Z^ambient -> Z^quotient
  LatticeMap section;     ///< Z^quotient -> Z^ambient, projection * section = 1
};

LatticeQuotient quotient_by(const std::vector<IntVec>& sublattice_generators, std::size_t ambient);

/// Unique X (target x k) with X * columns = values, columns given as
/// vectors in Z^k.  Returns nullopt if the data is inconsistent, does not
/// determine X, or forces a non-integral X.
std::optional<IntMatrix> solve_linear_map(const std::vector<IntVec>& inputs,
                                          const std::vector<IntVec>& values, std::size_t source_rank,
                                          std::size_t target_rank);

/// Rational solution of A x = b if one exists (any one; free variables 0).
std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);

}  // namespace extrop
