#ifndef LIETOWER_EXACTLA_HPP
#define LIETOWER_EXACTLA_HPP

// Exact dense linear algebra over the rationals.
//
// Every canonical form here (RREF, kernels, subspaces) uses deterministic
// pivoting: leftmost pivot column, first nonzero row. Results are therefore
// reproducible bit-for-bit.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lietower {

/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p" or "p/q" (optional leading '-') into a canonical rational.
/// Throws InputError on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
/// v += c * w
void axpy(Vector& v, const Scalar& c, const Vector& w);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols,
                             std::size_t rows);
  /// Inverse of flatten() for a square matrix.
  static Matrix unflatten(const Vector& flat, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;
  /// Row-major entries as a single vector.
  const Vector& flatten() const noexcept { return entries_; }

  bool is_zero() const;
  Matrix transpose() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Scalar& c, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
/// ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);
/// tr(ab) without forming the product.
Scalar trace_product(const Matrix& a, const Matrix& b);
bool is_nilpotent(const Matrix& a);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row echelon form; zero rows are kept at the bottom.
RrefResult rref(Matrix m);

/// Subspace of Q^n held as the RREF of a spanning set. Two subspaces are
/// equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  bool is_zero() const noexcept { return pivots_.empty(); }
  bool is_full() const noexcept { return pivots_.size() == ambient_; }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const { return basis_.row_list(); }

  /// Remainder of v after clearing the pivot columns; zero iff v is inside.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in this basis. Throws InvariantError if v is outside.
  Vector coordinates(const Vector& v) const;
  Vector combine(const Vector& coords) const;
  /// Non-pivot coordinate indices; their unit vectors span a complement.
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
/// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// True iff v is contained in u.
bool subspace_contains(const Subspace& u, const Subspace& v);
/// {a : a . u = 0 for all u in the subspace}
Subspace annihilator(const Subspace& u);

/// Incremental Gauss-Jordan elimination. Rows are kept fully reduced, so the
/// accumulated rows are always the RREF of everything added so far. Used to
/// stream large constraint systems without materializing them.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Returns true iff the row was independent of the rows added before.
  bool add(Vector row);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  Subspace row_space() const;
  /// Null space of the accumulated constraint rows.
  Subspace kernel() const;

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

struct SolveResult {
  std::optional<Vector> particular;
  Subspace kernel;
};

/// Solves a x = b. The particular solution sets every free variable to zero.
SolveResult solve(const Matrix& a, const Vector& b);
Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);
std::pair<Subspace, Subspace> kernel_image(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Matrix of d restricted to an invariant subspace w, in w's basis.
/// Throws InvariantError if d does not map w into itself.
Matrix restricted_matrix(const Matrix& d, const Subspace& w);

/// Coordinates with respect to a family of subspaces whose direct sum is the
/// whole ambient space. Throws InvariantError when the sum is not direct or
/// does not span.
class DirectSumSplitter {
 public:
  explicit DirectSumSplitter(std::vector<Subspace> parts);

  /// Component of v in each part, as ambient vectors.
  std::vector<Vector> components(const Vector& v) const;
  /// Coordinates of the component in `part` w.r.t. that part's basis.
  Vector part_coordinates(const Vector& v, std::size_t part) const;

 private:
  std::vector<Subspace> parts_;
  std::vector<std::size_t> offsets_;
  Matrix inverse_;
};

}  // namespace lietower

#endif  // LIETOWER_EXACTLA_HPP
