#include "lietower/exactla.hpp"

#include <algorithm>
#include <cctype>

#include "lietower/errors.hpp"

namespace lietower {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_natural_literal(std::string_view s) {
  return !s.empty() && s.front() != '-' && is_integer_literal(s);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return Scalar(mpz_class{std::string(num)});
  }
  const std::string_view den = text.substr(slash + 1);
  if (!is_natural_literal(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  const mpz_class d{std::string(den)};
  if (d == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Scalar q(mpz_class{std::string(num)}, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& x) { return sgn(x) == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= c;
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

void axpy(Vector& v, const Scalar& c, const Vector& w) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(w[i]) != 0) v[i] += c * w[i];
  }
}

// --- Matrix ---------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("matrix entry count does not match its shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::unflatten(const Vector& flat, std::size_t n) {
  return Matrix(n, n, flat);
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

bool Matrix::is_zero() const { return lietower::is_zero(entries_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  Scalar s;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Scalar(-1); }
Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector shape mismatch");
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(v[k]) != 0 && sgn(a(i, k)) != 0) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar trace_product(const Matrix& a, const Matrix& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(b(k, i)) != 0) s += a(i, k) * b(k, i);
  return s;
}

bool is_nilpotent(const Matrix& a) {
  if (!a.is_square()) return false;
  Matrix p = a;
  for (std::size_t k = 1; k < a.rows() && !p.is_zero(); ++k) p = p * a;
  return p.is_zero();
}

// --- RREF -----------------------------------------------------------------

RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t r = lead;
    while (r < m.rows() && sgn(m(r, c)) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(lead, j));
    }
    const Scalar inv = 1 / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(lead, j)) != 0) m(i, j) -= f * m(lead, j);
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(m);
  return out;
}

// --- RowReducer -----------------------------------------------------------

bool RowReducer::add(Vector row) {
  if (row.size() != cols_) throw InputError("row length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = row[pivots_[i]];
    if (sgn(c) != 0) axpy(row, -c, rows_[i]);
  }
  std::size_t p = 0;
  while (p < cols_ && sgn(row[p]) == 0) ++p;
  if (p == cols_) return false;
  const Scalar inv = 1 / row[p];
  for (std::size_t j = p; j < cols_; ++j) row[j] *= inv;
  for (auto& r : rows_) {
    const Scalar c = r[p];
    if (sgn(c) != 0) axpy(r, -c, row);
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = at - pivots_.begin();
  pivots_.insert(at, p);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

Subspace RowReducer::row_space() const {
  return Subspace::span(cols_, rows_);
}

Subspace RowReducer::kernel() const {
  std::vector<Vector> basis;
  std::size_t next = 0;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (next < pivots_.size() && pivots_[next] == f) {
      ++next;
      continue;
    }
    Vector v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][f];
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols_, basis);
}

// --- Subspace -------------------------------------------------------------

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, Matrix::identity(ambient), std::move(piv));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(ambient);
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Matrix basis(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = r.reduced(i, j);
  return Subspace(m.cols(), std::move(basis), std::move(r.pivots));
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw InputError("ambient dimension mismatch");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_(i, j)) != 0) v[j] -= c * basis_(i, j);
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  return lietower::is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw InvariantError("vector lies outside the subspace");
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vector Subspace::combine(const Vector& coords) const {
  Vector v(ambient_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_(i, j)) != 0) v[j] += coords[i] * basis_(i, j);
    }
  }
  return v;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (next < pivots_.size() && pivots_[next] == j) {
      ++next;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw InputError("ambient dimension mismatch");
  auto rows = u.vectors();
  for (auto& r : v.vectors()) rows.push_back(std::move(r));
  return Subspace::span(u.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  const std::size_t n = u.ambient_dim();
  if (n != v.ambient_dim()) throw InputError("ambient dimension mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
  Matrix z(u.dim() + v.dim(), 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = u.basis()(i, j);
      z(i, n + j) = u.basis()(i, j);
    }
  }
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) z(u.dim() + i, j) = v.basis()(i, j);
  }
  RrefResult r = rref(std::move(z));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] < n) continue;
    Vector w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = r.reduced(i, n + j);
    rows.push_back(std::move(w));
  }
  return Subspace::span(n, rows);
}

bool subspace_contains(const Subspace& u, const Subspace& v) {
  return u.contains(v);
}

Subspace annihilator(const Subspace& u) {
  if (u.is_zero()) return Subspace::full(u.ambient_dim());
  return kernel(u.basis());
}

// --- Solving --------------------------------------------------------------

SolveResult solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw InputError("solve: row count mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  SolveResult out{std::nullopt, kernel(a)};
  if (!r.pivots.empty() && r.pivots.back() == n) return out;
  Vector x(n);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, n);
  out.particular = std::move(x);
  return out;
}

Subspace kernel(const Matrix& m) {
  RowReducer red(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) red.add(m.row(i));
  return red.kernel();
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

std::pair<Subspace, Subspace> kernel_image(const Matrix& m) {
  return {kernel(m), image(m)};
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Matrix restricted_matrix(const Matrix& d, const Subspace& w) {
  Matrix out(w.dim(), w.dim());
  for (std::size_t b = 0; b < w.dim(); ++b) {
    const Vector image = d * w.vector(b);
    if (!w.contains(image)) {
      throw InvariantError("map does not preserve the subspace");
    }
    const Vector c = w.coordinates(image);
    for (std::size_t a = 0; a < w.dim(); ++a) out(a, b) = c[a];
  }
  return out;
}

// --- DirectSumSplitter ----------------------------------------------------

DirectSumSplitter::DirectSumSplitter(std::vector<Subspace> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("direct sum of no parts");
  const std::size_t n = parts_.front().ambient_dim();
  std::vector<Vector> cols;
  for (const auto& p : parts_) {
    if (p.ambient_dim() != n) throw InputError("ambient dimension mismatch");
    offsets_.push_back(cols.size());
    for (auto& v : p.vectors()) cols.push_back(std::move(v));
  }
  offsets_.push_back(cols.size());
  if (cols.size() != n) {
    throw InvariantError("direct sum dimensions do not add up to the ambient");
  }
  auto inv = inverse(Matrix::from_columns(cols, n));
  if (!inv) throw InvariantError("subspaces do not form a direct sum");
  inverse_ = std::move(*inv);
}

Vector DirectSumSplitter::part_coordinates(const Vector& v,
                                           std::size_t part) const {
  const Vector all = inverse_ * v;
  return Vector(all.begin() + static_cast<std::ptrdiff_t>(offsets_[part]),
                all.begin() + static_cast<std::ptrdiff_t>(offsets_[part + 1]));
}

std::vector<Vector> DirectSumSplitter::components(const Vector& v) const {
  const Vector all = inverse_ * v;
  std::vector<Vector> out;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    Vector c(all.begin() + static_cast<std::ptrdiff_t>(offsets_[p]),
             all.begin() + static_cast<std::ptrdiff_t>(offsets_[p + 1]));
    out.push_back(parts_[p].combine(c));
  }
  return out;
}

}  // namespace lietower
