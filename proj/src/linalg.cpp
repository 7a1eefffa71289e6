#include "axial/linalg.hpp"

#include <algorithm>

namespace axial {

Vector zero_vector(std::size_t n, FieldTag f) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(std::size_t n, std::size_t i, FieldTag f) {
  Vector v = zero_vector(n, f);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Vector& v, const Scalar& s) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (x.size() != y.size()) throw DimensionError("vector length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i].add_mul(a, x[i]);
  }
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  if (a.empty()) return Scalar();
  Scalar s = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_mul(a[i], b[i]);
  }
  return s;
}

int compare(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = a[i].compare(b[i]);
    if (c != 0) return c;
  }
  return 0;
}

// ---- Matrix ----

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldTag f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, FieldTag f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, FieldTag f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows, FieldTag f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Vector> Matrix::column_vectors() const {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
  if (field_ != o.field_) throw FieldMismatch("matrix product field mismatch");
  Matrix p(rows_, o.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) p(r, c).add_mul(a, b);
      }
    }
  }
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw DimensionError("matrix-vector dimension mismatch");
  Vector out = zero_vector(rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r].add_mul(a, v[c]);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum dimension mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference dimension mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

int Matrix::compare(const Matrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
  if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    int c = data_[i].compare(o.data_[i]);
    if (c != 0) return c;
  }
  return 0;
}

// ---- RowReducer ----

RowReducer::RowReducer(std::size_t cols, FieldTag f) : cols_(cols), field_(f) {}

Vector RowReducer::reduce(Vector row) const {
  if (row.size() != cols_) throw DimensionError("row length mismatch in reducer");
  for (const Row& r : rows_) {
    if (row[r.pivot].is_zero()) continue;
    Scalar f = row[r.pivot];
    for (std::size_t j : r.nz) row[j].sub_mul(f, r.v[j]);
  }
  return row;
}

bool RowReducer::insert(Vector row) {
  for (const auto& x : row) {
    if (x.field() != field_) throw FieldMismatch("row field differs from reducer field");
  }
  row = reduce(std::move(row));
  std::size_t p = 0;
  while (p < cols_ && row[p].is_zero()) ++p;
  if (p == cols_) return false;

  Scalar inv = row[p].inv();
  std::vector<std::size_t> nz;
  for (std::size_t j = p; j < cols_; ++j) {
    if (row[j].is_zero()) continue;
    row[j] *= inv;
    nz.push_back(j);
  }
  for (Row& r : rows_) {
    if (r.v[p].is_zero()) continue;
    Scalar f = r.v[p];
    for (std::size_t j : nz) r.v[j].sub_mul(f, row[j]);
    std::vector<std::size_t> merged;
    std::set_union(r.nz.begin(), r.nz.end(), nz.begin(), nz.end(), std::back_inserter(merged));
    r.nz.clear();
    for (std::size_t j : merged)
      if (!r.v[j].is_zero()) r.nz.push_back(j);
  }
  rows_.push_back(Row{p, std::move(row), std::move(nz)});
  return true;
}

std::vector<std::size_t> RowReducer::pivots() const {
  std::vector<std::size_t> p;
  for (const Row& r : rows_) p.push_back(r.pivot);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vector> RowReducer::rref_rows() const {
  std::vector<const Row*> order;
  for (const Row& r : rows_) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const Row* a, const Row* b) { return a->pivot < b->pivot; });
  std::vector<Vector> out;
  for (const Row* r : order) out.push_back(r->v);
  return out;
}

RrefResult rref(const Matrix& m) {
  RowReducer red(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) red.insert(m.row(r));
  RrefResult res{Matrix(m.rows(), m.cols(), m.field()), red.pivots()};
  auto rows = red.rref_rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) res.rref(r, c) = rows[r][c];
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// ---- Subspace ----

Subspace::Subspace(std::size_t ambient, FieldTag f) : ambient_(ambient), field_(f) {}

Subspace Subspace::from_reducer(const RowReducer& r) {
  Subspace s(r.cols(), r.field());
  s.basis_ = r.rref_rows();
  s.pivots_ = r.pivots();
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient, FieldTag f) {
  RowReducer red(ambient, f);
  for (const auto& v : vectors) red.insert(v);
  return from_reducer(red);
}

Subspace Subspace::full(std::size_t n, FieldTag f) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i, f));
  return span(e, n, f);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_, field_); }

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    Scalar f = v[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!basis_[k][j].is_zero()) v[j].sub_mul(f, basis_[k][j]);
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vector& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
  RowReducer red(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) red.insert(m.row(r));
  auto rows = red.rref_rows();
  auto piv = red.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(m.cols(), f, m.field());
    for (std::size_t k = 0; k < rows.size(); ++k) v[piv[k]] = -rows[k][f];
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, m.cols(), m.field());
}

Subspace row_space(const Matrix& m) { return Subspace::span(m.row_vectors(), m.cols(), m.field()); }

Subspace column_space(const Matrix& m) { return Subspace::span(m.column_vectors(), m.rows(), m.field()); }

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  if (u.field() != w.field()) throw FieldMismatch("subspace field mismatch");
  const std::size_t n = u.ambient_dim();
  const FieldTag f = u.field();
  RowReducer red(2 * n, f);
  for (const auto& v : u.basis()) {
    Vector row = v;
    row.insert(row.end(), v.begin(), v.end());
    red.insert(std::move(row));
  }
  for (const auto& v : w.basis()) {
    Vector row = v;
    row.resize(2 * n, Scalar::zero(f));
    red.insert(std::move(row));
  }
  std::vector<Vector> gens;
  for (const auto& row : red.rref_rows()) {
    bool left_zero = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n),
                                 [](const Scalar& s) { return s.is_zero(); });
    if (left_zero) gens.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(gens, n, f);
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  if (u.field() != w.field()) throw FieldMismatch("subspace field mismatch");
  std::vector<Vector> gens = u.basis();
  gens.insert(gens.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(gens, u.ambient_dim(), u.field());
}

bool equals(const Subspace& u, const Subspace& w) { return u == w; }

SolveResult solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw DimensionError("solve: row count mismatch");
  if (m.field() != rhs.field()) throw FieldMismatch("solve: field mismatch");
  const std::size_t n = m.cols();
  const std::size_t k = rhs.cols();
  Matrix aug(m.rows(), n + k, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < k; ++c) aug(r, n + c) = rhs(r, c);
  }
  RowReducer red(n + k, m.field());
  for (std::size_t r = 0; r < aug.rows(); ++r) red.insert(aug.row(r));
  auto rows = red.rref_rows();
  auto piv = red.pivots();

  SolveResult res;
  res.homogeneous = kernel(m);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= n) {
      res.consistent = false;
      res.bad_column = piv[i] - n;
      res.witness = rows[i];
      return res;
    }
  }
  res.consistent = true;
  res.particular = Matrix(n, k, m.field());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) res.particular(piv[i], c) = rows[i][n + c];
  return res;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  auto res = solve(m, Matrix::identity(m.rows(), m.field()));
  if (!res.consistent || res.homogeneous.dim() != 0) return std::nullopt;
  return res.particular;
}

std::vector<std::size_t> complement_indices(const std::vector<Vector>& vectors, std::size_t n, FieldTag f) {
  RowReducer red(n, f);
  for (const auto& v : vectors) red.insert(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (red.insert(unit_vector(n, i, f))) out.push_back(i);
  }
  return out;
}

}  // namespace axial
