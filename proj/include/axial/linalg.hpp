#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axial/scalar.hpp"

namespace axial {

using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Vector zero_vector(std::size_t n, FieldTag f);
Vector unit_vector(std::size_t n, std::size_t i, FieldTag f);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Scalar& s);
void axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a x
Scalar dot(const Vector& a, const Vector& b);
int compare(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldTag f = FieldTag::Rationals);

  static Matrix identity(std::size_t n, FieldTag f);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, FieldTag f);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, FieldTag f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldTag field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  std::vector<Vector> column_vectors() const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  int compare(const Matrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldTag field_ = FieldTag::Rationals;
  std::vector<Scalar> data_;
};

// Incremental reduced row echelon form. Stored rows are always fully reduced
// against each other, so inserting a row costs one pass over the pivots.
class RowReducer {
 public:
  RowReducer(std::size_t cols, FieldTag f);

  bool insert(Vector row);
  Vector reduce(Vector row) const;
  bool contains(const Vector& row) const { return is_zero(reduce(row)); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  FieldTag field() const { return field_; }
  std::vector<std::size_t> pivots() const;
  std::vector<Vector> rref_rows() const;

 private:
  struct Row {
    std::size_t pivot;
    Vector v;
    std::vector<std::size_t> nz;
  };
  std::size_t cols_;
  FieldTag field_;
  std::vector<Row> rows_;
};

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// A subspace of F^n stored by its RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, FieldTag f);

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient, FieldTag f);
  static Subspace from_reducer(const RowReducer& r);
  static Subspace full(std::size_t n, FieldTag f);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  FieldTag field() const { return field_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const;

  // Normal form of v modulo the subspace (zero at every pivot column).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t ambient_ = 0;
  FieldTag field_ = FieldTag::Rationals;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum(const Subspace& u, const Subspace& w);
bool equals(const Subspace& u, const Subspace& w);

struct SolveResult {
  bool consistent = false;
  Matrix particular;        // cols(m) x cols(rhs), valid when consistent
  Subspace homogeneous;     // kernel of m
  std::size_t bad_column = 0;  // rhs column with no solution
  Vector witness;           // RREF row of [m | rhs] reading 0 = nonzero
};

SolveResult solve(const Matrix& m, const Matrix& rhs);
std::optional<Matrix> inverse(const Matrix& m);

// Indices of standard basis vectors completing the rows of `vectors` to a basis.
std::vector<std::size_t> complement_indices(const std::vector<Vector>& vectors, std::size_t n, FieldTag f);

}  // namespace axial
