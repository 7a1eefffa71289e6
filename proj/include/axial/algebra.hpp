#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "axial/linalg.hpp"

namespace axial {

using Element = Vector;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Commutative, not necessarily associative, finite-dimensional algebra given
// by a full structure tensor c[i][j][k]: b_i b_j = sum_k c_ijk b_k.
class Algebra {
 public:
  Algebra() = default;
  // Throws AlgebraError when the tensor is not symmetric in (i, j).
  Algebra(FieldTag f, std::vector<std::string> labels, std::vector<Scalar> tensor);

  std::size_t dim() const { return n_; }
  FieldTag field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  const std::vector<Scalar>& tensor() const { return c_; }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }

  Element basis_vector(std::size_t i) const { return unit_vector(n_, i, field_); }
  Element zero() const { return zero_vector(n_, field_); }
  std::optional<std::size_t> label_index(const std::string& label) const;

  Element multiply(const Element& x, const Element& y) const;

  bool operator==(const Algebra& o) const {
    return n_ == o.n_ && field_ == o.field_ && c_ == o.c_;
  }

 private:
  struct Term {
    std::size_t k;
    Scalar c;
  };
  std::size_t n_ = 0;
  FieldTag field_ = FieldTag::Rationals;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
  std::vector<Vector> products_;
  std::vector<std::vector<Term>> sparse_;
};

class AlgebraBuilder {
 public:
  AlgebraBuilder(FieldTag f, std::vector<std::string> labels);
  explicit AlgebraBuilder(std::size_t n, FieldTag f = FieldTag::Rationals);
  // Sets b_i b_j = b_j b_i = v.
  AlgebraBuilder& set(std::size_t i, std::size_t j, const Vector& v);
  AlgebraBuilder& set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  FieldTag field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  Algebra build() const;

 private:
  FieldTag field_;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
};

Element product(const Algebra& a, const Element& x, const Element& y);
Matrix left_mult_matrix(const Algebra& a, const Element& x);
bool is_idempotent(const Algebra& a, const Element& x);
Subspace annihilator(const Algebra& a);
bool is_ideal(const Algebra& a, const Subspace& s);
bool is_subalgebra(const Algebra& a, const Subspace& s);

// Spanning data for the subalgebra generated by a set of elements, recorded as
// product trees over the generators.
struct WordClosure {
  struct Node {
    int generator = -1;  // >= 0 for a leaf
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t length = 1;
  };
  std::vector<Node> nodes;
  std::vector<Element> values;
  std::vector<std::size_t> basis;  // node ids whose values form a basis of the closure
  Subspace span;
  std::size_t max_word_length = 0;
};

WordClosure word_closure(const Algebra& a, const std::vector<Element>& gens, std::size_t max_levels = 256);

struct SubalgebraClosure {
  Subspace span;
  std::size_t max_word_length = 0;
};

SubalgebraClosure subalgebra_closure(const Algebra& a, const std::vector<Element>& gens);
Subspace ideal_closure(const Algebra& a, const std::vector<Element>& gens);

class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram);
  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  Scalar operator()(const Vector& x, const Vector& y) const;
  bool operator==(const BilinearForm& o) const { return gram_ == o.gram_; }

 private:
  Matrix gram_;
};

// Upper-triangle, row-major indexing of symmetric n x n data.
std::size_t sym_dim(std::size_t n);
std::size_t sym_index(std::size_t i, std::size_t j, std::size_t n);
Vector sym_to_vector(const Matrix& m);
Matrix vector_to_sym(const Vector& v, std::size_t n, FieldTag f);

// Space of associating symmetric forms, as vectors in upper-triangle coordinates.
Subspace frobenius_space(const Algebra& a);
std::vector<BilinearForm> frobenius_forms(const Algebra& a);
bool is_frobenius(const Algebra& a, const BilinearForm& f);
Subspace form_radical(const BilinearForm& f);

class RadicalUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RadicalResult {
  Subspace radical;
  BilinearForm form;
};

// Radical of a Frobenius form that is non-isotropic on every axis of X.
RadicalResult radical_axial(const Algebra& a, const std::vector<Element>& axes);

struct JordanResult {
  bool holds = true;
  std::optional<std::array<std::size_t, 4>> counterexample;  // (i, j, k, l): x-slots i,j,k and y-slot l
};

JordanResult jordan_check(const Algebra& a);

Algebra direct_sum(const Algebra& a, const Algebra& b);
Element embed_left(const Algebra& a, const Algebra& b, const Element& x);
Element embed_right(const Algebra& a, const Algebra& b, const Element& y);

// Structure tensor of `a` in the basis given by the columns of q.
Algebra change_basis(const Algebra& a, const Matrix& q, std::vector<std::string> labels = {});

}  // namespace axial
