#include "axial/algebra.hpp"

#include <algorithm>

namespace axial {

Algebra::Algebra(FieldTag f, std::vector<std::string> labels, std::vector<Scalar> tensor)
    : n_(labels.size()), field_(f), labels_(std::move(labels)), c_(std::move(tensor)) {
  if (c_.size() != n_ * n_ * n_) throw AlgebraError("structure tensor has wrong size");
  for (const auto& s : c_) {
    if (s.field() != field_) throw FieldMismatch("structure constant outside the algebra's field");
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (coeff(i, j, k) != coeff(j, i, k)) {
          throw AlgebraError("structure tensor not symmetric at (" + labels_[i] + ", " + labels_[j] + ")");
        }
  products_.resize(n_ * n_);
  sparse_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Vector v(c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_),
               c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j + 1) * n_));
      for (std::size_t k = 0; k < n_; ++k)
        if (!v[k].is_zero()) sparse_[i * n_ + j].push_back(Term{k, v[k]});
      products_[i * n_ + j] = std::move(v);
    }
}

std::optional<std::size_t> Algebra::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionError("element dimension mismatch");
  Element out = zero();
  std::vector<std::size_t> xs, ys;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i].is_zero()) xs.push_back(i);
    if (!y[i].is_zero()) ys.push_back(i);
  }
  Scalar xy;
  for (std::size_t i : xs)
    for (std::size_t j : ys) {
      const auto& terms = sparse_[i * n_ + j];
      if (terms.empty()) continue;
      xy = x[i] * y[j];
      for (const Term& t : terms) out[t.k].add_mul(xy, t.c);
    }
  return out;
}

AlgebraBuilder::AlgebraBuilder(FieldTag f, std::vector<std::string> labels)
    : field_(f), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  c_.assign(n * n * n, Scalar::zero(f));
}

AlgebraBuilder::AlgebraBuilder(std::size_t n, FieldTag f) : field_(f) {
  for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i + 1));
  c_.assign(n * n * n, Scalar::zero(f));
}

AlgebraBuilder& AlgebraBuilder::set(std::size_t i, std::size_t j, const Vector& v) {
  const std::size_t n = labels_.size();
  if (i >= n || j >= n || v.size() != n) throw DimensionError("product outside the basis");
  for (std::size_t k = 0; k < n; ++k) {
    c_[(i * n + j) * n + k] = v[k];
    c_[(j * n + i) * n + k] = v[k];
  }
  return *this;
}

AlgebraBuilder& AlgebraBuilder::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  const std::size_t n = labels_.size();
  if (i >= n || j >= n || k >= n) throw DimensionError("product outside the basis");
  c_[(i * n + j) * n + k] = c;
  c_[(j * n + i) * n + k] = c;
  return *this;
}

Algebra AlgebraBuilder::build() const { return Algebra(field_, labels_, c_); }

Element product(const Algebra& a, const Element& x, const Element& y) { return a.multiply(x, y); }

Matrix left_mult_matrix(const Algebra& a, const Element& x) {
  const std::size_t n = a.dim();
  Matrix m(n, n, a.field());
  for (std::size_t k = 0; k < n; ++k) {
    Element col = a.multiply(x, a.basis_vector(k));
    for (std::size_t r = 0; r < n; ++r) m(r, k) = col[r];
  }
  return m;
}

bool is_idempotent(const Algebra& a, const Element& x) { return a.multiply(x, x) == x; }

Subspace annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix stacked(n * n, n, a.field());
  for (std::size_t k = 0; k < n; ++k) {
    Matrix l = left_mult_matrix(a, a.basis_vector(k));
    // x * b_k as a function of x equals L_{b_k} x by commutativity.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(k * n + r, c) = l(r, c);
  }
  return kernel(stacked);
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  for (const auto& v : s.basis())
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!s.contains(a.multiply(v, a.basis_vector(k)))) return false;
  return true;
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (!s.contains(a.multiply(b[i], b[j]))) return false;
  return true;
}

WordClosure word_closure(const Algebra& a, const std::vector<Element>& gens, std::size_t max_levels) {
  const std::size_t n = a.dim();
  WordClosure wc;
  RowReducer total(n, a.field());
  std::vector<std::vector<std::size_t>> level(2);  // level[m] = node ids spanning words of length m

  RowReducer lvl1(n, a.field());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].size() != n) throw DimensionError("generator dimension mismatch");
    if (!lvl1.insert(gens[g])) continue;
    wc.nodes.push_back({static_cast<int>(g), 0, 0, 1});
    wc.values.push_back(gens[g]);
    level[1].push_back(wc.nodes.size() - 1);
  }
  auto absorb = [&](const std::vector<std::size_t>& ids) {
    for (std::size_t id : ids)
      if (total.insert(wc.values[id])) wc.basis.push_back(id);
  };
  auto closed = [&]() {
    auto rows = total.rref_rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i; j < rows.size(); ++j)
        if (!total.contains(a.multiply(rows[i], rows[j]))) return false;
    return true;
  };

  absorb(level[1]);
  if (total.rank() == 0) {
    wc.span = Subspace(n, a.field());
    wc.max_word_length = 0;
    return wc;
  }
  std::size_t m = 1;
  while (!closed()) {
    ++m;
    if (m > max_levels) throw AlgebraError("subalgebra closure did not stabilise");
    level.emplace_back();
    RowReducer lvl(n, a.field());
    for (std::size_t p = 1; p <= m / 2; ++p) {
      const std::size_t q = m - p;
      for (std::size_t ui = 0; ui < level[p].size(); ++ui) {
        std::size_t vj0 = (p == q) ? ui : 0;
        for (std::size_t vj = vj0; vj < level[q].size(); ++vj) {
          std::size_t u = level[p][ui], v = level[q][vj];
          Element val = a.multiply(wc.values[u], wc.values[v]);
          if (!lvl.insert(val)) continue;
          wc.nodes.push_back({-1, u, v, m});
          wc.values.push_back(std::move(val));
          level[m].push_back(wc.nodes.size() - 1);
        }
      }
    }
    absorb(level[m]);
  }
  wc.span = Subspace::from_reducer(total);
  wc.max_word_length = m;
  return wc;
}

SubalgebraClosure subalgebra_closure(const Algebra& a, const std::vector<Element>& gens) {
  auto wc = word_closure(a, gens);
  return {wc.span, wc.max_word_length};
}

Subspace ideal_closure(const Algebra& a, const std::vector<Element>& gens) {
  RowReducer red(a.dim(), a.field());
  std::vector<Element> frontier;
  for (const auto& g : gens)
    if (red.insert(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& v : frontier)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Element p = a.multiply(v, a.basis_vector(k));
        if (red.insert(p)) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return Subspace::from_reducer(red);
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw AlgebraError("bilinear form must be symmetric");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }

std::size_t sym_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

Vector sym_to_vector(const Matrix& m) {
  const std::size_t n = m.rows();
  Vector v;
  v.reserve(sym_dim(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) v.push_back(m(i, j));
  return v;
}

Matrix vector_to_sym(const Vector& v, std::size_t n, FieldTag f) {
  if (v.size() != sym_dim(n)) throw DimensionError("symmetric vector has wrong length");
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = v[sym_index(i, j, n)];
      m(j, i) = m(i, j);
    }
  return m;
}

Subspace frobenius_space(const Algebra& a) {
  const std::size_t n = a.dim();
  const FieldTag f = a.field();
  RowReducer red(sym_dim(n), f);
  // (b_i, b_j b_k) - (b_i b_j, b_k) = sum_l c_jkl F(i,l) - sum_l c_ijl F(l,k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(sym_dim(n), f);
        for (std::size_t l = 0; l < n; ++l) {
          if (!a.coeff(j, k, l).is_zero()) row[sym_index(i, l, n)] += a.coeff(j, k, l);
          if (!a.coeff(i, j, l).is_zero()) row[sym_index(l, k, n)] -= a.coeff(i, j, l);
        }
        if (!is_zero(row)) red.insert(std::move(row));
      }
  Matrix eqs = Matrix::from_rows(red.rref_rows(), sym_dim(n), f);
  return kernel(eqs);
}

std::vector<BilinearForm> frobenius_forms(const Algebra& a) {
  std::vector<BilinearForm> out;
  Subspace space = frobenius_space(a);
  for (const auto& v : space.basis()) out.emplace_back(vector_to_sym(v, a.dim(), a.field()));
  return out;
}

bool is_frobenius(const Algebra& a, const BilinearForm& f) {
  if (f.dim() != a.dim()) throw DimensionError("form dimension mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Element ei = a.basis_vector(i), ek = a.basis_vector(k);
        if (f(ei, a.basis_product(j, k)) != f(a.basis_product(i, j), ek)) return false;
      }
  return true;
}

Subspace form_radical(const BilinearForm& f) { return kernel(f.gram()); }

RadicalResult radical_axial(const Algebra& a, const std::vector<Element>& axes) {
  auto forms = frobenius_forms(a);
  if (forms.empty()) throw RadicalUnavailable("radical unavailable: no non-zero Frobenius form");
  const FieldTag fld = a.field();
  // values[x][m] = (a_x, a_x) under the m-th basis form
  std::vector<std::vector<Scalar>> values;
  for (const auto& x : axes) {
    std::vector<Scalar> row;
    bool any = false;
    for (const auto& f : forms) {
      row.push_back(f(x, x));
      any = any || !row.back().is_zero();
    }
    if (!any) throw RadicalUnavailable("radical unavailable: every Frobenius form is isotropic on an axis");
    values.push_back(std::move(row));
  }
  // Coefficients (1, t, t^2, ...) avoid each hyperplane for all but finitely many t.
  const std::size_t tries = axes.size() * forms.size() + 1;
  for (std::size_t t = 1; t <= tries; ++t) {
    std::vector<Scalar> coef;
    Scalar pw = Scalar::one(fld);
    for (std::size_t m = 0; m < forms.size(); ++m) {
      coef.push_back(pw);
      pw *= Scalar(static_cast<long>(t), fld);
    }
    bool ok = true;
    for (const auto& row : values) {
      Scalar s = Scalar::zero(fld);
      for (std::size_t m = 0; m < forms.size(); ++m) s.add_mul(coef[m], row[m]);
      if (s.is_zero()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Matrix g(a.dim(), a.dim(), fld);
    for (std::size_t m = 0; m < forms.size(); ++m) g = g + forms[m].gram().scaled(coef[m]);
    BilinearForm form(g);
    Subspace rad = form_radical(form);
    if (!is_ideal(a, rad)) throw AlgebraError("internal: form radical is not an ideal");
    for (const auto& x : axes)
      if (!is_zero(x) && rad.contains(x)) throw AlgebraError("internal: form radical contains an axis");
    return {rad, form};
  }
  throw RadicalUnavailable("radical unavailable: no non-isotropic Frobenius form found");
}

JordanResult jordan_check(const Algebra& a) {
  const std::size_t n = a.dim();
  const FieldTag f = a.field();
  // Full linearisation of (xy)x^2 - x(y x^2) in x, evaluated on basis triples.
  std::vector<Element> cache(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cache[i * n + j] = a.basis_product(i, j);
  auto mul_basis = [&](std::size_t i, const Element& y) { return a.multiply(a.basis_vector(i), y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const std::array<std::array<std::size_t, 3>, 3> roles = {{{i, j, k}, {j, i, k}, {k, i, j}}};
        for (std::size_t l = 0; l < n; ++l) {
          Element acc = zero_vector(n, f);
          for (const auto& r : roles) {
            const Element& xy = cache[r[0] * n + l];
            const Element& bc = cache[r[1] * n + r[2]];
            Element t1 = a.multiply(xy, bc);
            Element t2 = mul_basis(r[0], a.multiply(a.basis_vector(l), bc));
            for (std::size_t q = 0; q < n; ++q) {
              acc[q] += t1[q];
              acc[q] -= t2[q];
            }
          }
          if (!is_zero(acc)) return {false, std::array<std::size_t, 4>{i, j, k, l}};
        }
      }
  return {true, std::nullopt};
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("direct sum of algebras over different fields");
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  const std::size_t n = a.dim(), m = b.dim();
  AlgebraBuilder bld(a.field(), labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.coeff(i, j, k).is_zero()) bld.set(i, j, k, a.coeff(i, j, k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!b.coeff(i, j, k).is_zero()) bld.set(n + i, n + j, n + k, b.coeff(i, j, k));
  return bld.build();
}

Element embed_left(const Algebra& a, const Algebra& b, const Element& x) {
  Element v = x;
  v.resize(a.dim() + b.dim(), Scalar::zero(a.field()));
  return v;
}

Element embed_right(const Algebra& a, const Algebra& b, const Element& y) {
  Element v = zero_vector(a.dim(), a.field());
  v.insert(v.end(), y.begin(), y.end());
  (void)b;
  return v;
}

Algebra change_basis(const Algebra& a, const Matrix& q, std::vector<std::string> labels) {
  const std::size_t n = a.dim();
  if (q.rows() != n || q.cols() != n) throw DimensionError("change of basis must be n x n");
  auto qinv = inverse(q);
  if (!qinv) throw AlgebraError("change of basis matrix is singular");
  if (labels.empty()) labels = a.labels();
  auto cols = q.column_vectors();
  AlgebraBuilder bld(a.field(), labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) bld.set(i, j, *qinv * a.multiply(cols[i], cols[j]));
  return bld.build();
}

}  // namespace axial
