#include "axial/extension.hpp"

#include <algorithm>

namespace axial {

Cocycle::Cocycle(std::size_t n, FieldTag f, std::vector<Matrix> coords) : n_(n), field_(f), coords_(std::move(coords)) {
  for (const auto& m : coords_) {
    if (m.rows() != n || m.cols() != n) throw DimensionError("cocycle component must be n x n");
    if (m.field() != f) throw FieldMismatch("cocycle component field mismatch");
    if (!m.is_symmetric()) throw ExtensionError("cocycle component must be symmetric");
  }
}

Cocycle Cocycle::zero(std::size_t n, std::size_t s, FieldTag f) {
  return Cocycle(n, f, std::vector<Matrix>(s, Matrix(n, n, f)));
}

Cocycle Cocycle::from_vectors(std::size_t n, FieldTag f, const std::vector<Vector>& flat) {
  std::vector<Matrix> coords;
  for (const auto& v : flat) coords.push_back(vector_to_sym(v, n, f));
  return Cocycle(n, f, std::move(coords));
}

Vector Cocycle::operator()(const Vector& x, const Vector& y) const {
  Vector out;
  for (const auto& m : coords_) out.push_back(dot(x, m * y));
  return out;
}

Cocycle Cocycle::operator+(const Cocycle& o) const {
  if (o.n_ != n_ || o.s() != s()) throw DimensionError("cocycle shape mismatch");
  std::vector<Matrix> c;
  for (std::size_t g = 0; g < s(); ++g) c.push_back(coords_[g] + o.coords_[g]);
  return Cocycle(n_, field_, std::move(c));
}

Cocycle Cocycle::operator-(const Cocycle& o) const {
  if (o.n_ != n_ || o.s() != s()) throw DimensionError("cocycle shape mismatch");
  std::vector<Matrix> c;
  for (std::size_t g = 0; g < s(); ++g) c.push_back(coords_[g] - o.coords_[g]);
  return Cocycle(n_, field_, std::move(c));
}

Vector form_row(const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw DimensionError("form_row dimension mismatch");
  const FieldTag f = n ? x[0].field() : FieldTag::Rationals;
  Vector row = zero_vector(sym_dim(n), f);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero() && y[i].is_zero()) continue;
    for (std::size_t j = i; j < n; ++j) {
      Scalar& r = row[sym_index(i, j, n)];
      if (!x[i].is_zero() && !y[j].is_zero()) r.add_mul(x[i], y[j]);
      if (i != j && !x[j].is_zero() && !y[i].is_zero()) r.add_mul(x[j], y[i]);
    }
  }
  return row;
}

Cocycle coboundary(const Algebra& a, const Matrix& f) {
  const std::size_t n = a.dim();
  if (f.rows() != n) throw DimensionError("coboundary map must have n rows");
  std::vector<Matrix> coords;
  for (std::size_t g = 0; g < f.cols(); ++g) {
    Vector fg = f.column(g);
    Matrix m(n, n, a.field());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dot(a.basis_product(i, j), fg);
    coords.push_back(std::move(m));
  }
  return Cocycle(n, a.field(), std::move(coords));
}

Subspace coboundary_space(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < n; ++k) {
    Vector v = zero_vector(sym_dim(n), a.field());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) v[sym_index(i, j, n)] = a.coeff(i, j, k);
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, sym_dim(n), a.field());
}

Element lift(const Cocycle& theta, const Element& a) {
  Element y = a;
  for (auto& v : theta(a, a)) y.push_back(v);
  return y;
}

Extension build_extension(const Algebra& a, const Cocycle& theta, const std::vector<Element>& axes) {
  const std::size_t n = a.dim(), s = theta.s();
  if (theta.n() != n) throw DimensionError("cocycle dimension does not match algebra");
  if (theta.field() != a.field()) throw FieldMismatch("cocycle and algebra fields differ");
  std::vector<std::string> labels = a.labels();
  for (std::size_t g = 0; g < s; ++g) labels.push_back("v" + std::to_string(g + 1));
  AlgebraBuilder bld(a.field(), labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector v = a.basis_product(i, j);
      for (std::size_t g = 0; g < s; ++g) v.push_back(theta.component(g)(i, j));
      bld.set(i, j, v);
    }
  Extension ext{bld.build(), {}};
  for (const auto& x : axes) ext.lifted.push_back(lift(theta, x));
  return ext;
}

Matrix condition1_constraints(const Algebra& a, const Element& axis, const std::vector<Scalar>& hints) {
  EigenData ed = eigen_decompose(a, axis, hints);
  if (!ed.semisimple) throw SpectralError("condition (1) needs a semisimple axis");
  std::vector<Vector> rows;
  if (const auto* z = ed.find(Scalar::zero(a.field()))) {
    for (const auto& k : z->space.basis()) rows.push_back(form_row(axis, k));
  }
  return Matrix::from_rows(rows, sym_dim(a.dim()), a.field());
}

Matrix condition2_constraints(const Algebra& a, const Element& axis, const FusionLaw& law) {
  AxisReport rep = check_axis(a, axis, law);
  if (!rep.is_axis()) {
    throw ExtensionError("element is not an axis for the law: " + rep.violations.front().kind + " (" +
                         rep.violations.front().detail + ")");
  }
  const FieldTag f = a.field();
  const Scalar zero = Scalar::zero(f);
  const auto& sp = rep.eigen.spaces;
  std::vector<Vector> rows;
  for (std::size_t p = 0; p < sp.size(); ++p)
    for (std::size_t q = p; q < sp.size(); ++q) {
      if (law.star_contains(sp[p].value, sp[q].value, zero)) continue;
      const auto& bp = sp[p].space.basis();
      const auto& bq = sp[q].space.basis();
      for (std::size_t i = 0; i < bp.size(); ++i)
        for (std::size_t j = (p == q ? i : 0); j < bq.size(); ++j) {
          Vector row = form_row(bp[i], bq[j]);
          for (const auto& [nu, z] : rep.eigen.decompose(a.multiply(bp[i], bq[j]))) {
            if (nu.is_zero() || is_zero(z)) continue;
            axpy(row, -nu.inv(), form_row(axis, z));
          }
          rows.push_back(std::move(row));
        }
    }
  return Matrix::from_rows(rows, sym_dim(a.dim()), f);
}

CocycleSpace cocycle_space(const Algebra& a, const std::vector<Element>& axes, const FusionLaw& law,
                           const std::vector<Element>& normalize_on) {
  const std::size_t n = a.dim();
  const std::size_t big_n = sym_dim(n);
  const FieldTag f = a.field();
  RowReducer red(big_n, f);
  for (const auto& x : axes) {
    Matrix c2 = condition2_constraints(a, x, law);
    Matrix c1 = condition1_constraints(a, x, law.values());
    for (std::size_t r = 0; r < c1.rows(); ++r) red.insert(c1.row(r));
    for (std::size_t r = 0; r < c2.rows(); ++r) red.insert(c2.row(r));
  }
  CocycleSpace cs;
  cs.n = n;
  cs.constraint_rank = red.rank();
  cs.cocycles = kernel(Matrix::from_rows(red.rref_rows(), big_n, f));
  cs.coboundaries = coboundary_space(a);
  cs.intersection = intersect(cs.cocycles, cs.coboundaries);
  cs.sum = sum(cs.cocycles, cs.coboundaries);
  cs.quotient_dim = cs.cocycles.dim() - cs.intersection.dim();
  std::vector<Vector> nf;
  for (const auto& z : cs.cocycles.basis()) nf.push_back(cs.intersection.reduce(z));
  cs.quotient_reps = Subspace::span(nf, big_n, f).basis();
  if (!normalize_on.empty()) {
    for (const auto& b : normalize_on) red.insert(form_row(b, b));
    cs.normalized = kernel(Matrix::from_rows(red.rref_rows(), big_n, f));
  } else {
    cs.normalized = cs.cocycles;
  }
  return cs;
}

Cocycle normalize_on_axes(const Algebra& a, const Cocycle& theta, const std::vector<Element>& axes) {
  const std::size_t n = a.dim();
  const FieldTag f = a.field();
  for (const auto& x : axes)
    if (!is_idempotent(a, x)) throw ExtensionError("normalisation needs idempotent axes");
  std::vector<Vector> cols = axes;
  for (std::size_t i : complement_indices(axes, n, f)) cols.push_back(unit_vector(n, i, f));
  if (cols.size() != n || Subspace::span(axes, n, f).dim() != axes.size()) {
    throw ExtensionError("normalisation needs linearly independent axes");
  }
  auto pinv = inverse(Matrix::from_columns(cols, n, f));
  if (!pinv) throw ExtensionError("internal: extended basis is singular");
  Matrix fm(n, theta.s(), f);
  for (std::size_t g = 0; g < theta.s(); ++g)
    for (std::size_t j = 0; j < axes.size(); ++j) {
      Scalar w = theta(axes[j], axes[j])[g];
      if (w.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) fm(i, g).add_mul(w, (*pinv)(j, i));
    }
  Cocycle out = theta - coboundary(a, fm);
  for (const auto& x : axes)
    if (!is_zero(out(x, x))) throw ExtensionError("internal: normalisation failed");
  return out;
}

std::string to_string(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::Split: return "split";
    case SplitVerdict::NonSplit: return "non_split";
    case SplitVerdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

SplitReport is_split(const Algebra& a, const Cocycle& theta) {
  const std::size_t n = a.dim(), s = theta.s();
  const FieldTag f = a.field();
  SplitReport rep;
  RowReducer red(sym_dim(n), f);
  Subspace bs = coboundary_space(a);
  for (const auto& b : bs.basis()) red.insert(b);
  rep.classes_independent = true;
  for (std::size_t g = 0; g < s; ++g)
    if (!red.insert(theta.flat(g))) rep.classes_independent = false;
  Algebra ext = build_extension(a, theta).algebra;
  rep.annihilator = annihilator(ext);
  if (!rep.classes_independent) {
    rep.verdict = SplitVerdict::Split;
    rep.reason = "some non-trivial combination of the components is a coboundary";
    return rep;
  }
  std::vector<Vector> vs;
  for (std::size_t g = 0; g < s; ++g) vs.push_back(unit_vector(n + s, n + g, f));
  if (rep.annihilator == Subspace::span(vs, n + s, f)) {
    rep.verdict = SplitVerdict::NonSplit;
    rep.reason = "classes independent and Ann(A_theta) = V";
  } else {
    rep.verdict = SplitVerdict::Indeterminate;
    rep.reason = "classes independent but Ann(A_theta) is larger than V";
  }
  return rep;
}

ExtensionReport extension_axiality(const Algebra& a, const Cocycle& theta, const std::vector<Element>& axes,
                                   const FusionLaw& law) {
  ExtensionReport rep;
  bool all1 = true;
  for (const auto& x : axes) {
    Matrix c1 = condition1_constraints(a, x, law.values());
    bool ok = true;
    for (std::size_t g = 0; g < theta.s() && ok; ++g) {
      Vector t = theta.flat(g);
      for (std::size_t r = 0; r < c1.rows() && ok; ++r)
        if (!dot(c1.row(r), t).is_zero()) ok = false;
    }
    rep.condition1.push_back(ok);
    all1 = all1 && ok;
  }
  auto cs = cocycle_space(a, axes, law);
  rep.theta_in_z = true;
  for (std::size_t g = 0; g < theta.s(); ++g)
    if (!cs.cocycles.contains(theta.flat(g))) rep.theta_in_z = false;
  if (!all1) return rep;

  Extension ext = build_extension(a, theta, axes);
  std::vector<Scalar> hints = law.values();
  hints.push_back(Scalar::zero(a.field()));
  rep.induced = minimal_law(ext.algebra, ext.lifted, hints);
  auto cl = subalgebra_closure(ext.algebra, ext.lifted);
  rep.axial = cl.span.dim() == ext.algebra.dim();
  rep.law_preserved = law_contains(*rep.induced, augment_with_zero(law, ZeroMode::EmptyRow));
  rep.consistent = rep.law_preserved == rep.theta_in_z;
  rep.extension = std::move(ext);
  return rep;
}

Decomposition decompose_by_annihilator(const Algebra& b, const std::vector<Element>& axes) {
  const std::size_t n = b.dim();
  const FieldTag f = b.field();
  Subspace ann = annihilator(b);
  if (ann.dim() == 0) throw ExtensionError("algebra has zero annihilator");
  Decomposition d;
  std::vector<bool> is_pivot(n, false);
  for (auto p : ann.pivots()) is_pivot[p] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) d.complement.push_back(i);
  const std::size_t m = d.complement.size(), s = ann.dim();
  std::vector<Vector> cols;
  for (auto i : d.complement) cols.push_back(unit_vector(n, i, f));
  for (const auto& v : ann.basis()) cols.push_back(v);
  d.basis = Matrix::from_columns(cols, n, f);
  auto qinv = inverse(d.basis);
  if (!qinv) throw ExtensionError("internal: complement basis is singular");

  std::vector<std::string> labels;
  for (auto i : d.complement) labels.push_back(b.labels()[i]);
  AlgebraBuilder bld(f, labels);
  std::vector<Matrix> theta(s, Matrix(m, m, f));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Vector c = *qinv * b.basis_product(d.complement[i], d.complement[j]);
      bld.set(i, j, Vector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m)));
      for (std::size_t g = 0; g < s; ++g) {
        theta[g](i, j) = c[m + g];
        theta[g](j, i) = c[m + g];
      }
    }
  d.base = bld.build();
  d.cocycle = Cocycle(m, f, std::move(theta));
  for (const auto& y : axes) {
    Vector c = *qinv * y;
    d.axes.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));
  }
  Algebra rebuilt = build_extension(d.base, d.cocycle).algebra;
  d.rebuild_matches = rebuilt.tensor() == change_basis(b, d.basis).tensor();
  return d;
}

Cocycle aut_action(const Cocycle& theta, const Matrix& phi) {
  if (phi.rows() != theta.n() || phi.cols() != theta.n()) throw DimensionError("automorphism has wrong shape");
  if (!inverse(phi)) throw ExtensionError("automorphism matrix is singular");
  std::vector<Matrix> c;
  Matrix pt = phi.transpose();
  for (const auto& m : theta.components()) c.push_back(pt * m * phi);
  return Cocycle(theta.n(), theta.field(), std::move(c));
}

}  // namespace axial
