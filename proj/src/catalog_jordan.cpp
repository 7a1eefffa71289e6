#include <array>
#include <functional>

#include "axial/catalog.hpp"

namespace axial {
namespace {

using detail::param_or;

Scalar q(long num, long den = 1, FieldTag f = FieldTag::Rationals) { return Scalar::ratio(num, den, f); }

std::size_t size_param(const ParamMap& p, const std::string& key, long def, long lo, long hi) {
  Scalar v = param_or(p, key, def);
  if (!v.is_real() || v.re().get_den() != 1 || v.re() < lo || v.re() > hi)
    throw CatalogError("invalid parameter: " + key + " must be an integer in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  return v.re().get_num().get_ui();
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Algebra on the span of `basis` (flat coordinate vectors, linearly independent)
// under `mult`, which must keep the span closed.
Algebra span_algebra(FieldTag f, std::vector<std::string> labels, const std::vector<Vector>& basis,
                     const std::function<Vector(const Vector&, const Vector&)>& mult) {
  const std::size_t d = basis.size(), m = basis.front().size();
  std::vector<Vector> prods;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      prods.push_back(mult(basis[i], basis[j]));
      pairs.emplace_back(i, j);
    }
  SolveResult s = solve(Matrix::from_columns(basis, m, f), Matrix::from_columns(prods, m, f));
  if (!s.consistent) throw CatalogError("internal: basis span is not closed under the product");
  AlgebraBuilder b(f, std::move(labels));
  auto cols = s.particular.column_vectors();
  for (std::size_t c = 0; c < pairs.size(); ++c) b.set(pairs[c].first, pairs[c].second, cols[c]);
  return b.build();
}

// Square matrices flattened row-major, product (XY + YX)/2.
std::function<Vector(const Vector&, const Vector&)> matrix_jordan(std::size_t n, FieldTag f) {
  return [n, f](const Vector& x, const Vector& y) {
    Vector r = zero_vector(n * n, f);
    const Scalar half = q(1, 2, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& xik = x[i * n + k];
        const Scalar& yik = y[i * n + k];
        if (xik.is_zero() && yik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!xik.is_zero()) r[i * n + j].add_mul(xik * half, y[k * n + j]);
          if (!yik.is_zero()) r[i * n + j].add_mul(yik * half, x[k * n + j]);
        }
      }
    return r;
  };
}

Vector unit_matrix(std::size_t n, std::size_t i, std::size_t j, FieldTag f) {
  return unit_vector(n * n, i * n + j, f);
}

AxisSet make_axes(const CatalogEntry& e, std::string name, const std::vector<std::string>& names, std::string law) {
  AxisSet s;
  s.name = std::move(name);
  s.element_names = names;
  for (const auto& n : names) s.axes.push_back(e.element(n));
  s.law = std::move(law);
  return s;
}

void add_j12(CatalogEntry& e) { e.laws["J12"] = laws::jordan(Scalar::ratio(1, 2, e.algebra.field())); }

// ---- matrix types ----

CatalogEntry jordan_a(std::size_t n) {
  const FieldTag f = FieldTag::Rationals;
  std::vector<Vector> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(unit_matrix(n, i, j, f));
      labels.push_back("E" + idx(i) + idx(j));
    }
  CatalogEntry e;
  e.name = "JordanA";
  e.description = "n x n matrices with product (XY + YX)/2";
  e.params = {{"n", Scalar(long(n))}};
  e.algebra = span_algebra(f, labels, basis, matrix_jordan(n, f));
  add_j12(e);
  std::vector<std::string> diag, all;
  for (std::size_t i = 0; i < n; ++i) {
    e.elements["a" + idx(i)] = e.element("E" + idx(i) + idx(i));
    diag.push_back("a" + idx(i));
  }
  all = diag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::string nm = "a" + idx(i) + idx(j);
      e.elements[nm] = add(e.element("E" + idx(i) + idx(i)), e.element("E" + idx(i) + idx(j)));
      all.push_back(nm);
    }
  e.axis_sets = {make_axes(e, "Xdiag", diag, "J12"), make_axes(e, "Xall", all, "J12")};
  return e;
}

CatalogEntry jordan_b(std::size_t n) {
  const FieldTag f = FieldTag::Rationals;
  std::vector<Vector> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(unit_matrix(n, i, i, f));
    labels.push_back("E" + idx(i) + idx(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(add(unit_matrix(n, i, j, f), unit_matrix(n, j, i, f)));
      labels.push_back("S" + idx(i) + idx(j));
    }
  CatalogEntry e;
  e.name = "JordanB";
  e.description = "symmetric n x n matrices with product (XY + YX)/2";
  e.params = {{"n", Scalar(long(n))}};
  e.algebra = span_algebra(f, labels, basis, matrix_jordan(n, f));
  add_j12(e);
  std::vector<std::string> diag, all;
  for (std::size_t i = 0; i < n; ++i) {
    e.elements["a" + idx(i)] = e.element("E" + idx(i) + idx(i));
    diag.push_back("a" + idx(i));
  }
  all = diag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::string nm = "a" + idx(i) + idx(j);
      Vector v = add(add(e.element("E" + idx(i) + idx(i)), e.element("E" + idx(j) + idx(j))),
                     e.element("S" + idx(i) + idx(j)));
      e.elements[nm] = scale(v, q(1, 2));
      all.push_back(nm);
    }
  e.axis_sets = {make_axes(e, "Xdiag", diag, "J12"), make_axes(e, "Xall", all, "J12")};
  return e;
}

// 2n x 2n matrices X with J^{-1} X^T J = X, J = [[0, I], [-I, 0]].
CatalogEntry jordan_c(std::size_t n) {
  const FieldTag f = FieldTag::Rationals;
  const std::size_t N = 2 * n;
  auto E = [&](std::size_t i, std::size_t j) { return unit_matrix(N, i, j, f); };
  std::vector<Vector> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(add(E(i, j), E(n + j, n + i)));
      labels.push_back("P" + idx(i) + idx(j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(sub(E(i, n + j), E(j, n + i)));
      labels.push_back("Q" + idx(i) + idx(j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(sub(E(n + i, j), E(n + j, i)));
      labels.push_back("R" + idx(i) + idx(j));
    }
  CatalogEntry e;
  e.name = "JordanC";
  e.description = "2n x 2n matrices fixed by X -> J^{-1} X^T J, product (XY + YX)/2";
  e.params = {{"n", Scalar(long(n))}};
  e.algebra = span_algebra(f, labels, basis, matrix_jordan(N, f));
  add_j12(e);
  // coordinates of E_{i(n+j)} - E_{j(n+i)} for any i != j
  auto Qv = [&](std::size_t i, std::size_t j) {
    return i < j ? e.element("Q" + idx(i) + idx(j)) : scale(e.element("Q" + idx(j) + idx(i)), q(-1));
  };
  auto Rv = [&](std::size_t i, std::size_t j) {
    return i < j ? e.element("R" + idx(i) + idx(j)) : scale(e.element("R" + idx(j) + idx(i)), q(-1));
  };
  std::vector<std::string> diag, proof, all;
  for (std::size_t i = 0; i < n; ++i) {
    e.elements["a" + idx(i)] = e.element("P" + idx(i) + idx(i));
    diag.push_back("a" + idx(i));
  }
  proof = diag;
  all = diag;
  // a_ij = P_ii + P_ij + Q_ij; variants flip the sign of Q_ij or apply X -> J X J^{-1}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string ij = idx(i) + idx(j);
      const Element p = add(e.element("P" + idx(i) + idx(i)), e.element("P" + ij));
      const Element pt = add(e.element("P" + idx(i) + idx(i)), e.element("P" + idx(j) + idx(i)));
      e.elements["a" + ij] = add(p, Qv(i, j));
      e.elements["a" + ij + "m"] = sub(p, Qv(i, j));
      e.elements["b" + ij] = sub(pt, Rv(i, j));
      e.elements["b" + ij + "m"] = add(pt, Rv(i, j));
      proof.push_back("a" + ij);
      for (const char* pre : {"a", "b"})
        for (const char* suf : {"", "m"}) all.push_back(pre + ij + suf);
    }
  e.axis_sets = {make_axes(e, "Xdiag", diag, "J12"), make_axes(e, "Xproof", proof, "J12"),
                 make_axes(e, "Xall", all, "J12")};
  e.notes.push_back("basis P_ij = E_ij + E_(n+j)(n+i), Q_ij = E_i(n+j) - E_j(n+i), R_ij = E_(n+i)j - E_(n+j)i");
  return e;
}

// C^n with xy = (x.e_n) y + (y.e_n) x - (x.y) e_n, over Q(i).
CatalogEntry jordan_d(std::size_t n) {
  const FieldTag f = FieldTag::GaussianRationals;
  AlgebraBuilder b(n, f);
  const std::size_t last = n - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector v = zero_vector(n, f);
      if (i == last) v[j] += Scalar::one(f);
      if (j == last) v[i] += Scalar::one(f);
      if (i == j) v[last] -= Scalar::one(f);
      b.set(i, j, v);
    }
  CatalogEntry e;
  e.name = "JordanD";
  e.description = "F^n with xy = (x.e_n)y + (y.e_n)x - (x.y)e_n over Q(i)";
  e.params = {{"n", Scalar(long(n))}};
  e.algebra = b.build();
  add_j12(e);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < last; ++i) {
    Vector v = zero_vector(n, f);
    v[i] = Scalar(mpq_class(0), mpq_class(1, 2));
    v[last] = q(1, 2, f);
    e.elements["a" + idx(i)] = v;
    names.push_back("a" + idx(i));
  }
  e.axis_sets = {make_axes(e, "Xall", names, "J12")};
  return e;
}

// ---- Albert algebra ----

// I_q I_r = -delta_qr + eps_qrs I_s; returns (sign, s) for q != r.
std::pair<int, int> imag_product(int qi, int r) {
  static const std::array<std::array<int, 3>, 7> triples = {
      {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
  for (const auto& t : triples)
    for (int c = 0; c < 3; ++c) {
      int a = t[c], b2 = t[(c + 1) % 3], s = t[(c + 2) % 3];
      if (a == qi && b2 == r) return {1, s};
      if (a == r && b2 == qi) return {-1, s};
    }
  throw CatalogError("internal: missing octonion triple");
}

// 3x3 octonion matrices flattened as (row, col, component), product (XY + YX)/2.
Vector albert_product(const Vector& x, const Vector& y) {
  const FieldTag f = FieldTag::Rationals;
  auto at = [](std::size_t r, std::size_t c, std::size_t k) { return (r * 3 + c) * 8 + k; };
  Vector out = zero_vector(72, f);
  auto mul_into = [&](const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t p = 0; p < 8; ++p) {
          const Scalar& ap = a[at(i, k, p)];
          if (ap.is_zero()) continue;
          for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t r = 0; r < 8; ++r) {
              const Scalar& br = b[at(k, j, r)];
              if (br.is_zero()) continue;
              Scalar c = ap * br * q(1, 2);
              if (p == 0) {
                out[at(i, j, r)] += c;
              } else if (r == 0) {
                out[at(i, j, p)] += c;
              } else if (p == r) {
                out[at(i, j, 0)] -= c;
              } else {
                auto [sg, s] = imag_product(int(p), int(r));
                if (sg > 0) out[at(i, j, s)] += c;
                else out[at(i, j, s)] -= c;
              }
            }
        }
  };
  mul_into(x, y);
  mul_into(y, x);
  return out;
}

CatalogEntry albert() {
  const FieldTag f = FieldTag::Rationals;
  auto at = [](std::size_t r, std::size_t c, std::size_t k) { return (r * 3 + c) * 8 + k; };
  std::vector<Vector> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 3; ++i) {
    basis.push_back(unit_vector(72, at(i, i, 0), f));
    labels.push_back("E" + idx(i) + idx(i));
  }
  const std::array<std::pair<std::size_t, std::size_t>, 3> offdiag = {{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : offdiag) {
    Vector v = zero_vector(72, f);
    v[at(i, j, 0)] = q(1);
    v[at(j, i, 0)] = q(1);
    basis.push_back(v);
    labels.push_back("S" + idx(i) + idx(j) + "_0");
    for (std::size_t k = 1; k < 8; ++k) {
      Vector w = zero_vector(72, f);
      w[at(i, j, k)] = q(1);
      w[at(j, i, k)] = q(-1);
      basis.push_back(w);
      labels.push_back("S" + idx(i) + idx(j) + "_" + std::to_string(k));
    }
  }
  CatalogEntry e;
  e.name = "Albert";
  e.description = "3 x 3 hermitian octonion matrices with product (XY + YX)/2";
  e.algebra = span_algebra(f, labels, basis, albert_product);
  add_j12(e);
  std::vector<std::string> diag, all;
  for (std::size_t i = 0; i < 3; ++i) {
    e.elements["a" + idx(i)] = e.element("E" + idx(i) + idx(i));
    diag.push_back("a" + idx(i));
  }
  all = diag;
  for (auto [i, j] : offdiag) {
    Vector ii_jj = add(e.element("E" + idx(i) + idx(i)), e.element("E" + idx(j) + idx(j)));
    for (std::size_t k = 0; k < 8; ++k) {
      Vector s = e.element("S" + idx(i) + idx(j) + "_" + std::to_string(k));
      std::string nm = "a" + idx(i) + idx(j) + "_" + std::to_string(k);
      e.elements[nm] = scale(add(ii_jj, s), q(1, 2));
      all.push_back(nm);
      if (k == 0) continue;
      // a_ji^k carries the opposite sign on the off-diagonal part
      std::string nm2 = "a" + idx(j) + idx(i) + "_" + std::to_string(k);
      e.elements[nm2] = scale(sub(ii_jj, s), q(1, 2));
      all.push_back(nm2);
    }
  }
  e.axis_sets = {make_axes(e, "Xdiag", diag, "J12"), make_axes(e, "Xall", all, "J12")};
  return e;
}

// ---- small Jordan algebras ----

CatalogEntry s_entry(std::size_t n) {
  AlgebraBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, i, i, q(1));
  CatalogEntry e;
  e.name = "S";
  e.description = "n orthogonal idempotents";
  e.params = {{"n", Scalar(long(n))}};
  e.algebra = b.build();
  add_j12(e);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + idx(i));
  AxisSet x = make_axes(e, "X", names, "J12");
  x.primitive = true;
  e.axis_sets = {x};
  return e;
}

Algebra j_algebra(std::size_t n, const std::string& suf) {
  std::vector<std::string> labels = {"e" + suf};
  for (std::size_t i = 1; i < n; ++i) labels.push_back("n" + std::to_string(i) + suf);
  AlgebraBuilder b(FieldTag::Rationals, labels);
  b.set(0, 0, 0, q(1));
  for (std::size_t i = 1; i < n; ++i) b.set(0, i, i, q(1, 2));
  return b.build();
}

Algebra t_algebra(std::size_t n, const std::string& suf) {
  std::vector<std::string> labels = {"e" + suf};
  for (std::size_t i = 1; i < n; ++i) labels.push_back("n" + std::to_string(i) + suf);
  AlgebraBuilder b(FieldTag::Rationals, labels);
  b.set(0, 0, 0, q(1));
  if (n >= 2) b.set(0, 1, 1, q(1));
  if (n >= 3) b.set(2, 2, 1, q(1));
  for (std::size_t i = 2; i < n; ++i) b.set(0, i, i, q(1, 2));
  return b.build();
}

// Generating idempotents: e and e + n_i.
std::vector<Element> j_axes(std::size_t n) {
  std::vector<Element> out = {unit_vector(n, 0, FieldTag::Rationals)};
  for (std::size_t i = 1; i < n; ++i) {
    Element v = unit_vector(n, 0, FieldTag::Rationals);
    v[i] = q(1);
    out.push_back(v);
  }
  return out;
}

// Generating idempotents e - a_2^2 n_1 + sum a_i n_i: e, e - n_1 + n_2, e + n_i (i >= 3).
// T_2 has no idempotent besides e, so only e is returned there.
std::vector<Element> t_axes(std::size_t n) {
  std::vector<Element> out = {unit_vector(n, 0, FieldTag::Rationals)};
  if (n >= 3) {
    Element v = unit_vector(n, 0, FieldTag::Rationals);
    v[1] = q(-1);
    v[2] = q(1);
    out.push_back(v);
  }
  for (std::size_t i = 3; i < n; ++i) {
    Element v = unit_vector(n, 0, FieldTag::Rationals);
    v[i] = q(1);
    out.push_back(v);
  }
  return out;
}

CatalogEntry small_entry(std::string name, std::string desc, Algebra a, std::vector<Element> axes_v,
                         ParamMap params) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(desc);
  e.params = std::move(params);
  e.algebra = std::move(a);
  add_j12(e);
  AxisSet x;
  x.name = "X";
  x.law = "J12";
  for (std::size_t k = 0; k < axes_v.size(); ++k) {
    std::string nm = "x" + idx(k);
    e.elements[nm] = axes_v[k];
    x.element_names.push_back(nm);
  }
  x.axes = std::move(axes_v);
  e.axis_sets = {x};
  return e;
}

struct Component {
  Algebra alg;
  std::vector<Element> axes;
};

// Direct sum with component labels suffixed by their position; axes embedded by zero.
std::pair<Algebra, std::vector<Element>> sum_of(const std::vector<Component>& parts) {
  Algebra acc = parts.front().alg;
  std::vector<Element> axes = parts.front().axes;
  std::vector<std::string> labels = acc.labels();
  for (std::size_t p = 1; p < parts.size(); ++p) {
    const Component& c = parts[p];
    std::vector<Element> moved;
    for (auto& x : axes) moved.push_back(embed_left(acc, c.alg, x));
    for (const auto& y : c.axes) moved.push_back(embed_right(acc, c.alg, y));
    axes = std::move(moved);
    labels.insert(labels.end(), c.alg.labels().begin(), c.alg.labels().end());
    acc = direct_sum(acc, c.alg);
  }
  Matrix id = Matrix::identity(acc.dim(), acc.field());
  return {change_basis(acc, id, labels), axes};
}

Component j_comp(std::size_t n, std::size_t pos) {
  return {j_algebra(n, "_" + std::to_string(pos)), j_axes(n)};
}
Component t_comp(std::size_t n, std::size_t pos) {
  return {t_algebra(n, "_" + std::to_string(pos)), t_axes(n)};
}

CatalogEntry sum_entry(std::string name, std::string desc, const std::vector<Component>& parts, ParamMap params) {
  auto [alg, ax] = sum_of(parts);
  CatalogEntry e = small_entry(std::move(name), std::move(desc), alg, ax, std::move(params));
  e.notes.push_back("axes are component axes embedded with zero elsewhere");
  return e;
}

CatalogEntry j25(const ParamMap& p) {
  Scalar al = param_or(p, "alpha", 1), be = param_or(p, "beta", 1);
  AlgebraBuilder b(FieldTag::Rationals, {"e1", "e2", "n1", "n2"});
  b.set(0, 0, 0, q(1));
  b.set(0, 2, 2, q(1, 2));
  b.set(0, 3, 3, q(1));
  b.set(1, 1, 1, q(1));
  b.set(1, 2, 2, q(1, 2));
  b.set(2, 2, 3, q(1));
  CatalogEntry e;
  e.name = "J25";
  e.description = "e1e1 = e1, e1n1 = n1/2, e1n2 = n2, e2e2 = e2, e2n1 = n1/2, n1n1 = n2";
  e.params = {{"alpha", al}, {"beta", be}};
  e.algebra = b.build();
  add_j12(e);
  e.elements["e"] = Vector{q(1), q(1), q(0), q(0)};
  e.elements["a"] = Vector{q(1), q(0), al, -(al * al)};
  e.elements["b"] = Vector{q(0), q(1), be, be * be};
  e.axis_sets = {make_axes(e, "Xunit", {"e", "a", "b"}, "J12"), make_axes(e, "X", {"a", "b"}, "J12")};
  return e;
}

CatalogEntry j53(const ParamMap& p) {
  Scalar al = param_or(p, "alpha", 1);
  if (al.is_zero()) throw CatalogError("invalid parameter: J53 needs alpha != 0");
  AlgebraBuilder b(FieldTag::Rationals, {"e", "n1", "n2", "n3"});
  b.set(0, 0, 0, q(1));
  b.set(0, 1, 1, q(1, 2));
  b.set(0, 2, 2, q(1));
  b.set(1, 1, Vector{q(0), q(0), q(1), q(1)});
  CatalogEntry e;
  e.name = "J53";
  e.description = "ee = e, en1 = n1/2, en2 = n2, n1n1 = n2 + n3";
  e.params = {{"alpha", al}};
  e.algebra = b.build();
  add_j12(e);
  Scalar a2 = al * al;
  e.elements["a0"] = Vector{q(1), q(0), q(0), q(0)};
  e.elements["a"] = Vector{q(1), al, -a2, a2};
  e.axis_sets = {make_axes(e, "X", {"a0", "a"}, "J12")};
  return e;
}

CatalogEntry j59(const ParamMap& p) {
  Scalar al = param_or(p, "alpha", 1), be = param_or(p, "beta", 1);
  if (al.is_zero() || be.is_zero()) throw CatalogError("invalid parameter: J59 needs alpha, beta != 0");
  AlgebraBuilder b(FieldTag::Rationals, {"e", "n1", "n2", "n3"});
  b.set(0, 0, 0, q(1));
  b.set(0, 1, 1, q(1));
  b.set(0, 2, 2, q(1, 2));
  b.set(0, 3, 3, q(1, 2));
  b.set(2, 3, 1, q(1));
  b.set(3, 3, 1, q(1));
  CatalogEntry e;
  e.name = "J59";
  e.description = "ee = e, en1 = n1, en2 = n2/2, en3 = n3/2, n2n3 = n1, n3n3 = n1";
  e.params = {{"alpha", al}, {"beta", be}};
  e.algebra = b.build();
  add_j12(e);
  auto idem = [](const Scalar& x, const Scalar& y) { return Vector{q(1), -(y * (x * q(2) + y)), x, y}; };
  e.elements["a00"] = idem(q(0), q(0));
  e.elements["aa0"] = idem(al, q(0));
  e.elements["a0b"] = idem(q(0), be);
  e.axis_sets = {make_axes(e, "X", {"a00", "aa0", "a0b"}, "J12")};
  return e;
}

struct Stub {
  const char* name;
  const char* axes;
};

const std::vector<Stub>& stubs() {
  static const std::vector<Stub> s = {
      {"B2", "e1, e1+n1"},
      {"B2F1", "e1, e1+n1, e2"},
      {"T5", "e1, (e1+e2+e3)/2"},
      {"T7", "e1, e1+n1, e1+n2"},
      {"T8", "e1, e1+n1+n2"},
      {"T10", "e1+n1, e2+n1"},
      {"J1", "e1, (e1+e2+e3)/2, e4"},
      {"J2", "e1+e3, e1+e4, e2"},
      {"J7", "e1+n1, e2+n1, e3"},
      {"J9", "e1, (e1+e2+e3)/2, e1+n1"},
      {"J16", "e1+n1, e1+n2, e2"},
      {"J18", "e1+n1, e1+n2, e2"},
      {"J23", "e1, e1+n1+n2, e2"},
      {"J48", "e1, e1+n1+n3, e1+n2"},
      {"J49", "e1, e1+n1+n3, e1+n2"},
  };
  return s;
}

}  // namespace

namespace detail {

std::vector<CatalogInfo> jordan_catalog_info() {
  std::vector<CatalogInfo> out = {
      {"S", "n orthogonal idempotents", {{"n", "3"}}, false, ""},
      {"J", "ee = e, en_i = n_i/2", {{"n", "3"}}, false, ""},
      {"T", "ee = e, en1 = n1, n2n2 = n1, en_i = n_i/2 (i >= 2)", {{"n", "3"}}, false, ""},
      {"JSum", "J_n + J_m", {{"n", "2"}, {"m", "2"}}, false, ""},
      {"TSum", "T_n + T_m", {{"n", "3"}, {"m", "3"}}, false, ""},
      {"JordanA", "n x n matrices, product (XY + YX)/2", {{"n", "2"}}, false, ""},
      {"JordanB", "symmetric n x n matrices", {{"n", "2"}}, false, ""},
      {"JordanC", "2n x 2n J-symmetric matrices", {{"n", "2"}}, false, ""},
      {"JordanD", "spin factor on F^n over Q(i)", {{"n", "3"}}, false, ""},
      {"Albert", "3 x 3 hermitian octonion matrices (dim 27)", {}, false, ""},
      {"J25", "4-dim Jordan algebra with idempotents e, a(alpha), b(beta)", {{"alpha", "1"}, {"beta", "1"}}, false, ""},
      {"J53", "4-dim Jordan algebra with idempotents a(alpha)", {{"alpha", "1"}}, false, ""},
      {"J59", "4-dim Jordan algebra with idempotents a(alpha, beta)", {{"alpha", "1"}, {"beta", "1"}}, false, ""},
      {"F1F1", "same as S with n = 2", {}, false, "e1, e2"},
      {"F1F1F1", "same as S with n = 3", {}, false, "e1, e2, e3"},
      {"T9", "same as T with n = 3", {}, false, ""},
      {"J3", "same as S with n = 4", {}, false, ""},
      {"J6", "J_2 + J_1 + J_1", {}, false, ""},
      {"J12", "J_3 + J_1", {}, false, ""},
      {"J13", "J_2 + J_2", {}, false, ""},
      {"J24", "T_3 + T_1", {}, false, ""},
      {"J33", "same as J with n = 4", {}, false, ""},
      {"J58", "same as T with n = 4", {}, false, ""},
  };
  for (const auto& s : stubs()) out.push_back({s.name, "products not available", {}, true, s.axes});
  return out;
}

CatalogEntry build_jordan_entry(const std::string& name, const ParamMap& p, bool& found) {
  found = true;
  auto n_of = [&](long def, long lo, long hi) { return size_param(p, "n", def, lo, hi); };
  if (name == "S") return s_entry(n_of(3, 1, 12));
  if (name == "J") {
    std::size_t n = n_of(3, 1, 12);
    return small_entry("J", "ee = e, en_i = n_i/2", j_algebra(n, ""), j_axes(n), {{"n", Scalar(long(n))}});
  }
  if (name == "T") {
    std::size_t n = n_of(3, 1, 12);
    CatalogEntry e = small_entry("T", "ee = e, en1 = n1, n2n2 = n1, en_i = n_i/2", t_algebra(n, ""), t_axes(n),
                                 {{"n", Scalar(long(n))}});
    if (n == 2) e.notes.push_back("e is the only idempotent, so the axis set does not generate");
    return e;
  }
  if (name == "JSum" || name == "TSum") {
    std::size_t n = size_param(p, "n", name == "JSum" ? 2 : 3, 1, 8);
    std::size_t m = size_param(p, "m", name == "JSum" ? 2 : 3, 1, 8);
    bool j = name == "JSum";
    auto comp = [&](std::size_t k, std::size_t pos) { return j ? j_comp(k, pos) : t_comp(k, pos); };
    return sum_entry(name, j ? "J_n + J_m" : "T_n + T_m", {comp(n, 1), comp(m, 2)},
                     {{"n", Scalar(long(n))}, {"m", Scalar(long(m))}});
  }
  if (name == "JordanA") return jordan_a(n_of(2, 1, 5));
  if (name == "JordanB") return jordan_b(n_of(2, 1, 6));
  if (name == "JordanC") return jordan_c(n_of(2, 1, 3));
  if (name == "JordanD") return jordan_d(n_of(3, 2, 10));
  if (name == "Albert") return albert();
  if (name == "J25") return j25(p);
  if (name == "J53") return j53(p);
  if (name == "J59") return j59(p);

  auto alias = [&](const std::string& target, ParamMap tp) {
    CatalogEntry e = build_entry(target, tp);
    e.notes.push_back("identified with " + target);
    e.name = name;
    return e;
  };
  if (name == "F1F1") return alias("S", {{"n", Scalar(2L)}});
  if (name == "F1F1F1") return alias("S", {{"n", Scalar(3L)}});
  if (name == "T9") return alias("T", {{"n", Scalar(3L)}});
  if (name == "J3") return alias("S", {{"n", Scalar(4L)}});
  if (name == "J33") return alias("J", {{"n", Scalar(4L)}});
  if (name == "J58") return alias("T", {{"n", Scalar(4L)}});
  if (name == "J6") return sum_entry(name, "J_2 + J_1 + J_1", {j_comp(2, 1), j_comp(1, 2), j_comp(1, 3)}, {});
  if (name == "J12") return sum_entry(name, "J_3 + J_1", {j_comp(3, 1), j_comp(1, 2)}, {});
  if (name == "J13") return sum_entry(name, "J_2 + J_2", {j_comp(2, 1), j_comp(2, 2)}, {});
  if (name == "J24") return sum_entry(name, "T_3 + T_1", {t_comp(3, 1), t_comp(1, 2)}, {});

  for (const auto& s : stubs())
    if (name == s.name)
      throw CatalogError("catalog entry " + name + " has no product table available (generating axes: " + s.axes + ")");
  found = false;
  return {};
}

}  // namespace detail
}  // namespace axial
