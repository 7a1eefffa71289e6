#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

struct Case {
  const CatalogEntry* entry;
  const AxisSet* set;
  Cocycle theta;
};

// Random theta with s components, each satisfying condition (1) on every axis.
Cocycle admissible_theta(Rng& r, const CatalogEntry& e, const AxisSet& s, std::size_t comps) {
  const std::size_t n = e.algebra.dim();
  const FieldTag f = e.algebra.field();
  std::vector<Vector> rows;
  for (const auto& x : s.axes)
    for (const auto& row : condition1_constraints(e.algebra, x).row_vectors()) rows.push_back(row);
  Subspace allowed = rows.empty() ? Subspace::full(sym_dim(n), f) : kernel(Matrix::from_rows(rows, sym_dim(n), f));
  std::vector<Vector> flat;
  for (std::size_t g = 0; g < comps; ++g) {
    Vector v = zero_vector(sym_dim(n), f);
    for (const auto& b : allowed.basis()) axpy(v, r.rational(), b);
    flat.push_back(v);
  }
  return Cocycle::from_vectors(n, f, flat);
}

Case pick(Rng& r, const std::vector<CatalogEntry>& es, std::size_t comps) {
  const CatalogEntry& e = es[r.pick(es.size())];
  const AxisSet& s = e.axis_sets[r.pick(e.axis_sets.size())];
  return {&e, &s, admissible_theta(r, e, s, comps)};
}

std::vector<Scalar> with_zero(std::vector<Scalar> v) {
  if (std::find(v.begin(), v.end(), q(0)) == v.end()) v.push_back(q(0));
  return v;
}

}  // namespace

TEST_CASE("verdicts depend only on the class of theta") {
  Rng r(101);
  auto es = two_dim_entries();
  for (std::size_t k = 0; k < kInstances; ++k) {
    const CatalogEntry& e = es[r.pick(es.size())];
    const AxisSet& s = e.axis_sets[r.pick(e.axis_sets.size())];
    Cocycle th = k % 2 ? r.cocycle(2, 1) : admissible_theta(r, e, s, 1);
    Cocycle moved = th + coboundary(e.algebra, r.matrix(2, 1));
    const FusionLaw& law = e.law(s.law);
    ExtensionReport a = extension_axiality(e.algebra, th, s.axes, law);
    ExtensionReport b = extension_axiality(e.algebra, moved, s.axes, law);
    CHECK(a.condition1 == b.condition1);
    CHECK(a.axial == b.axial);
    CHECK(a.theta_in_z == b.theta_in_z);
    CHECK(a.induced.has_value() == b.induced.has_value());
    if (a.induced && b.induced) CHECK(*a.induced == *b.induced);
  }
}

TEST_CASE("Miyamoto maps are stable under lifting") {
  Rng r(102);
  std::vector<CatalogEntry> es;
  for (auto& e : two_dim_entries())
    for (const auto& s : e.axis_sets) {
      auto gs = find_c2_gradings(e.law(s.law));
      if (std::any_of(gs.begin(), gs.end(), [](const C2Grading& g) { return !g.is_trivial(); })) {
        es.push_back(e);
        break;
      }
    }
  REQUIRE(es.size() >= 4);
  for (std::size_t k = 0; k < kInstances; ++k) {
    Case c = pick(r, es, 1);
    const CatalogEntry& e = *c.entry;
    const FusionLaw& law = e.law(c.set->law);
    std::vector<C2Grading> gs;
    for (const auto& g : find_c2_gradings(law))
      if (!g.is_trivial()) gs.push_back(g);
    if (gs.empty()) gs = find_c2_gradings(law);
    C2Grading g = gs[r.pick(gs.size())];
    Extension ext = build_extension(e.algebra, c.theta, c.set->axes);
    FusionLaw lifted_law = minimal_law(ext.algebra, ext.lifted, with_zero(law.values()));
    C2Grading gz = g;
    if (!law.contains_value(q(0))) gz.plus.push_back(q(0));
    const std::size_t i = r.pick(c.set->axes.size()), j = r.pick(c.set->axes.size());
    const Element& a = c.set->axes[i];
    const Element& b = c.set->axes[j];
    Matrix tb = tau_automorphism(e.algebra, b, law, g).m;
    Matrix tb_hat = tau_automorphism(ext.algebra, ext.lifted[j], lifted_law, gz).m;
    Element img = tb * a;
    CHECK(tb_hat * ext.lifted[i] == lift(c.theta, img));
  }
}

TEST_CASE("Frobenius forms lift") {
  Rng r(103);
  auto es = two_dim_entries();
  for (std::size_t k = 0; k < kInstances; ++k) {
    const CatalogEntry& e = es[r.pick(es.size())];
    const std::size_t s = std::size_t(r.integer(1, 2));
    Algebra at = build_extension(e.algebra, r.cocycle(2, s)).algebra;
    Subspace space = frobenius_space(e.algebra);
    REQUIRE(space.dim() > 0);
    Vector comb = zero_vector(sym_dim(2), e.algebra.field());
    for (const auto& b : space.basis()) axpy(comb, r.scalar(e.algebra.field()), b);
    Matrix g = vector_to_sym(comb, 2, e.algebra.field());
    Matrix lifted(2 + s, 2 + s);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) lifted(i, j) = g(i, j);
    CHECK(is_frobenius(at, BilinearForm(lifted)));
    CHECK(frobenius_space(at).contains(sym_to_vector(lifted)));
  }
}

TEST_CASE("radicals lift") {
  Rng r(104);
  auto es = two_dim_entries();
  std::size_t done = 0;
  for (std::size_t k = 0; done < kInstances && k < 20 * kInstances; ++k) {
    Case c = pick(r, es, std::size_t(r.integer(1, 2)));
    const CatalogEntry& e = *c.entry;
    RadicalResult base, up;
    Extension ext = build_extension(e.algebra, c.theta, c.set->axes);
    // the radical is taken relative to a generating axis set
    if (subalgebra_closure(ext.algebra, ext.lifted).span.dim() != ext.algebra.dim()) continue;
    try {
      base = radical_axial(e.algebra, c.set->axes);
      up = radical_axial(ext.algebra, ext.lifted);
    } catch (const RadicalUnavailable&) {
      continue;
    }
    const std::size_t s = c.theta.s(), n = e.algebra.dim();
    std::vector<Element> want;
    for (const auto& v : base.radical.basis()) want.push_back(lifted_zero_pad(v, s));
    for (std::size_t g = 0; g < s; ++g) want.push_back(ext.algebra.basis_vector(n + g));
    CHECK(up.radical == Subspace::span(want, n + s, e.algebra.field()));
    ++done;
  }
  CHECK(done == kInstances);
}
