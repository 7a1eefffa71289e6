#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("eigenspaces") {
  CatalogEntry b = entry("B");
  EigenData d = eigen_decompose(b.algebra, b.element("a4"));
  CHECK(d.semisimple);
  CHECK(d.spectrum() == std::vector<Scalar>{q(-1), q(1)});
  CHECK(d.dim_of(q(1)) == 1);
  CHECK(d.dim_of(q(-1)) == 1);
  // a4 = -(e1 + e2); a4 e1 = -e1 + e1 + e2 = e2, so e1 - e2 is a (-1)-eigenvector
  CHECK(d.find(q(-1))->space.contains(v2(q(1), q(-1))));

  CatalogEntry m = entry("Monster4");
  EigenData a0 = eigen_decompose(m.algebra, m.element("a0"), laws::monster(q(2), q(1, 2)).values());
  auto f = FieldTag::Rationals;
  CHECK(a0.find(q(0))->space == Subspace::span({m.element("u")}, 4, f));
  CHECK(a0.find(q(2))->space == Subspace::span({m.element("v")}, 4, f));
  CHECK(a0.find(q(1, 2))->space == Subspace::span({m.element("w")}, 4, f));
  Vector u = sub(add(m.element("am1"), scale(m.element("a0"), q(2))), add(m.element("a1"), scale(m.element("a2"), q(2))));
  CHECK(m.element("u") == u);
}

TEST_CASE("axes") {
  CatalogEntry b = entry("B");
  AxisReport r = check_axis(b.algebra, b.element("e1"), b.law("FB"));
  CHECK(r.is_axis());
  CHECK(r.primitive);
  CHECK(r.eigen.find(q(1))->space.contains(b.element("e1")));
  CatalogEntry a = entry("A");
  AxisReport ra = check_axis(a.algebra, a.element("a3"), a.law("FA"));
  CHECK(ra.is_axis());
  CHECK_FALSE(ra.primitive);
  FusionLaw only_one(FieldTag::Rationals, {q(1)});
  only_one.set(q(1), q(1), {q(1)});
  CHECK_FALSE(check_axis(b.algebra, b.element("e1"), only_one).is_axis());
}

TEST_CASE("minimal laws") {
  CatalogEntry b = entry("B");
  FusionLaw m = minimal_law(b.algebra, b.axis_set("X12").axes);
  CHECK(m.canonical().values() == std::vector<Scalar>{q(-1), q(1)});
  CHECK(m.star(q(-1), q(-1)) == std::vector<Scalar>{q(1)});
  Algebra s1 = entry("S", {"n=1"}).algebra;
  FusionLaw one = minimal_law(s1, {s1.basis_vector(0)});
  CHECK(one.values() == std::vector<Scalar>{q(1)});
  CHECK(one.star(q(1), q(1)) == std::vector<Scalar>{q(1)});
  Matrix t(2, 2);
  t(0, 1) = t(1, 0) = q(1);
  Extension bt = build_extension(b.algebra, Cocycle(2, FieldTag::Rationals, {t}), b.axis_set("X12").axes);
  FusionLaw mt = minimal_law(bt.algebra, bt.lifted);
  CHECK(mt.star(q(-1), q(-1)) == std::vector<Scalar>{q(0), q(1)});
}

TEST_CASE("axial certificates") {
  CatalogEntry h = entry("H", {"gamma=3"});
  CHECK(check_axial_algebra(h.algebra, h.axis_set("X12").axes, h.law("FH")).certified());
  CatalogEntry b = entry("B");
  AxialCertificate one = check_axial_algebra(b.algebra, {b.element("e1")}, b.law("FB"));
  CHECK_FALSE(one.generates);
  CHECK_FALSE(one.certified());
  CatalogEntry s = entry("S", {"n=3"});
  AxialCertificate cs = check_axial_algebra(s.algebra, s.axis_sets[0].axes, laws::jordan(q(1, 2)));
  CHECK(cs.certified());
  FusionLaw obs = minimal_law(s.algebra, s.axis_sets[0].axes);
  CHECK_FALSE(obs.contains_value(q(1, 2)));
  CHECK(law_contains(obs, laws::jordan(q(1, 2))));
}

TEST_CASE("semisimple decompositions span the algebra") {
  Rng r(51);
  auto es = two_dim_entries();
  es.push_back(entry("Monster4"));
  es.push_back(entry("J25"));
  es.push_back(entry("JordanB", {"n=3"}));
  for (std::size_t k = 0; k < kInstances; ++k) {
    const CatalogEntry& e = es[r.pick(es.size())];
    const AxisSet& s = e.axis_sets[r.pick(e.axis_sets.size())];
    const Element& x = s.axes[r.pick(s.axes.size())];
    EigenData d = eigen_decompose(e.algebra, x, e.law(s.law).values());
    REQUIRE(d.semisimple);
    std::size_t total = 0;
    Subspace all(e.algebra.dim(), e.algebra.field());
    for (const auto& sp : d.spaces) {
      total += sp.space.dim();
      all = sum(all, sp.space);
      for (const auto& v : sp.space.basis()) CHECK(e.algebra.multiply(x, v) == scale(v, sp.value));
    }
    CHECK(total == e.algebra.dim());
    CHECK(all.dim() == e.algebra.dim());
    // decomposition of a random element sums back to it
    d.prepare_decomposition();
    Vector y = r.vector(e.algebra.dim());
    Vector back = zero_vector(e.algebra.dim(), e.algebra.field());
    for (const auto& [nu, z] : d.decompose(y)) back = add(back, z);
    CHECK(back == y);
  }
}

TEST_CASE("minimal law inside every certified law") {
  Rng r(52);
  auto es = two_dim_entries();
  for (std::size_t k = 0; k < kInstances; ++k) {
    const CatalogEntry& e = es[r.pick(es.size())];
    const AxisSet& s = e.axis_sets[r.pick(e.axis_sets.size())];
    FusionLaw m = minimal_law(e.algebra, s.axes, e.law(s.law).values());
    for (const auto& [name, law] : e.laws)
      if (check_axial_algebra(e.algebra, s.axes, law).certified()) CHECK(law_contains(m, law));
  }
}

TEST_CASE("eigenvalue lift") {
  Rng r(53);
  auto es = two_dim_entries();
  for (std::size_t k = 0; k < kInstances; ++k) {
    const CatalogEntry& e = es[r.pick(es.size())];
    const AxisSet& s = e.axis_sets[r.pick(e.axis_sets.size())];
    const Element& x = s.axes[r.pick(s.axes.size())];
    Cocycle th = r.cocycle(2, r.integer(1, 2));
    Algebra at = build_extension(e.algebra, th).algebra;
    auto spec = eigen_decompose(e.algebra, x).spectrum();
    if (std::find(spec.begin(), spec.end(), q(0)) == spec.end()) spec.push_back(q(0));
    std::sort(spec.begin(), spec.end());
    auto lifted = eigen_decompose(at, lift(th, x)).spectrum();
    std::sort(lifted.begin(), lifted.end());
    CHECK(lifted == spec);
  }
}

TEST_CASE("primitivity transfer") {
  Rng r(54);
  auto es = two_dim_entries();
  for (std::size_t k = 0; k < kInstances; ++k) {
    const CatalogEntry& e = es[r.pick(es.size())];
    const AxisSet& s = e.axis_sets[r.pick(e.axis_sets.size())];
    // random theta subject to condition (1) on every axis
    std::vector<Vector> rows;
    for (const auto& x : s.axes)
      for (const auto& row : condition1_constraints(e.algebra, x).row_vectors()) rows.push_back(row);
    Subspace allowed = rows.empty() ? Subspace::full(sym_dim(2), e.algebra.field())
                                    : kernel(Matrix::from_rows(rows, sym_dim(2), e.algebra.field()));
    Vector flat = zero_vector(sym_dim(2), e.algebra.field());
    for (const auto& b : allowed.basis()) axpy(flat, r.rational(), b);
    Cocycle th = Cocycle::from_vectors(2, e.algebra.field(), {flat});
    Extension ext = build_extension(e.algebra, th, s.axes);
    std::vector<Scalar> hints = e.law(s.law).values();
    hints.push_back(q(0));
    FusionLaw le = minimal_law(ext.algebra, ext.lifted, hints);
    FusionLaw lb = minimal_law(e.algebra, s.axes, hints);
    for (std::size_t i = 0; i < s.axes.size(); ++i)
      CHECK(check_axis(e.algebra, s.axes[i], lb).primitive == check_axis(ext.algebra, ext.lifted[i], le).primitive);
  }
}
