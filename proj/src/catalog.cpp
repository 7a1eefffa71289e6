#include "axial/catalog.hpp"

#include <algorithm>

namespace axial {

const AxisSet& CatalogEntry::axis_set(const std::string& n) const {
  for (const auto& s : axis_sets)
    if (s.name == n) return s;
  throw CatalogError("entry " + name + " has no axis set '" + n + "'");
}

const FusionLaw& CatalogEntry::law(const std::string& n) const {
  auto it = laws.find(n);
  if (it == laws.end()) throw CatalogError("entry " + name + " has no law '" + n + "'");
  return it->second;
}

Element CatalogEntry::element(const std::string& n) const {
  if (auto i = algebra.label_index(n)) return algebra.basis_vector(*i);
  auto it = elements.find(n);
  if (it == elements.end()) throw CatalogError("entry " + name + " has no element '" + n + "'");
  return it->second;
}

std::optional<FusionLaw> global_law(const std::string& name, FieldTag f) {
  if (name == "J12") return laws::jordan(Scalar::ratio(1, 2, f));
  if (name == "M") return laws::monster(Scalar(2L, f), Scalar::ratio(1, 2, f));
  return std::nullopt;
}

ParamMap parse_params(const std::vector<std::string>& assignments, FieldTag f) {
  ParamMap p;
  for (const auto& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw CatalogError("parameter must look like name=value: " + a);
    p[a.substr(0, eq)] = parse_scalar(a.substr(eq + 1), f);
  }
  return p;
}

namespace detail {

Scalar param_or(const ParamMap& p, const std::string& key, long def) {
  auto it = p.find(key);
  return it == p.end() ? Scalar(def) : it->second;
}

}  // namespace detail

namespace {

using detail::param_or;

Scalar q(long num, long den = 1) { return Scalar::ratio(num, den); }

Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

// Law with the table conventions: 1*1 = 1, 1*l = l for l != 0, other cells
// empty unless listed.
FusionLaw table_law(const std::vector<Scalar>& values,
                    const std::vector<std::pair<std::pair<Scalar, Scalar>, std::vector<Scalar>>>& cells) {
  FusionLaw law(FieldTag::Rationals, values);
  const Scalar one = q(1);
  for (const auto& v : values)
    if (!v.is_zero()) law.set(one, v, {v});
  for (const auto& [lm, t] : cells) law.set(lm.first, lm.second, t);
  return law;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw CatalogError("invalid parameter: " + msg);
}

bool in(const Scalar& x, std::initializer_list<Scalar> bad) {
  return std::any_of(bad.begin(), bad.end(), [&](const Scalar& b) { return b == x; });
}

Algebra two_dim(const Vector& e1e2) {
  AlgebraBuilder b(2);
  b.set(0, 0, vec({q(1), q(0)}));
  b.set(1, 1, vec({q(0), q(1)}));
  b.set(0, 1, e1e2);
  return b.build();
}

BilinearForm form2(const Scalar& a11, const Scalar& a12, const Scalar& a22) {
  Matrix g(2, 2);
  g(0, 0) = a11;
  g(0, 1) = a12;
  g(1, 0) = a12;
  g(1, 1) = a22;
  return BilinearForm(g);
}

Cocycle table_cocycle() {
  Matrix t(2, 2);
  t(0, 1) = q(1);
  t(1, 0) = q(1);
  return Cocycle(2, FieldTag::Rationals, {t});
}

AxisSet axes(std::string name, std::vector<std::string> names, const CatalogEntry& e, std::string law) {
  AxisSet s;
  s.name = std::move(name);
  s.element_names = names;
  for (const auto& n : names) s.axes.push_back(e.element(n));
  s.law = std::move(law);
  return s;
}

CatalogEntry entry_A() {
  CatalogEntry e;
  e.name = "A";
  e.description = "e1e2 = 0";
  e.algebra = two_dim(vec({q(0), q(0)}));
  e.elements["a3"] = vec({q(1), q(1)});
  e.laws["FA"] = table_law({q(1), q(0)}, {{{q(0), q(0)}, {q(0)}}});
  auto x12 = axes("X12", {"e1", "e2"}, e, "FA");
  x12.symmetric = true;
  x12.primitive = true;
  x12.radical = std::vector<Element>{};
  auto x13 = axes("X1a3", {"e1", "a3"}, e, "FA");
  x13.symmetric = false;
  x13.primitive = false;
  auto x23 = axes("X2a3", {"e2", "a3"}, e, "FA");
  x23.symmetric = false;
  x23.primitive = false;
  e.axis_sets = {x12, x13, x23};
  e.frobenius = form2(q(1), q(0), q(1));
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_B() {
  CatalogEntry e;
  e.name = "B";
  e.description = "e1e2 = -e1 - e2";
  e.algebra = two_dim(vec({q(-1), q(-1)}));
  e.elements["a4"] = vec({q(-1), q(-1)});
  e.laws["FB"] = table_law({q(1), q(-1)}, {{{q(-1), q(-1)}, {q(1)}}});
  e.laws["GB"] = table_law({q(1), q(-1), q(0)}, {{{q(-1), q(-1)}, {q(1), q(0)}}});
  for (auto [n, x] : {std::pair{"X12", std::vector<std::string>{"e1", "e2"}},
                      std::pair{"X1a4", std::vector<std::string>{"e1", "a4"}},
                      std::pair{"X2a4", std::vector<std::string>{"e2", "a4"}}}) {
    auto s = axes(n, x, e, "FB");
    s.symmetric = true;
    s.primitive = true;
    s.radical = std::vector<Element>{};
    s.extension_law = "GB";
    e.axis_sets.push_back(s);
  }
  e.frobenius = form2(q(-2), q(1), q(-2));
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_C(const ParamMap& p) {
  Scalar a = param_or(p, "alpha", 3);
  require(!in(a, {q(0), q(1, 2), q(-1, 2), q(1), q(-1)}), "C needs alpha not in {0, +-1/2, +-1}");
  const Scalar one = q(1), zero = q(0);
  Scalar lam = (one + a * q(2)).inv();
  CatalogEntry e;
  e.name = "C";
  e.description = "e1e2 = alpha(e1 + e2)";
  e.params = {{"alpha", a}};
  e.algebra = two_dim(vec({a, a}));
  e.elements["a5"] = vec({lam, lam});
  e.laws["FC1"] = table_law({one, a}, {{{a, a}, {one, a}}});
  e.laws["FC2"] = table_law({one, a, lam}, {{{a, a}, {one, a}}, {{lam, lam}, {one}}});
  e.laws["GC1"] = table_law({one, a, zero}, {{{a, a}, {one, a, zero}}});
  e.laws["GC2"] = table_law({one, a, lam, zero}, {{{a, a}, {one, a, zero}}, {{lam, lam}, {one, zero}}});
  auto x12 = axes("X12", {"e1", "e2"}, e, "FC1");
  x12.symmetric = true;
  x12.extension_law = "GC1";
  auto x15 = axes("X1a5", {"e1", "a5"}, e, "FC2");
  x15.symmetric = false;
  x15.extension_law = "GC2";
  auto x25 = axes("X2a5", {"e2", "a5"}, e, "FC2");
  x25.symmetric = false;
  x25.extension_law = "GC2";
  for (auto* s : {&x12, &x15, &x25}) {
    s->primitive = true;
    s->radical = std::vector<Element>{};
  }
  e.axis_sets = {x12, x15, x25};
  Scalar d = (one - a) / a;
  e.frobenius = form2(d, one, d);
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_D(const ParamMap& p) {
  Scalar b = param_or(p, "beta", 5);
  require(!in(b, {q(0), q(1), q(1, 2)}), "D needs beta not in {0, 1/2, 1}");
  const Scalar one = q(1), zero = q(0);
  Scalar c = one - b;
  CatalogEntry e;
  e.name = "D";
  e.description = "e1e2 = beta e2";
  e.params = {{"beta", b}};
  e.algebra = two_dim(vec({zero, b}));
  e.elements["a6"] = vec({one, one - b * q(2)});
  e.laws["FD1"] = table_law({one, b, zero}, {{{b, b}, {b}}, {{zero, zero}, {one, zero}}});
  e.laws["FD2"] = table_law({one, b, c}, {{{b, b}, {b}}, {{c, c}, {c}}});
  e.laws["FD3"] = table_law({one, c, zero}, {{{c, c}, {c}}, {{zero, zero}, {one, zero}}});
  e.laws["GD2"] = table_law({one, b, c, zero}, {{{b, b}, {b, zero}}, {{c, c}, {c}}});
  auto x12 = axes("X12", {"e1", "e2"}, e, "FD1");
  auto x16 = axes("X1a6", {"e1", "a6"}, e, "FD2");
  x16.radical = std::vector<Element>{e.element("e2")};
  x16.extension_law = "GD2";
  x12.radical = std::vector<Element>{};
  auto x26 = axes("X2a6", {"e2", "a6"}, e, "FD3");
  x26.radical = std::vector<Element>{};
  for (auto* s : {&x12, &x16, &x26}) {
    s->symmetric = false;
    s->primitive = true;
  }
  e.axis_sets = {x12, x16, x26};
  e.frobenius = form2(one, zero, zero);
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_E(const ParamMap& p) {
  Scalar a = param_or(p, "alpha", 3);
  Scalar b = param_or(p, "beta", 5);
  const Scalar one = q(1), zero = q(0);
  require(!a.is_zero() && !in(a, {q(1, 2)}) && !in(b, {q(0), q(1), q(1, 2)}), "E needs alpha != 0, 1/2 and beta != 0, 1/2, 1");
  require(a * b != q(1, 4) && a + b != one && a != b, "E needs alpha beta != 1/4, alpha + beta != 1, alpha != beta");
  Scalar g = (a * b - (a - one) * (b - one)) / (a * b * q(4) - one);
  require(g != a && g != b, "E needs the third eigenvalue distinct from alpha and beta");
  Scalar lam = (one - a - b) / (one - a * b * q(4));
  CatalogEntry e;
  e.name = "E";
  e.description = "e1e2 = alpha e1 + beta e2";
  e.params = {{"alpha", a}, {"beta", b}};
  e.algebra = two_dim(vec({a, b}));
  Scalar den = one - a * b * q(4);
  e.elements["a7"] = vec({(one - a * q(2)) / den, (one - b * q(2)) / den});
  e.laws["FE1"] = table_law({one, b, lam}, {{{b, b}, {one, b}}, {{lam, lam}, {one, lam}}});
  e.laws["FE2"] = table_law({one, a, b}, {{{a, a}, {one, a}}, {{b, b}, {one, b}}});
  e.laws["FE3"] = table_law({one, a, lam}, {{{a, a}, {one, a}}, {{lam, lam}, {one, lam}}});
  e.laws["GE1"] = table_law({one, b, lam, zero}, {{{b, b}, {one, b, zero}}, {{lam, lam}, {one, lam, zero}}});
  e.laws["GE2"] = table_law({one, a, b, zero}, {{{a, a}, {one, a, zero}}, {{b, b}, {one, b, zero}}});
  e.laws["GE3"] = table_law({one, a, lam, zero}, {{{a, a}, {one, a, zero}}, {{lam, lam}, {one, lam, zero}}});
  std::vector<AxisSet> sets;
  if (a != one) {
    auto x12 = axes("X12", {"e1", "e2"}, e, "FE2");
    x12.extension_law = "GE2";
    sets.push_back(x12);
  }
  auto x17 = axes("X1a7", {"e1", "a7"}, e, "FE1");
  x17.extension_law = "GE1";
  sets.push_back(x17);
  if (a != one) {
    auto x27 = axes("X2a7", {"e2", "a7"}, e, "FE3");
    x27.extension_law = "GE3";
    sets.push_back(x27);
  }
  for (auto& s : sets) {
    s.symmetric = false;
    s.primitive = true;
    s.radical = std::vector<Element>{};
  }
  e.axis_sets = sets;
  e.frobenius = form2((one - b) / a, one, (one - a) / b);
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_F() {
  const Scalar one = q(1), zero = q(0), h = q(1, 2);
  CatalogEntry e;
  e.name = "F";
  e.description = "e1e2 = e1/2";
  e.algebra = two_dim(vec({h, zero}));
  e.laws["FF"] = table_law({one, h, zero}, {{{h, h}, {h}}, {{zero, zero}, {one, zero}}});
  auto x12 = axes("X12", {"e1", "e2"}, e, "FF");
  x12.symmetric = false;
  x12.primitive = true;
  x12.radical = std::vector<Element>{};
  e.axis_sets = {x12};
  e.frobenius = form2(zero, zero, one);
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_G(const ParamMap& p) {
  Scalar b = param_or(p, "beta", 5);
  require(!in(b, {q(0), q(1, 2), q(1)}), "G needs beta not in {0, 1/2, 1}");
  const Scalar one = q(1), zero = q(0), h = q(1, 2);
  CatalogEntry e;
  e.name = "G";
  e.description = "e1e2 = e1/2 + beta e2";
  e.params = {{"beta", b}};
  e.algebra = two_dim(vec({h, b}));
  e.laws["FG"] = table_law({one, b, h}, {{{b, b}, {one, b}}, {{h, h}, {one, h}}});
  e.laws["GG"] = table_law({one, b, h, zero}, {{{b, b}, {one, b, zero}}, {{h, h}, {one, h, zero}}});
  auto x12 = axes("X12", {"e1", "e2"}, e, "FG");
  x12.symmetric = false;
  x12.primitive = true;
  x12.radical = std::vector<Element>{};
  x12.extension_law = "GG";
  e.axis_sets = {x12};
  e.frobenius = form2((one - b) * q(2), one, (b * q(2)).inv());
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_H(const ParamMap& p) {
  Scalar g = param_or(p, "gamma", 3);
  require(!in(g, {q(0), q(1), q(2), q(1, 2)}), "H needs gamma not in {0, 1/2, 1, 2}");
  const Scalar one = q(1), zero = q(0);
  Scalar u = (g * q(2)).inv(), w = g * q(1, 2);
  CatalogEntry e;
  e.name = "H";
  e.description = "e1e2 = (gamma/2) e1 + 1/(2 gamma) e2";
  e.params = {{"gamma", g}};
  e.algebra = two_dim(vec({w, u}));
  e.laws["FH"] = table_law({one, u, w}, {{{u, u}, {one, u}}, {{w, w}, {one, w}}});
  e.laws["GH"] = table_law({one, u, w, zero}, {{{u, u}, {one, u, zero}}, {{w, w}, {one, w, zero}}});
  auto x12 = axes("X12", {"e1", "e2"}, e, "FH");
  x12.symmetric = g == q(-1);
  x12.primitive = true;
  x12.radical = std::vector<Element>{};
  x12.extension_law = "GH";
  e.axis_sets = {x12};
  e.frobenius = form2((g * q(2) - one) / (g * g), one, (q(2) - g) * g);
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_I(const ParamMap& p) {
  Scalar a = param_or(p, "alpha", 1);
  Scalar b = param_or(p, "beta", 2);
  require(a != b, "I needs alpha != beta");
  const Scalar one = q(1), zero = q(0), h = q(1, 2);
  CatalogEntry e;
  e.name = "I";
  e.description = "e1e2 = (e1 + e2)/2";
  e.params = {{"alpha", a}, {"beta", b}};
  e.algebra = two_dim(vec({h, h}));
  e.elements["aalpha"] = vec({a, one - a});
  e.elements["abeta"] = vec({b, one - b});
  e.laws["FI"] = table_law({one, h}, {});
  e.laws["GI"] = table_law({one, h, zero}, {{{h, h}, {zero}}});
  auto x = axes("Xab", {"aalpha", "abeta"}, e, "FI");
  x.symmetric = a != -b;
  x.primitive = true;
  x.radical = std::vector<Element>{vec({one, -one})};
  x.extension_law = "GI";
  e.axis_sets = {x};
  e.frobenius = form2(one, one, one);
  e.cocycle = table_cocycle();
  return e;
}

CatalogEntry entry_monster4() {
  // basis a_{-1}, a_0, a_1, a_2
  const Scalar h = q(1, 2);
  AlgebraBuilder b(FieldTag::Rationals, {"am1", "a0", "a1", "a2"});
  for (std::size_t i = 0; i < 4; ++i) b.set(i, i, unit_vector(4, i, FieldTag::Rationals));
  const Vector s = vec({h, q(1), q(1), h});  // (a_{-1} + 2a_0 + 2a_1 + a_2)/2
  for (std::size_t i = 0; i < 3; ++i) {
    Vector v = scale(s, q(-1));
    v[i] += q(2);
    v[i + 1] += q(2);
    b.set(i, i + 1, v);
  }
  b.set(0, 3, vec({h, q(0), q(0), h}));
  // a_i a_{i+2} = a_{i-1} + a_i - a_{i+1}, with a_{-2} = -a_{-1} + a_1 + a_2
  b.set(0, 2, vec({q(0), q(-1), q(1), q(1)}));
  b.set(1, 3, vec({q(1), q(1), q(-1), q(0)}));
  CatalogEntry e;
  e.name = "Monster4";
  e.description = "4-dimensional M(2,1/2)-axial algebra on a_{-1}, a_0, a_1, a_2";
  e.algebra = b.build();
  e.laws["M"] = laws::monster(q(2), h);
  AxisSet x = axes("X01", {"a0", "a1"}, e, "M");
  x.primitive = true;
  e.axis_sets = {x};
  e.elements["u"] = vec({q(1), q(2), q(-1), q(-2)});
  e.elements["v"] = vec({q(1), q(0), q(-1), q(0)});
  e.elements["w"] = vec({q(1), q(0), q(0), q(-1)});
  e.elements["u1"] = vec({q(2), q(1), q(-2), q(-1)});
  e.elements["v1"] = vec({q(0), q(1), q(0), q(-1)});
  return e;
}

}  // namespace

std::vector<CatalogInfo> list_catalog() {
  std::vector<CatalogInfo> out = {
      {"A", "e1e2 = 0", {}, false, ""},
      {"B", "e1e2 = -e1 - e2", {}, false, ""},
      {"C", "e1e2 = alpha(e1 + e2)", {{"alpha", "3"}}, false, ""},
      {"D", "e1e2 = beta e2", {{"beta", "5"}}, false, ""},
      {"E", "e1e2 = alpha e1 + beta e2", {{"alpha", "3"}, {"beta", "5"}}, false, ""},
      {"F", "e1e2 = e1/2", {}, false, ""},
      {"G", "e1e2 = e1/2 + beta e2", {{"beta", "5"}}, false, ""},
      {"H", "e1e2 = (gamma/2) e1 + 1/(2 gamma) e2", {{"gamma", "3"}}, false, ""},
      {"I", "e1e2 = (e1 + e2)/2, axes a_alpha, a_beta", {{"alpha", "1"}, {"beta", "2"}}, false, ""},
      {"Monster4", "4-dimensional M(2,1/2)-axial algebra", {}, false, ""},
  };
  auto more = detail::jordan_catalog_info();
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

CatalogEntry build_entry(const std::string& name, const ParamMap& params) {
  if (name == "A") return entry_A();
  if (name == "B") return entry_B();
  if (name == "C") return entry_C(params);
  if (name == "D") return entry_D(params);
  if (name == "E") return entry_E(params);
  if (name == "F") return entry_F();
  if (name == "G") return entry_G(params);
  if (name == "H") return entry_H(params);
  if (name == "I") return entry_I(params);
  if (name == "Monster4") return entry_monster4();
  bool found = false;
  CatalogEntry e = detail::build_jordan_entry(name, params, found);
  if (!found) throw CatalogError("unknown catalog entry: " + name);
  return e;
}

}  // namespace axial
