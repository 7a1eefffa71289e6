#include "axial/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace axial {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

std::vector<Scalar> parse_scalar_list(const std::string& s, FieldTag f) {
  std::vector<Scalar> out;
  std::string t = trim(s);
  if (t.empty() || t == "{}") return out;
  for (const auto& item : split(t, ',')) {
    if (item.empty()) throw ParseError("empty entry in list: " + s);
    out.push_back(parse_scalar(item, f));
  }
  return out;
}

std::string coef_text(const Scalar& c) {
  std::string s = c.str();
  if (!c.is_real()) return "(" + s + ")";
  return s;
}

}  // namespace

Element parse_combination(const std::string& text, const Algebra& a, const std::map<std::string, Element>& named) {
  const FieldTag f = a.field();
  Element acc = a.zero();
  std::vector<std::string> toks;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+' || c == '-' || c == '*') {
      toks.emplace_back(1, c);
      ++i;
    } else if (c == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string::npos) throw ParseError("unbalanced parenthesis in '" + text + "'");
      toks.push_back(text.substr(i, close - i + 1));
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '+' &&
             text[j] != '-' && text[j] != '*' && text[j] != '(')
        ++j;
      toks.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  if (toks.empty()) throw ParseError("empty linear combination");
  auto lookup = [&](const std::string& w) -> std::optional<Element> {
    if (auto k = a.label_index(w)) return a.basis_vector(*k);
    auto it = named.find(w);
    if (it != named.end()) return it->second;
    return std::nullopt;
  };
  Scalar sign = Scalar::one(f);
  std::optional<Scalar> coef;
  bool expect_term = true;
  for (const auto& t : toks) {
    if (t == "+" || t == "-") {
      if (coef) throw ParseError("coefficient without a basis element in '" + text + "'");
      if (!expect_term) {
        sign = Scalar::one(f);
        expect_term = true;
      }
      if (t == "-") sign = -sign;
      continue;
    }
    if (t == "*") continue;
    if (auto v = lookup(t)) {
      Scalar c = sign * (coef ? *coef : Scalar::one(f));
      acc = add(acc, scale(*v, c));
      coef.reset();
      expect_term = false;
      continue;
    }
    std::string body = t.front() == '(' ? t.substr(1, t.size() - 2) : t;
    if (coef) throw ParseError("two coefficients in a row in '" + text + "'");
    try {
      coef = parse_scalar(body, f);
    } catch (const ParseError&) {
      throw ParseError("unknown basis element or element name '" + t + "'");
    }
  }
  if (coef) {
    if (!coef->is_zero() || !is_zero(acc)) throw ParseError("coefficient without a basis element in '" + text + "'");
  }
  return acc;
}

std::string format_combination(const Element& v, const Algebra& a) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Scalar c = v[i];
    bool neg = c.is_real() && c.re() < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (!c.is_one()) out += coef_text(c) + " ";
    out += a.labels()[i];
  }
  return out.empty() ? "0" : out;
}

AlgebraFile parse_algebra_file(std::istream& in) {
  AlgebraFile out;
  FieldTag field = FieldTag::Rationals;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> products;  // lhs, rhs
  struct PendingElement {
    std::string name, rhs;
  };
  std::vector<PendingElement> elements;
  std::vector<std::pair<std::string, std::string>> axes;
  std::vector<std::pair<std::string, std::vector<std::string>>> law_lines;
  std::map<std::string, std::size_t> cocycle_dims;
  std::vector<std::string> cocycle_order;
  std::vector<std::tuple<std::string, std::string, std::string>> cocycle_lines;

  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto w = words(line);
    const std::string& head = w[0];
    if (head == "field") {
      if (w.size() != 2) fail("expected 'field Q' or 'field Q(i)'");
      field = parse_field_tag(w[1]);
    } else if (head == "basis") {
      if (w.size() < 2) fail("empty basis");
      labels.assign(w.begin() + 1, w.end());
    } else if (head == "element") {
      auto eq = line.find('=');
      if (eq == std::string::npos || w.size() < 4) fail("expected 'element NAME = combination'");
      elements.push_back({w[1], line.substr(eq + 1)});
    } else if (head == "axes") {
      auto eq = line.find('=');
      if (eq == std::string::npos || w.size() < 4) fail("expected 'axes NAME = a, b, ...'");
      axes.emplace_back(w[1], line.substr(eq + 1));
    } else if (head == "law") {
      if (w.size() < 3) fail("expected 'law NAME KIND ...'");
      law_lines.emplace_back(line, w);
    } else if (head == "cocycle") {
      if (w.size() != 3) fail("expected 'cocycle NAME COMPONENTS'");
      std::size_t s = 0;
      try {
        s = std::stoul(w[2]);
      } catch (const std::exception&) {
        fail("bad component count '" + w[2] + "'");
      }
      if (s == 0) fail("cocycle needs at least one component");
      if (!cocycle_dims.emplace(w[1], s).second) fail("duplicate cocycle " + w[1]);
      cocycle_order.push_back(w[1]);
    } else if (head.find('*') != std::string::npos || (w.size() > 1 && w[1] == "*")) {
      auto eq = line.find('=');
      if (eq == std::string::npos) fail("expected 'x*y = combination'");
      products.emplace_back(trim(line.substr(0, eq)), line.substr(eq + 1));
    } else if (cocycle_dims.count(head)) {
      auto eq = line.find('=');
      if (eq == std::string::npos) fail("expected 'NAME x*y = values'");
      std::string lhs = trim(line.substr(head.size(), eq - head.size()));
      cocycle_lines.emplace_back(head, lhs, line.substr(eq + 1));
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (labels.empty()) throw ParseError("missing basis line");

  AlgebraBuilder bld(field, labels);
  Algebra tmp = AlgebraBuilder(field, labels).build();
  auto pair_of = [&](const std::string& lhs) {
    auto parts = split(lhs, '*');
    if (parts.size() != 2) throw ParseError("expected x*y, got '" + lhs + "'");
    auto i = tmp.label_index(parts[0]), j = tmp.label_index(parts[1]);
    if (!i || !j) throw ParseError("unknown basis label in '" + lhs + "'");
    return std::pair{*i, *j};
  };
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [lhs, rhs] : products) {
    auto [i, j] = pair_of(lhs);
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second) throw ParseError("product " + lhs + " given twice");
    bld.set(i, j, parse_combination(rhs, tmp));
  }
  out.algebra = bld.build();

  for (const auto& e : elements) {
    if (out.algebra.label_index(e.name)) throw ParseError("element name " + e.name + " clashes with a basis label");
    out.elements[e.name] = parse_combination(e.rhs, out.algebra, out.elements);
  }
  for (const auto& [name, rhs] : axes) {
    std::vector<std::string> names;
    for (const auto& item : split(rhs, ',')) {
      if (!out.algebra.label_index(item) && !out.elements.count(item))
        throw ParseError("axes " + name + ": unknown element '" + item + "'");
      names.push_back(item);
    }
    out.axes[name] = names;
  }
  for (const auto& [line, w] : law_lines) {
    const std::string& name = w[1];
    const std::string& kind = w[2];
    std::string rest = trim(line.substr(line.find(kind, line.find(name) + name.size()) + kind.size()));
    if (kind == "values") {
      out.laws[name] = FusionLaw(field, parse_scalar_list(rest, field));
    } else if (kind == "jordan") {
      out.laws[name] = laws::jordan(parse_scalar(rest, field));
    } else if (kind == "monster") {
      auto ab = words(rest);
      if (ab.size() != 2) throw ParseError("law " + name + ": monster needs alpha and beta");
      out.laws[name] = laws::monster(parse_scalar(ab[0], field), parse_scalar(ab[1], field));
    } else if (kind == "unit" || kind == "cell") {
      auto it = out.laws.find(name);
      if (it == out.laws.end()) throw ParseError("law " + name + ": values must come first");
      FusionLaw& law = it->second;
      if (kind == "unit") {
        const Scalar one = Scalar::one(field);
        if (!law.contains_value(one)) throw ParseError("law " + name + ": 1 is not a value");
        for (const auto& v : law.values())
          if (!v.is_zero()) law.set(one, v, {v});
      } else {
        auto eq = rest.find('=');
        if (eq == std::string::npos) throw ParseError("law " + name + ": expected 'cell l m = targets'");
        auto lm = words(rest.substr(0, eq));
        if (lm.size() != 2) throw ParseError("law " + name + ": cell needs two values");
        law.set(parse_scalar(lm[0], field), parse_scalar(lm[1], field), parse_scalar_list(rest.substr(eq + 1), field));
      }
    } else {
      throw ParseError("law " + name + ": unknown kind '" + kind + "'");
    }
  }
  const std::size_t n = out.algebra.dim();
  std::map<std::string, std::vector<Matrix>> comps;
  for (const auto& name : cocycle_order)
    comps[name] = std::vector<Matrix>(cocycle_dims[name], Matrix(n, n, field));
  for (const auto& [name, lhs, rhs] : cocycle_lines) {
    auto [i, j] = pair_of(lhs);
    auto vals = parse_scalar_list(rhs, field);
    if (vals.size() != cocycle_dims[name])
      throw ParseError("cocycle " + name + ": expected " + std::to_string(cocycle_dims[name]) + " values");
    for (std::size_t g = 0; g < vals.size(); ++g) {
      comps[name][g](i, j) = vals[g];
      comps[name][g](j, i) = vals[g];
    }
  }
  for (auto& [name, m] : comps) out.cocycles.emplace(name, Cocycle(n, field, m));
  return out;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_algebra_file(in);
}

void write_algebra_file(std::ostream& out, const AlgebraFile& f) {
  const Algebra& a = f.algebra;
  const std::size_t n = a.dim();
  out << "field " << to_string(a.field()) << "\n";
  out << "basis";
  for (const auto& l : a.labels()) out << " " << l;
  out << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector& p = a.basis_product(i, j);
      if (is_zero(p)) continue;
      out << a.labels()[i] << "*" << a.labels()[j] << " = " << format_combination(p, a) << "\n";
    }
  for (const auto& [name, v] : f.elements) out << "element " << name << " = " << format_combination(v, a) << "\n";
  for (const auto& [name, names] : f.axes) {
    out << "axes " << name << " =";
    for (std::size_t k = 0; k < names.size(); ++k) out << (k ? ", " : " ") << names[k];
    out << "\n";
  }
  for (const auto& [name, law] : f.laws) {
    out << "law " << name << " values";
    for (std::size_t k = 0; k < law.size(); ++k) out << (k ? ", " : " ") << law.values()[k].str();
    out << "\n";
    for (std::size_t i = 0; i < law.size(); ++i)
      for (std::size_t j = i; j < law.size(); ++j) {
        auto t = law.star(law.values()[i], law.values()[j]);
        if (t.empty()) continue;
        out << "law " << name << " cell " << law.values()[i].str() << " " << law.values()[j].str() << " =";
        for (std::size_t k = 0; k < t.size(); ++k) out << (k ? ", " : " ") << t[k].str();
        out << "\n";
      }
  }
  for (const auto& [name, c] : f.cocycles) {
    out << "cocycle " << name << " " << c.s() << "\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        bool any = false;
        for (const auto& m : c.components()) any = any || !m(i, j).is_zero();
        if (!any) continue;
        out << name << " " << a.labels()[i] << "*" << a.labels()[j] << " =";
        for (std::size_t g = 0; g < c.s(); ++g) out << (g ? ", " : " ") << c.component(g)(i, j).str();
        out << "\n";
      }
  }
}

AlgebraFile from_catalog(const CatalogEntry& e) {
  AlgebraFile f;
  f.algebra = e.algebra;
  f.elements = e.elements;
  for (const auto& s : e.axis_sets) f.axes[s.name] = s.element_names;
  f.laws = e.laws;
  if (e.cocycle) f.cocycles["theta"] = *e.cocycle;
  return f;
}

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Vector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

json to_json(const Matrix& m) {
  json j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(b));
  return json{{"dim", s.dim()}, {"basis", basis}};
}

json to_json(const FusionLaw& law) {
  json values = json::array(), cells = json::array();
  FusionLaw c = law.canonical();
  for (const auto& v : c.values()) values.push_back(v.str());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i; j < c.size(); ++j) {
      auto t = c.star(c.values()[i], c.values()[j]);
      if (t.empty()) continue;
      json tj = json::array();
      for (const auto& x : t) tj.push_back(x.str());
      cells.push_back(json{{"lambda", c.values()[i].str()}, {"mu", c.values()[j].str()}, {"star", tj}});
    }
  return json{{"values", values}, {"cells", cells}, {"text", c.str()}};
}

json to_json(const Algebra& a) {
  json prods = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Vector& p = a.basis_product(i, j);
      if (is_zero(p)) continue;
      prods.push_back(json{{"left", a.labels()[i]}, {"right", a.labels()[j]}, {"value", to_json(p)}});
    }
  return json{{"field", to_string(a.field())}, {"dim", a.dim()}, {"basis", a.labels()}, {"products", prods}};
}

json to_json(const EigenData& e) {
  json spaces = json::array();
  for (const auto& s : e.spaces)
    spaces.push_back(json{{"value", s.value.str()}, {"dim", s.space.dim()}, {"basis", to_json(s.space)["basis"]}});
  return json{{"element", to_json(e.element)},
              {"semisimple", e.semisimple},
              {"spectrum_complete", e.spectrum_complete},
              {"eigenspaces", spaces}};
}

json to_json(const AxisReport& r) {
  json viol = json::array();
  for (const auto& v : r.violations) {
    json w = json::array();
    for (const auto& x : v.witness) w.push_back(to_json(x));
    viol.push_back(json{{"kind", v.kind}, {"detail", v.detail}, {"witness", w}});
  }
  return json{{"axis", to_json(r.axis)},
              {"is_axis", r.is_axis()},
              {"idempotent", r.idempotent},
              {"semisimple", r.semisimple},
              {"spectrum_complete", r.spectrum_complete},
              {"spectrum_in_law", r.spectrum_in_law},
              {"primitive", r.primitive},
              {"eigen", to_json(r.eigen)},
              {"violations", viol}};
}

json to_json(const AxialCertificate& c) {
  json reps = json::array();
  for (const auto& r : c.reports) reps.push_back(to_json(r));
  return json{{"certified", c.certified()},
              {"generates", c.generates},
              {"closure_dim", c.closure_dim},
              {"max_word_length", c.max_word_length},
              {"axes", reps}};
}

json to_json(const Cocycle& c) {
  json comps = json::array();
  for (const auto& m : c.components()) comps.push_back(to_json(m));
  return json{{"dim", c.n()}, {"components", comps}};
}

json to_json(const CocycleSpace& c) {
  json reps = json::array();
  for (const auto& r : c.quotient_reps) reps.push_back(to_json(r));
  return json{{"unknowns", sym_dim(c.n)},
              {"cocycles_dim", c.cocycles.dim()},
              {"coboundaries_dim", c.coboundaries.dim()},
              {"intersection_dim", c.intersection.dim()},
              {"sum_dim", c.sum.dim()},
              {"quotient_dim", c.quotient_dim},
              {"quotient_reps", reps},
              {"normalized_dim", c.normalized.dim()},
              {"constraint_rank", c.constraint_rank}};
}

}  // namespace axial
