#include "axial/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "axial/io.hpp"
#include "axial/reproduce.hpp"

namespace axial {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string catalog;
  std::vector<std::string> params;
  std::string file;
  std::string axes;
  std::string law;
  std::vector<std::string> elements;
  std::string cocycle;
  std::string output;
  bool json = false;
  std::size_t cap = 200;
  // reproduce
  std::vector<std::string> bundles;
  std::size_t instances = 100;
  std::uint64_t seed = ReproduceOptions{}.seed;
  bool albert = false;
  // catalog
  std::string entry;
};

struct Context {
  AlgebraFile file;
  std::vector<std::string> set_order;  // axis set names in declaration order
  std::optional<CatalogEntry> entry;
  std::vector<Element> axes;
  std::vector<std::string> axis_names;
  std::optional<std::string> set_law;  // law attached to the chosen catalog set
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

Element resolve_element(const Context& c, const std::string& text) {
  return parse_combination(text, c.file.algebra, c.file.elements);
}

Context load(const Options& o) {
  if (o.catalog.empty() == o.file.empty()) throw UsageError("exactly one of --catalog and --file is required");
  Context c;
  if (!o.catalog.empty()) {
    c.entry = build_entry(o.catalog, parse_params(o.params));
    c.file = from_catalog(*c.entry);
    for (const auto& s : c.entry->axis_sets) c.set_order.push_back(s.name);
  } else {
    if (!o.params.empty()) throw UsageError("--param applies to --catalog only");
    c.file = read_algebra_file(o.file);
    for (const auto& [name, _] : c.file.axes) c.set_order.push_back(name);
  }
  if (!o.axes.empty()) {
    std::string set = o.axes;
    if (set == "standard" && !c.file.axes.count(set)) {
      if (c.set_order.empty()) throw UsageError("no axis sets declared");
      set = c.set_order.front();
    }
    if (auto it = c.file.axes.find(set); it != c.file.axes.end()) {
      c.axis_names = it->second;
      if (c.entry) c.set_law = c.entry->axis_set(set).law;
    } else {
      c.axis_names = split_list(o.axes);
    }
    for (const auto& nm : c.axis_names) c.axes.push_back(resolve_element(c, nm));
  }
  return c;
}

const std::vector<Element>& require_axes(const Context& c) {
  if (c.axes.empty()) throw UsageError("--axes is required");
  return c.axes;
}

std::optional<FusionLaw> find_law(const Context& c, const Options& o) {
  std::string name = o.law.empty() ? c.set_law.value_or("") : o.law;
  if (name.empty()) return std::nullopt;
  if (auto it = c.file.laws.find(name); it != c.file.laws.end()) return it->second;
  if (auto g = global_law(name, c.file.algebra.field())) return g;
  throw UsageError("unknown fusion law: " + name);
}

FusionLaw require_law(const Context& c, const Options& o) {
  auto law = find_law(c, o);
  if (!law) throw UsageError("--law is required");
  return *law;
}

Cocycle require_cocycle(const Context& c, const Options& o) {
  std::string name = o.cocycle;
  if (name.empty()) {
    if (c.file.cocycles.size() != 1) throw UsageError("--cocycle is required");
    name = c.file.cocycles.begin()->first;
  }
  auto it = c.file.cocycles.find(name);
  if (it == c.file.cocycles.end()) throw UsageError("unknown cocycle: " + name);
  return it->second;
}

std::vector<Scalar> hints_of(const std::optional<FusionLaw>& law) {
  return law ? law->values() : std::vector<Scalar>{};
}

std::string values_text(const std::vector<Scalar>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

struct Report {
  json doc = json::object();
  std::ostringstream text;
  int code = 0;
};

// ---- subcommands ----

void cmd_check_axial(const Options& o, Report& r) {
  Context c = load(o);
  const auto& axes = require_axes(c);
  FusionLaw law = require_law(c, o);
  AxialCertificate cert = check_axial_algebra(c.file.algebra, axes, law);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const AxisReport& ar = cert.reports[i];
    r.text << c.axis_names[i] << ": " << (ar.is_axis() ? "axis" : "not an axis") << ", spectrum "
           << values_text(ar.eigen.spectrum()) << ", primitive " << (ar.primitive ? "yes" : "no") << "\n";
    for (const auto& v : ar.violations) r.text << "  violation " << v.kind << ": " << v.detail << "\n";
  }
  r.text << "generates: " << (cert.generates ? "yes" : "no") << " (closure dim " << cert.closure_dim
         << ", word length " << cert.max_word_length << ")\n";
  r.text << (cert.certified() ? "certified" : "not certified") << " for " << law.str() << "\n";
  r.doc["axes"] = c.axis_names;
  r.doc["law"] = to_json(law);
  r.doc["certificate"] = to_json(cert);
  r.code = cert.certified() ? 0 : 1;
}

std::vector<std::pair<std::string, Element>> chosen_elements(const Context& c, const Options& o) {
  std::vector<std::pair<std::string, Element>> out;
  for (const auto& e : o.elements) out.emplace_back(e, resolve_element(c, e));
  if (out.empty())
    for (std::size_t i = 0; i < c.axes.size(); ++i) out.emplace_back(c.axis_names[i], c.axes[i]);
  if (out.empty()) throw UsageError("--element or --axes is required");
  return out;
}

void cmd_spectrum(const Options& o, Report& r) {
  Context c = load(o);
  auto hints = hints_of(find_law(c, o));
  json arr = json::array();
  for (const auto& [name, x] : chosen_elements(c, o)) {
    EigenData d = eigen_decompose(c.file.algebra, x, hints);
    r.text << name << ": spectrum " << values_text(d.spectrum()) << (d.semisimple ? ", semisimple" : ", not semisimple")
           << (d.spectrum_complete ? "" : ", spectrum incomplete") << "\n";
    for (const auto& sp : d.spaces) {
      r.text << "  " << sp.value.str() << ":";
      for (const auto& b : sp.space.basis()) r.text << " [" << format_combination(b, c.file.algebra) << "]";
      r.text << "\n";
    }
    json j = to_json(d);
    j["name"] = name;
    arr.push_back(j);
  }
  r.doc["elements"] = arr;
}

void cmd_fusion_min(const Options& o, Report& r) {
  Context c = load(o);
  const auto& axes = require_axes(c);
  auto expected = find_law(c, o);
  FusionLaw m = minimal_law(c.file.algebra, axes, hints_of(expected));
  r.text << "minimal law: " << m.canonical().str() << "\n";
  r.doc["axes"] = c.axis_names;
  r.doc["minimal_law"] = to_json(m);
  if (expected) {
    bool eq = m == *expected;
    bool inside = law_contains(m, *expected);
    r.text << "compared with " << expected->canonical().str() << ": " << (eq ? "equal" : inside ? "strictly contained" : "not contained")
           << "\n";
    r.doc["equal"] = eq;
    r.doc["contained"] = inside;
    r.code = eq ? 0 : 1;
  }
}

void cmd_frobenius(const Options& o, Report& r) {
  Context c = load(o);
  Subspace s = frobenius_space(c.file.algebra);
  r.text << "Frobenius forms: dimension " << s.dim() << "\n";
  for (const auto& f : frobenius_forms(c.file.algebra)) r.text << "  " << to_json(f.gram()).dump() << "\n";
  r.doc["frobenius_space"] = to_json(s);
  if (c.entry && c.entry->frobenius) {
    bool ok = is_frobenius(c.file.algebra, *c.entry->frobenius);
    r.text << "listed form " << (ok ? "is" : "is not") << " a Frobenius form\n";
    r.doc["listed_form"] = to_json(c.entry->frobenius->gram());
    r.doc["listed_form_is_frobenius"] = ok;
    r.code = ok ? 0 : 1;
  }
}

void cmd_radical(const Options& o, Report& r) {
  Context c = load(o);
  const auto& axes = require_axes(c);
  r.doc["axes"] = c.axis_names;
  try {
    RadicalResult rr = radical_axial(c.file.algebra, axes);
    r.text << "radical: dimension " << rr.radical.dim() << "\n";
    for (const auto& b : rr.radical.basis()) r.text << "  " << format_combination(b, c.file.algebra) << "\n";
    r.doc["available"] = true;
    r.doc["radical"] = to_json(rr.radical);
    r.doc["form"] = to_json(rr.form.gram());
  } catch (const RadicalUnavailable& ex) {
    r.text << ex.what() << "\n";
    r.doc["available"] = false;
    r.doc["reason"] = ex.what();
    r.code = 1;
  }
}

void cmd_jordan(const Options& o, Report& r) {
  Context c = load(o);
  Algebra a = c.file.algebra;
  if (!o.cocycle.empty()) a = build_extension(a, require_cocycle(c, o)).algebra;
  JordanResult j = jordan_check(a);
  r.text << "Jordan identity: " << (j.holds ? "holds" : "fails") << "\n";
  r.doc["dim"] = a.dim();
  r.doc["holds"] = j.holds;
  if (j.counterexample) {
    const auto& w = *j.counterexample;
    r.text << "  witness x-slots " << a.labels()[w[0]] << ", " << a.labels()[w[1]] << ", " << a.labels()[w[2]]
           << "; y " << a.labels()[w[3]] << "\n";
    r.doc["witness"] = {a.labels()[w[0]], a.labels()[w[1]], a.labels()[w[2]], a.labels()[w[3]]};
  }
  r.code = j.holds ? 0 : 1;
}

void cmd_cocycles(const Options& o, Report& r) {
  Context c = load(o);
  const auto& axes = require_axes(c);
  FusionLaw law = require_law(c, o);
  std::vector<Element> norm;
  for (const auto& e : o.elements) norm.push_back(resolve_element(c, e));
  CocycleSpace cs = cocycle_space(c.file.algebra, axes, law, norm);
  r.text << "unknowns " << sym_dim(c.file.algebra.dim()) << ", constraint rank " << cs.constraint_rank << "\n"
         << "Z dim " << cs.cocycles.dim() << ", B dim " << cs.coboundaries.dim() << ", Z n B dim "
         << cs.intersection.dim() << ", Z + B dim " << cs.sum.dim() << "\n"
         << "quotient dim " << cs.quotient_dim << "\n";
  if (!norm.empty()) r.text << "normalized dim " << cs.normalized.dim() << "\n";
  r.doc["axes"] = c.axis_names;
  r.doc["law"] = to_json(law);
  r.doc["cocycle_space"] = to_json(cs);
}

json report_json(const ExtensionReport& rep) {
  json j;
  j["condition1"] = rep.condition1;
  j["axial"] = rep.axial;
  j["theta_in_z"] = rep.theta_in_z;
  j["law_preserved"] = rep.law_preserved;
  j["consistent"] = rep.consistent;
  j["induced_law"] = rep.induced ? to_json(*rep.induced) : json(nullptr);
  return j;
}

void cmd_extend(const Options& o, Report& r) {
  Context c = load(o);
  Cocycle th = require_cocycle(c, o);
  r.doc["cocycle"] = to_json(th);
  if (c.axes.empty()) {
    Extension ext = build_extension(c.file.algebra, th);
    r.text << "extension of dimension " << ext.algebra.dim() << "\n";
    r.doc["extension"] = to_json(ext.algebra);
    if (!o.output.empty()) {
      std::ofstream out(o.output);
      if (!out) throw UsageError("cannot write " + o.output);
      AlgebraFile f;
      f.algebra = ext.algebra;
      write_algebra_file(out, f);
    }
    return;
  }
  FusionLaw law = require_law(c, o);
  ExtensionReport rep = extension_axiality(c.file.algebra, th, c.axes, law);
  for (std::size_t i = 0; i < c.axes.size(); ++i)
    r.text << c.axis_names[i] << ": condition (1) " << (rep.condition1[i] ? "holds" : "fails") << "\n";
  r.text << "theta in Z: " << (rep.theta_in_z ? "yes" : "no") << "\n"
         << "axial extension: " << (rep.axial ? "yes" : "no") << "\n";
  if (rep.induced) r.text << "induced law: " << rep.induced->canonical().str() << "\n";
  r.text << "law inside F u {0}: " << (rep.law_preserved ? "yes" : "no") << "\n";
  r.doc["axes"] = c.axis_names;
  r.doc["law"] = to_json(law);
  r.doc["report"] = report_json(rep);
  if (rep.extension) r.doc["extension"] = to_json(rep.extension->algebra);
  if (rep.extension && !o.output.empty()) {
    std::ofstream out(o.output);
    if (!out) throw UsageError("cannot write " + o.output);
    AlgebraFile f;
    f.algebra = rep.extension->algebra;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < c.axes.size(); ++i) {
      f.elements[c.axis_names[i] + "_lift"] = rep.extension->lifted[i];
      names.push_back(c.axis_names[i] + "_lift");
    }
    f.axes["Y"] = names;
    if (rep.induced) f.laws["induced"] = *rep.induced;
    write_algebra_file(out, f);
  }
  r.code = rep.axial ? 0 : 1;
}

void cmd_split(const Options& o, Report& r) {
  Context c = load(o);
  SplitReport s = is_split(c.file.algebra, require_cocycle(c, o));
  r.text << "verdict: " << to_string(s.verdict) << "\n";
  if (!s.reason.empty()) r.text << "  " << s.reason << "\n";
  r.doc["verdict"] = to_string(s.verdict);
  r.doc["classes_independent"] = s.classes_independent;
  r.doc["annihilator"] = to_json(s.annihilator);
  r.doc["reason"] = s.reason;
  r.code = s.verdict == SplitVerdict::Indeterminate ? 1 : 0;
}

void cmd_decompose(const Options& o, Report& r) {
  Context c = load(o);
  Decomposition d = decompose_by_annihilator(c.file.algebra, c.axes);
  r.text << "base dimension " << d.base.dim() << ", annihilator dimension " << d.cocycle.s() << "\n"
         << "rebuild matches: " << (d.rebuild_matches ? "yes" : "no") << "\n";
  r.doc["base"] = to_json(d.base);
  r.doc["cocycle"] = to_json(d.cocycle);
  r.doc["basis"] = to_json(d.basis);
  json axes = json::array();
  for (const auto& x : d.axes) axes.push_back(to_json(x));
  r.doc["axes"] = axes;
  r.doc["rebuild_matches"] = d.rebuild_matches;
  r.code = d.rebuild_matches ? 0 : 1;
}

void cmd_miyamoto(const Options& o, Report& r) {
  Context c = load(o);
  const auto& axes = require_axes(c);
  FusionLaw law = require_law(c, o);
  r.doc["axes"] = c.axis_names;
  std::optional<C2Grading> grading;
  for (const auto& g : find_c2_gradings(law))
    if (!g.is_trivial()) {
      grading = g;
      break;
    }
  if (grading) {
    r.text << "grading: plus " << values_text(grading->plus) << ", minus " << values_text(grading->minus) << "\n";
    std::vector<Matrix> gens;
    for (const auto& x : axes) gens.push_back(tau_automorphism(c.file.algebra, x, law, *grading).m);
    GroupClosure gc = group_closure(gens, o.cap);
    AxisClosure ac = axis_closure(c.file.algebra, axes, law, *grading, o.cap);
    r.text << "Miyamoto group: " << gc.elements.size() << " elements" << (gc.completed ? "" : " (cap reached)") << "\n"
           << "axis closure: " << ac.axes.size() << " axes" << (ac.completed ? "" : " (cap reached)") << "\n";
    for (const auto& x : ac.axes) r.text << "  " << format_combination(x, c.file.algebra) << "\n";
    json closure = json::array();
    for (const auto& x : ac.axes) closure.push_back(to_json(x));
    r.doc["grading"] = {{"plus", to_json(grading->plus)}, {"minus", to_json(grading->minus)}};
    r.doc["group"] = {{"order", gc.elements.size()}, {"completed", gc.completed}};
    r.doc["axis_closure"] = {{"size", ac.axes.size()}, {"completed", ac.completed}, {"axes", closure}};
  } else {
    r.text << "law has no non-trivial C2 grading\n";
    r.doc["grading"] = nullptr;
  }
  if (axes.size() == 2) {
    auto flip = find_flip(c.file.algebra, axes[0], axes[1]);
    r.text << "flip " << c.axis_names[0] << " <-> " << c.axis_names[1] << ": " << (flip ? "yes" : "no") << "\n";
    r.doc["flip"] = flip ? to_json(flip->m) : json(nullptr);
  }
}

void cmd_catalog(const Options& o, Report& r) {
  if (o.entry.empty()) {
    json arr = json::array();
    for (const auto& info : list_catalog()) {
      r.text << info.name;
      for (const auto& [k, v] : info.params) r.text << " " << k << "=" << v;
      r.text << (info.stub ? "  [no products] " : "  ") << info.description;
      if (!info.axes_text.empty()) r.text << "; axes " << info.axes_text;
      r.text << "\n";
      json p = json::object();
      for (const auto& [k, v] : info.params) p[k] = v;
      arr.push_back({{"name", info.name}, {"description", info.description}, {"params", p}, {"stub", info.stub}});
    }
    r.doc["entries"] = arr;
    return;
  }
  CatalogEntry e = build_entry(o.entry, parse_params(o.params));
  r.text << "# " << e.name << ": " << e.description << "\n";
  for (const auto& n : e.notes) r.text << "# " << n << "\n";
  write_algebra_file(r.text, from_catalog(e));
  r.doc["name"] = e.name;
  json p = json::object();
  for (const auto& [k, v] : e.params) p[k] = v.str();
  r.doc["params"] = p;
  r.doc["algebra"] = to_json(e.algebra);
  json sets = json::array();
  for (const auto& s : e.axis_sets) sets.push_back({{"name", s.name}, {"axes", s.element_names}, {"law", s.law}});
  r.doc["axis_sets"] = sets;
  json laws = json::object();
  for (const auto& [k, v] : e.laws) laws[k] = to_json(v);
  r.doc["laws"] = laws;
  r.doc["notes"] = e.notes;
}

void cmd_reproduce(const Options& o, Report& r) {
  ReproduceOptions opt;
  opt.instances = o.instances;
  opt.seed = o.seed;
  opt.albert = o.albert;
  opt.cap = o.cap;
  std::vector<std::string> names = o.bundles.empty() ? reproduce_bundles() : o.bundles;
  json arr = json::array();
  for (const auto& name : names) {
    BundleResult b = run_bundle(name, opt);
    json lines = json::array();
    for (const auto& l : b.lines) {
      r.text << (l.pass ? "PASS " : "FAIL ") << name << ": " << l.name;
      if (!l.detail.empty()) r.text << " [" << l.detail << "]";
      r.text << "\n";
      lines.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    }
    r.text << (b.pass() ? "PASS " : "FAIL ") << name << " (" << b.lines.size() - b.failures() << "/" << b.lines.size()
           << ")\n";
    arr.push_back({{"bundle", name}, {"pass", b.pass()}, {"lines", lines}});
    if (!b.pass()) r.code = 1;
  }
  r.doc["bundles"] = arr;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with axial algebras and their central extensions", "axial"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub, bool axes, bool law) {
    sub->add_option("--catalog", o.catalog, "Catalog entry name");
    sub->add_option("--param", o.params, "Catalog parameter k=v (repeatable)");
    sub->add_option("--file", o.file, "Algebra file");
    if (axes) sub->add_option("--axes", o.axes, "Axis set name, 'standard', or comma-separated elements");
    if (law) sub->add_option("--law", o.law, "Fusion law name (file, catalog, J12 or M)");
    sub->add_flag("--json", o.json, "Emit a JSON document");
  };

  std::vector<std::pair<CLI::App*, std::function<void(const Options&, Report&)>>> cmds;
  auto add = [&](const char* name, const char* help, bool axes, bool law, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    input(sub, axes, law);
    cmds.emplace_back(sub, fn);
    return sub;
  };

  add("check-axial", "Certify an axial algebra for a fusion law", true, true, cmd_check_axial);
  add("spectrum", "Eigenvalues and eigenspaces of multiplication operators", true, true, cmd_spectrum)
      ->add_option("--element", o.elements, "Element (repeatable)");
  add("fusion-min", "Minimal fusion law of a set of axes", true, true, cmd_fusion_min);
  add("frobenius", "Space of Frobenius forms", false, false, cmd_frobenius);
  add("radical", "Radical through a Frobenius form non-isotropic on the axes", true, false, cmd_radical);
  add("jordan", "Check the Jordan identity", false, false, cmd_jordan)
      ->add_option("--cocycle", o.cocycle, "Check the extension by this cocycle instead");
  add("cocycles", "Axial cocycles modulo coboundaries", true, true, cmd_cocycles)
      ->add_option("--element", o.elements, "Normalize theta(b, b) = 0 on these elements (repeatable)");
  CLI::App* ext = add("extend", "Central extension by a cocycle and its axial structure", true, true, cmd_extend);
  ext->add_option("--cocycle", o.cocycle, "Cocycle name");
  ext->add_option("--output", o.output, "Write the extension as an algebra file");
  add("split", "Decide whether the extension by a cocycle splits", false, false, cmd_split)
      ->add_option("--cocycle", o.cocycle, "Cocycle name");
  add("decompose", "Recover base algebra and cocycle from the annihilator", true, false, cmd_decompose);
  add("miyamoto", "Miyamoto group, axis closure and flips", true, true, cmd_miyamoto)
      ->add_option("--cap", o.cap, "Closure cap")
      ->capture_default_str();

  CLI::App* cat = app.add_subcommand("catalog", "List catalog entries or print one as an algebra file");
  cat->add_option("name", o.entry, "Entry name");
  cat->add_option("--param", o.params, "Parameter k=v (repeatable)");
  cat->add_flag("--json", o.json, "Emit a JSON document");
  cmds.emplace_back(cat, cmd_catalog);

  CLI::App* rep = app.add_subcommand("reproduce", "Run reproduction bundles");
  rep->add_option("bundles", o.bundles, "Bundle names (default: all)")->check(CLI::IsMember(reproduce_bundles()));
  rep->add_option("--instances", o.instances, "Instances per randomized property suite")->capture_default_str();
  rep->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  rep->add_option("--cap", o.cap, "Closure cap")->capture_default_str();
  rep->add_flag("--albert", o.albert, "Include the 27-dimensional case");
  rep->add_flag("--json", o.json, "Emit a JSON document");
  cmds.emplace_back(rep, cmd_reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, fn] : cmds) {
    if (!sub->parsed()) continue;
    Report r;
    try {
      fn(o, r);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    if (o.json) {
      json doc;
      doc["command"] = sub->get_name();
      doc["exit_code"] = r.code;
      for (auto& [k, v] : r.doc.items()) doc[k] = v;
      out << doc.dump(2) << "\n";
    } else {
      out << r.text.str();
    }
    return r.code;
  }
  return 2;
}

}  // namespace axial
