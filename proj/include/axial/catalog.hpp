#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/extension.hpp"
#include "axial/fusion.hpp"

namespace axial {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ParamMap = std::map<std::string, Scalar>;

struct AxisSet {
  std::string name;
  std::vector<std::string> element_names;
  std::vector<Element> axes;
  std::string law;                              // key into CatalogEntry::laws
  std::optional<bool> symmetric;                // expected flip existence
  std::optional<bool> primitive;                // expected primitivity
  std::optional<std::vector<Element>> radical;  // expected radical spanning set
  std::optional<std::string> extension_law;     // expected law of the extension by the entry's cocycle
};

struct CatalogEntry {
  std::string name;
  std::string description;
  ParamMap params;
  Algebra algebra;
  std::map<std::string, Element> elements;
  std::vector<AxisSet> axis_sets;
  std::map<std::string, FusionLaw> laws;
  std::optional<BilinearForm> frobenius;
  std::optional<Cocycle> cocycle;
  std::vector<std::string> notes;

  const AxisSet& axis_set(const std::string& name) const;
  const FusionLaw& law(const std::string& name) const;
  Element element(const std::string& name) const;
};

struct CatalogInfo {
  std::string name;
  std::string description;
  std::vector<std::pair<std::string, std::string>> params;  // name, default
  bool stub = false;       // products not available
  std::string axes_text;   // generating axes, for stubs
};

std::vector<CatalogInfo> list_catalog();
CatalogEntry build_entry(const std::string& name, const ParamMap& params = {});

// Laws available by name on every entry: J12 = J(1/2), M = M(2, 1/2).
std::optional<FusionLaw> global_law(const std::string& name, FieldTag f);

ParamMap parse_params(const std::vector<std::string>& assignments, FieldTag f = FieldTag::Rationals);

namespace detail {
// Entries backed by matrix models and the small Jordan algebras.
CatalogEntry build_jordan_entry(const std::string& name, const ParamMap& params, bool& found);
std::vector<CatalogInfo> jordan_catalog_info();
Scalar param_or(const ParamMap& p, const std::string& key, long def);
}  // namespace detail

}  // namespace axial
