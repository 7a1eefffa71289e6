#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "axial/catalog.hpp"
#include "axial/extension.hpp"
#include "axial/miyamoto.hpp"
#include "axial/spectral.hpp"

namespace axial {

// Text format, one directive per line, '#' starts a comment:
//
//   field Q                      # or Q(i)
//   basis e1 e2 n1
//   e1*e2 = 1/2 e1 + (1+i) n1    # omitted products are zero
//   element a = e1 + e2
//   axes X = e1, a               # element names or basis labels
//   law F values 1, 0, 1/2
//   law F unit                   # 1*l = l for every l != 0
//   law F cell 1/2 1/2 = 0, 1    # empty right-hand side means the empty set
//   law J jordan 1/2             # also: law M monster 2 1/2
//   cocycle th 1                 # number of components
//   th e1*e2 = 1                 # one value per component, comma separated
struct AlgebraFile {
  Algebra algebra;
  std::map<std::string, Element> elements;
  std::map<std::string, std::vector<std::string>> axes;  // set name -> element names
  std::map<std::string, FusionLaw> laws;
  std::map<std::string, Cocycle> cocycles;
};

AlgebraFile parse_algebra_file(std::istream& in);
AlgebraFile read_algebra_file(const std::string& path);
void write_algebra_file(std::ostream& out, const AlgebraFile& f);
AlgebraFile from_catalog(const CatalogEntry& e);

// Linear combination of basis labels and named elements, e.g. "1/2 e1 - n2".
Element parse_combination(const std::string& text, const Algebra& a,
                          const std::map<std::string, Element>& named = {});
std::string format_combination(const Element& v, const Algebra& a);

using json = nlohmann::ordered_json;

json to_json(const Scalar& s);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const FusionLaw& law);
json to_json(const Algebra& a);
json to_json(const EigenData& e);
json to_json(const AxisReport& r);
json to_json(const AxialCertificate& c);
json to_json(const Cocycle& c);
json to_json(const CocycleSpace& c);

}  // namespace axial
