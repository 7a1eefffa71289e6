#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace axial {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BundleResult {
  std::string bundle;
  std::vector<CheckLine> lines;
  bool pass() const;
  std::size_t failures() const;
};

struct ReproduceOptions {
  std::size_t instances = 100;  // per randomized property suite
  std::uint64_t seed = 20240607;
  bool albert = false;          // include the 27-dimensional case in jordan-simple
  std::size_t cap = 200;
};

// table1, table2, corollary, table3, monster, jordan-simple, jordan-small,
// jordan-dim4, miyamoto, properties
const std::vector<std::string>& reproduce_bundles();
BundleResult run_bundle(const std::string& name, const ReproduceOptions& opt = {});

}  // namespace axial
