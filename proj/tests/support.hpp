#pragma once

#include <random>

#include "axial/catalog.hpp"
#include "axial/extension.hpp"
#include "axial/fusion.hpp"
#include "axial/miyamoto.hpp"
#include "axial/spectral.hpp"

namespace testing {

using namespace axial;

constexpr std::size_t kInstances = 100;

inline Scalar q(long n, long d = 1, FieldTag f = FieldTag::Rationals) { return Scalar::ratio(n, d, f); }

inline Vector v2(const Scalar& a, const Scalar& b) { return {a, b}; }

inline CatalogEntry entry(const std::string& name, std::vector<std::string> params = {}) {
  return build_entry(name, parse_params(params));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 7) : g_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  Scalar rational(long range = 5) { return Scalar::ratio(integer(-range, range), integer(1, 4)); }
  Scalar scalar(FieldTag f, long range = 5) {
    if (f == FieldTag::Rationals) return rational(range);
    return Scalar(rational(range).re(), rational(range).re());
  }
  Scalar nonzero(FieldTag f = FieldTag::Rationals) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }
  Vector vector(std::size_t n, FieldTag f = FieldTag::Rationals) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
    return v;
  }
  // Sparse entries so that ranks vary.
  Matrix matrix(std::size_t r, std::size_t c, FieldTag f = FieldTag::Rationals) {
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (integer(0, 2) > 0) m(i, j) = scalar(f);
    return m;
  }
  Cocycle cocycle(std::size_t n, std::size_t s, FieldTag f = FieldTag::Rationals) {
    std::vector<Vector> flat;
    for (std::size_t g = 0; g < s; ++g) flat.push_back(vector(sym_dim(n), f));
    return Cocycle::from_vectors(n, f, flat);
  }
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(integer(0, long(n) - 1)); }

 private:
  std::mt19937_64 g_;
};

// Two-dimensional entries at two parameter instantiations each.
inline std::vector<CatalogEntry> two_dim_entries() {
  return {entry("A"),
          entry("B"),
          entry("C", {"alpha=3"}),
          entry("C", {"alpha=4"}),
          entry("D", {"beta=5"}),
          entry("D", {"beta=3"}),
          entry("E", {"alpha=3", "beta=5"}),
          entry("E", {"alpha=2", "beta=7"}),
          entry("F"),
          entry("G", {"beta=5"}),
          entry("G", {"beta=3"}),
          entry("H", {"gamma=3"}),
          entry("H", {"gamma=-1"}),
          entry("I", {"alpha=1", "beta=2"}),
          entry("I", {"alpha=3", "beta=-1"})};
}

inline Element lifted_zero_pad(const Element& x, std::size_t extra) {
  Element y = x;
  y.resize(x.size() + extra, Scalar::zero(x.empty() ? FieldTag::Rationals : x[0].field()));
  return y;
}

}  // namespace testing
