#pragma once

#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/fusion.hpp"

namespace axial {

using Polynomial = std::vector<Scalar>;  // coefficients, lowest degree first

Polynomial characteristic_polynomial(const Matrix& m);
Scalar evaluate(const Polynomial& p, const Scalar& x);

struct RootSearch {
  std::vector<Scalar> roots;  // distinct roots found in the field
  Polynomial remainder;       // cofactor with no further roots found
  bool complete = false;      // remainder has degree 0
};

// Roots of p in its field: rational-root scan when the coefficients are real,
// plus exact solutions of a remaining linear or quadratic factor.
RootSearch find_roots(Polynomial p, const std::vector<Scalar>& candidates = {});

struct Eigenspace {
  Scalar value;
  Subspace space;
};

class EigenData {
 public:
  Element element;
  std::vector<Eigenspace> spaces;  // non-zero eigenspaces, canonical value order
  bool semisimple = false;
  bool spectrum_complete = false;

  std::vector<Scalar> spectrum() const;
  const Eigenspace* find(const Scalar& v) const;
  std::size_t dim_of(const Scalar& v) const;

  // Components z_nu of v along the eigenspace decomposition; requires semisimple.
  std::vector<std::pair<Scalar, Vector>> decompose(const Vector& v) const;
  void prepare_decomposition();

 private:
  Matrix basis_inverse_;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
};

EigenData eigen_decompose(const Algebra& a, const Element& x, const std::vector<Scalar>& hints = {});

struct PairObservation {
  Scalar lambda;
  Scalar mu;
  std::vector<Scalar> targets;  // nu with a non-zero z_nu in some product
};

struct Violation {
  std::string kind;
  std::string detail;
  std::vector<Vector> witness;
};

struct AxisReport {
  Element axis;
  bool idempotent = false;
  EigenData eigen;
  bool semisimple = false;
  bool spectrum_complete = false;
  bool spectrum_in_law = false;
  bool primitive = false;
  std::vector<PairObservation> observed;
  std::vector<Violation> violations;
  bool is_axis() const { return violations.empty(); }
};

AxisReport check_axis(const Algebra& a, const Element& axis, const FusionLaw& law);

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Smallest law making every element of X an axis. Throws SpectralError when an
// element is not an idempotent or not semisimple.
FusionLaw minimal_law(const Algebra& a, const std::vector<Element>& axes, const std::vector<Scalar>& hints = {});

struct AxialCertificate {
  std::vector<AxisReport> reports;
  bool generates = false;
  std::size_t closure_dim = 0;
  std::size_t max_word_length = 0;
  bool certified() const;
};

AxialCertificate check_axial_algebra(const Algebra& a, const std::vector<Element>& axes, const FusionLaw& law);

}  // namespace axial
