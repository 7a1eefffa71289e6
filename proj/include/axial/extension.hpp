#pragma once

#include <vector>

#include "axial/algebra.hpp"
#include "axial/fusion.hpp"
#include "axial/spectral.hpp"

namespace axial {

class ExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symmetric bilinear map A x A -> V with V = F^s, one symmetric matrix per
// coordinate of V.
class Cocycle {
 public:
  Cocycle() = default;
  Cocycle(std::size_t n, FieldTag f, std::vector<Matrix> coords);

  static Cocycle zero(std::size_t n, std::size_t s, FieldTag f);
  // Each vector holds upper-triangle, row-major coordinates of one component.
  static Cocycle from_vectors(std::size_t n, FieldTag f, const std::vector<Vector>& flat);

  std::size_t n() const { return n_; }
  std::size_t s() const { return coords_.size(); }
  FieldTag field() const { return field_; }
  const Matrix& component(std::size_t g) const { return coords_.at(g); }
  const std::vector<Matrix>& components() const { return coords_; }
  Vector flat(std::size_t g) const { return sym_to_vector(coords_.at(g)); }

  Vector operator()(const Vector& x, const Vector& y) const;
  Cocycle operator+(const Cocycle& o) const;
  Cocycle operator-(const Cocycle& o) const;
  bool operator==(const Cocycle& o) const { return n_ == o.n_ && coords_ == o.coords_; }

 private:
  std::size_t n_ = 0;
  FieldTag field_ = FieldTag::Rationals;
  std::vector<Matrix> coords_;
};

// Linear functional (x, y) -> theta(x, y) on upper-triangle coordinates.
Vector form_row(const Vector& x, const Vector& y);

// delta f (x, y) = f(xy); f is n x s, row i holding f(b_i).
Cocycle coboundary(const Algebra& a, const Matrix& f);
Subspace coboundary_space(const Algebra& a);

struct Extension {
  Algebra algebra;
  std::vector<Element> lifted;  // a + theta(a, a) for each given axis
};

Element lift(const Cocycle& theta, const Element& a);
Extension build_extension(const Algebra& a, const Cocycle& theta, const std::vector<Element>& axes = {});

// theta(a, k) = 0 for every k in ker L_a.
Matrix condition1_constraints(const Algebra& a, const Element& axis, const std::vector<Scalar>& hints = {});
// theta(x, y) - sum_{nu in lambda*mu} nu^{-1} theta(a, z_nu) = 0 whenever 0 is not in lambda*mu.
Matrix condition2_constraints(const Algebra& a, const Element& axis, const FusionLaw& law);

struct CocycleSpace {
  std::size_t n = 0;
  Subspace cocycles;       // Z(A, F; X)
  Subspace coboundaries;   // B(A, F)
  Subspace intersection;   // Z n B
  Subspace sum;            // Z + B
  std::size_t quotient_dim = 0;
  std::vector<Vector> quotient_reps;
  Subspace normalized;     // Z with theta(b, b) = 0 for every requested b
  std::size_t constraint_rank = 0;
};

CocycleSpace cocycle_space(const Algebra& a, const std::vector<Element>& axes, const FusionLaw& law,
                           const std::vector<Element>& normalize_on = {});

// theta - delta f with f(a_j) = theta(a_j, a_j); axes must be linearly independent idempotents.
Cocycle normalize_on_axes(const Algebra& a, const Cocycle& theta, const std::vector<Element>& axes);

enum class SplitVerdict { Split, NonSplit, Indeterminate };
std::string to_string(SplitVerdict v);

struct SplitReport {
  SplitVerdict verdict = SplitVerdict::Indeterminate;
  bool classes_independent = false;
  Subspace annihilator;  // Ann(A_theta)
  std::string reason;
};

SplitReport is_split(const Algebra& a, const Cocycle& theta);

struct ExtensionReport {
  std::vector<bool> condition1;
  bool axial = false;            // every condition (1) holds and Y generates A_theta
  bool theta_in_z = false;       // every component lies in Z(A, F; X)
  bool law_preserved = false;    // minimal law of (A_theta, Y) sits inside F u {0}
  bool consistent = false;       // law_preserved == theta_in_z
  std::optional<FusionLaw> induced;
  std::optional<Extension> extension;
};

ExtensionReport extension_axiality(const Algebra& a, const Cocycle& theta, const std::vector<Element>& axes,
                                   const FusionLaw& law);

struct Decomposition {
  Algebra base;
  Cocycle cocycle;
  std::vector<Element> axes;
  Matrix basis;             // columns: complement basis, then annihilator basis
  std::vector<std::size_t> complement;
  bool rebuild_matches = false;
};

Decomposition decompose_by_annihilator(const Algebra& b, const std::vector<Element>& axes);

// (phi theta)(x, y) = theta(phi x, phi y).
Cocycle aut_action(const Cocycle& theta, const Matrix& phi);

}  // namespace axial
