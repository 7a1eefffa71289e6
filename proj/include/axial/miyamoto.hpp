#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/fusion.hpp"

namespace axial {

class MiyamotoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AutSource { Tau, Flip, Product, Identity };

struct AutMatrix {
  Matrix m;  // column k is the image of b_k
  AutSource source = AutSource::Identity;
  std::string label;
};

bool is_automorphism(const Algebra& a, const Matrix& m);

// +1 on F_+ eigenspaces, -1 on F_- eigenspaces; verified multiplicative.
AutMatrix tau_automorphism(const Algebra& a, const Element& axis, const FusionLaw& law, const C2Grading& g);

struct GroupClosure {
  std::vector<Matrix> elements;
  bool completed = false;
};

GroupClosure group_closure(const std::vector<Matrix>& generators, std::size_t cap = 200);
// Smallest k >= 1 with m^k = I, or nullopt when no such k <= cap.
std::optional<std::size_t> matrix_order(const Matrix& m, std::size_t cap = 200);

struct AxisClosure {
  std::vector<Element> axes;
  bool completed = false;
};

AxisClosure axis_closure(const Algebra& a, const std::vector<Element>& axes, const FusionLaw& law,
                         const C2Grading& g, std::size_t cap = 200);

// Automorphism swapping a1 and a2, when one exists; a1 and a2 must generate a.
std::optional<AutMatrix> find_flip(const Algebra& a, const Element& a1, const Element& a2);

}  // namespace axial
