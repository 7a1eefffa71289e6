#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axial/scalar.hpp"

namespace axial {

class FusionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fusion law (F, *): a finite set of values with a symmetric table of subsets.
class FusionLaw {
 public:
  static constexpr std::size_t kMaxValues = 64;

  FusionLaw() = default;
  FusionLaw(FieldTag f, std::vector<Scalar> values);

  FieldTag field() const { return field_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::optional<std::size_t> index_of(const Scalar& v) const;
  bool contains_value(const Scalar& v) const { return index_of(v).has_value(); }

  // Sets lambda * mu = mu * lambda = targets.
  FusionLaw& set(const Scalar& lambda, const Scalar& mu, const std::vector<Scalar>& targets);
  FusionLaw& add(const Scalar& lambda, const Scalar& mu, const Scalar& target);
  FusionLaw& add_value(const Scalar& v);

  std::vector<Scalar> star(const Scalar& lambda, const Scalar& mu) const;
  bool star_contains(const Scalar& lambda, const Scalar& mu, const Scalar& nu) const;
  std::uint64_t cell(std::size_t i, std::size_t j) const { return table_[i * values_.size() + j]; }

  // Same law with values sorted in canonical order.
  FusionLaw canonical() const;
  FusionLaw in_field(FieldTag f) const;

  // Equality as laws: same value set and same cells.
  bool operator==(const FusionLaw& o) const;
  bool operator!=(const FusionLaw& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::size_t require_index(const Scalar& v) const;

  FieldTag field_ = FieldTag::Rationals;
  std::vector<Scalar> values_;
  std::vector<std::uint64_t> table_;
};

bool law_contains(const FusionLaw& inner, const FusionLaw& outer);

enum class ZeroMode {
  EmptyRow,  // 0 * lambda = empty for every lambda
  Absorbed   // EmptyRow, and 0 is added to every existing cell
};

FusionLaw augment_with_zero(const FusionLaw& f, ZeroMode mode);

struct C2Grading {
  std::vector<Scalar> plus;
  std::vector<Scalar> minus;
  std::optional<int> sigma0;  // sign of the component holding 0, when 0 is a value
  int sign_of(const Scalar& v) const;
  bool is_trivial() const { return minus.empty(); }
};

class GradingSearchTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every partition F = F_+ u F_- with 1 in F_+ and F_s * F_t contained in F_st.
std::vector<C2Grading> find_c2_gradings(const FusionLaw& f);

namespace laws {
// J(eta): values {1, 0, eta}.
FusionLaw jordan(const Scalar& eta);
// M(alpha, beta): values {1, 0, alpha, beta}.
FusionLaw monster(const Scalar& alpha, const Scalar& beta);
}  // namespace laws

}  // namespace axial
