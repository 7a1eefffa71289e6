#include "axial/fusion.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace axial {

FusionLaw::FusionLaw(FieldTag f, std::vector<Scalar> values) : field_(f) {
  for (auto& v : values) add_value(v);
}

FusionLaw& FusionLaw::add_value(const Scalar& v) {
  if (v.field() != field_) throw FieldMismatch("fusion law value outside the law's field");
  if (index_of(v)) return *this;
  if (values_.size() >= kMaxValues) throw FusionError("fusion law too large");
  const std::size_t n = values_.size();
  std::vector<std::uint64_t> t((n + 1) * (n + 1), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * (n + 1) + j] = table_[i * n + j];
  table_ = std::move(t);
  values_.push_back(v);
  return *this;
}

std::optional<std::size_t> FusionLaw::index_of(const Scalar& v) const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i].compare(v) == 0) return i;
  return std::nullopt;
}

std::size_t FusionLaw::require_index(const Scalar& v) const {
  auto i = index_of(v);
  if (!i) throw FusionError("value " + v.str() + " is not in the fusion law");
  return *i;
}

FusionLaw& FusionLaw::set(const Scalar& lambda, const Scalar& mu, const std::vector<Scalar>& targets) {
  std::size_t i = require_index(lambda), j = require_index(mu);
  std::uint64_t mask = 0;
  for (const auto& t : targets) mask |= std::uint64_t{1} << require_index(t);
  const std::size_t n = values_.size();
  table_[i * n + j] = mask;
  table_[j * n + i] = mask;
  return *this;
}

FusionLaw& FusionLaw::add(const Scalar& lambda, const Scalar& mu, const Scalar& target) {
  std::size_t i = require_index(lambda), j = require_index(mu), k = require_index(target);
  const std::size_t n = values_.size();
  table_[i * n + j] |= std::uint64_t{1} << k;
  table_[j * n + i] |= std::uint64_t{1} << k;
  return *this;
}

std::vector<Scalar> FusionLaw::star(const Scalar& lambda, const Scalar& mu) const {
  std::uint64_t mask = cell(require_index(lambda), require_index(mu));
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (mask >> k & 1U) out.push_back(values_[k]);
  std::sort(out.begin(), out.end());
  return out;
}

bool FusionLaw::star_contains(const Scalar& lambda, const Scalar& mu, const Scalar& nu) const {
  auto k = index_of(nu);
  if (!k) return false;
  return (cell(require_index(lambda), require_index(mu)) >> *k & 1U) != 0;
}

FusionLaw FusionLaw::canonical() const {
  std::vector<Scalar> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  FusionLaw out(field_, sorted);
  for (const auto& l : values_)
    for (const auto& m : values_) out.set(l, m, star(l, m));
  return out;
}

FusionLaw FusionLaw::in_field(FieldTag f) const {
  std::vector<Scalar> vals;
  for (const auto& v : values_) vals.push_back(v.in_field(f));
  FusionLaw out(f, vals);
  out.table_ = table_;
  return out;
}

bool FusionLaw::operator==(const FusionLaw& o) const { return law_contains(*this, o) && law_contains(o, *this); }

std::string FusionLaw::str() const {
  FusionLaw c = canonical();
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < c.values_.size(); ++i) os << (i ? ", " : "") << c.values_[i];
  os << "}";
  for (std::size_t i = 0; i < c.values_.size(); ++i)
    for (std::size_t j = i; j < c.values_.size(); ++j) {
      auto s = c.star(c.values_[i], c.values_[j]);
      if (s.empty()) continue;
      os << "; " << c.values_[i] << "*" << c.values_[j] << "={";
      for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
      os << "}";
    }
  return os.str();
}

bool law_contains(const FusionLaw& inner, const FusionLaw& outer) {
  if (inner.field() != outer.field()) return false;
  for (const auto& v : inner.values())
    if (!outer.contains_value(v)) return false;
  for (const auto& l : inner.values())
    for (const auto& m : inner.values())
      for (const auto& t : inner.star(l, m))
        if (!outer.star_contains(l, m, t)) return false;
  return true;
}

FusionLaw augment_with_zero(const FusionLaw& f, ZeroMode mode) {
  const Scalar zero = Scalar::zero(f.field());
  FusionLaw out = f;
  out.add_value(zero);
  if (mode == ZeroMode::Absorbed) {
    for (const auto& l : f.values())
      for (const auto& m : f.values()) out.add(l, m, zero);
  }
  return out;
}

int C2Grading::sign_of(const Scalar& v) const {
  if (std::find(plus.begin(), plus.end(), v) != plus.end()) return 1;
  if (std::find(minus.begin(), minus.end(), v) != minus.end()) return -1;
  throw FusionError("value " + v.str() + " is not graded");
}

std::vector<C2Grading> find_c2_gradings(const FusionLaw& f) {
  const std::size_t n = f.size();
  if (n > 16) throw GradingSearchTooLarge("grading search limited to 16 values");
  if (n == 0) return {C2Grading{}};
  const auto one_idx = f.index_of(Scalar::one(f.field()));
  const std::size_t anchor = one_idx.value_or(0);
  const auto zero_idx = f.index_of(Scalar::zero(f.field()));
  std::vector<C2Grading> out;
  for (std::uint32_t minus = 0; minus < (1U << n); ++minus) {
    if (minus >> anchor & 1U) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i; j < n && ok; ++j) {
        bool odd = ((minus >> i) & 1U) != ((minus >> j) & 1U);
        std::uint64_t allowed = odd ? minus : (((std::uint64_t{1} << n) - 1) & ~std::uint64_t{minus});
        if (f.cell(i, j) & ~allowed) ok = false;
      }
    if (!ok) continue;
    C2Grading g;
    for (std::size_t i = 0; i < n; ++i) ((minus >> i & 1U) ? g.minus : g.plus).push_back(f.values()[i]);
    std::sort(g.plus.begin(), g.plus.end());
    std::sort(g.minus.begin(), g.minus.end());
    if (zero_idx) g.sigma0 = (minus >> *zero_idx & 1U) ? -1 : 1;
    out.push_back(std::move(g));
  }
  return out;
}

namespace laws {

FusionLaw jordan(const Scalar& eta) {
  const FieldTag f = eta.field();
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  FusionLaw law(f, {one, zero, eta});
  law.set(one, one, {one});
  law.set(one, eta, {eta});
  law.set(zero, zero, {zero});
  law.set(zero, eta, {eta});
  law.set(eta, eta, {one, zero});
  return law;
}

FusionLaw monster(const Scalar& alpha, const Scalar& beta) {
  const FieldTag f = alpha.field();
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  FusionLaw law(f, {one, zero, alpha, beta});
  law.set(one, one, {one});
  law.set(one, alpha, {alpha});
  law.set(one, beta, {beta});
  law.set(zero, zero, {zero});
  law.set(zero, alpha, {alpha});
  law.set(zero, beta, {beta});
  law.set(alpha, alpha, {one, zero});
  law.set(alpha, beta, {beta});
  law.set(beta, beta, {one, zero, alpha});
  return law;
}

}  // namespace laws

}  // namespace axial
