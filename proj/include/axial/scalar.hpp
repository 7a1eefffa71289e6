#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace axial {

enum class FieldTag { Rationals, GaussianRationals };

std::string to_string(FieldTag f);
FieldTag parse_field_tag(std::string_view text);

class FieldMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact element of Q or Q(i). The tag is part of the value: arithmetic between
// scalars carrying different tags throws FieldMismatch. Multiplying by a bare
// mpq_class is always allowed since Q embeds in both fields.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v, FieldTag f = FieldTag::Rationals);  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, FieldTag f = FieldTag::Rationals);  // NOLINT
  Scalar(mpq_class re, mpq_class im);

  static Scalar ratio(long num, long den, FieldTag f = FieldTag::Rationals);
  static Scalar zero(FieldTag f) { return Scalar(0L, f); }
  static Scalar one(FieldTag f) { return Scalar(1L, f); }
  static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  FieldTag field() const { return field_; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar operator-() const;
  Scalar inv() const;
  Scalar in_field(FieldTag f) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar& operator*=(const mpq_class& q);

  // *this -= a * b without a temporary Scalar.
  void sub_mul(const Scalar& a, const Scalar& b);
  void add_mul(const Scalar& a, const Scalar& b);

  // Total order: real part first, then imaginary part.
  int compare(const Scalar& o) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return compare(o) < 0; }

  std::string str() const;

 private:
  void require_same(const Scalar& o) const;

  mpq_class re_{0};
  mpq_class im_{0};
  FieldTag field_ = FieldTag::Rationals;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const mpq_class& q);
Scalar operator*(const mpq_class& q, Scalar a);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Grammar: int | int/int | a+bi | a-bi, where a and b are rational literals,
// optionally parenthesised.
Scalar parse_scalar(std::string_view text, FieldTag f);

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };
Scalar scalar_arith(ArithOp op, const Scalar& a, const std::optional<Scalar>& b = std::nullopt);

}  // namespace axial
