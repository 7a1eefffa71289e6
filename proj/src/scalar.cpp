#include "axial/scalar.hpp"

#include <regex>
#include <sstream>

namespace axial {

std::string to_string(FieldTag f) {
  return f == FieldTag::Rationals ? "Q" : "Q(i)";
}

FieldTag parse_field_tag(std::string_view text) {
  if (text == "Q" || text == "rationals") return FieldTag::Rationals;
  if (text == "Q(i)" || text == "Qi" || text == "gaussian") return FieldTag::GaussianRationals;
  throw ParseError("unknown field tag: " + std::string(text));
}

Scalar::Scalar(long v, FieldTag f) : re_(v), im_(0), field_(f) {}

Scalar::Scalar(mpq_class re, FieldTag f) : re_(std::move(re)), im_(0), field_(f) {
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)), field_(FieldTag::GaussianRationals) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::ratio(long num, long den, FieldTag f) {
  if (den == 0) throw DivisionByZero("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q, f);
}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("mixed-field operation: " + to_string(field_) + " vs " + to_string(o.field_));
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (field_ == FieldTag::Rationals || sgn(im_) == 0) {
    r.re_ = 1 / re_;
    return r;
  }
  mpq_class norm = re_ * re_ + im_ * im_;
  r.re_ = re_ / norm;
  r.im_ = -im_ / norm;
  return r;
}

Scalar Scalar::in_field(FieldTag f) const {
  if (f == FieldTag::Rationals && !is_real()) {
    throw FieldMismatch("imaginary part under Rationals tag");
  }
  Scalar r = *this;
  r.field_ = f;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  re_ += o.re_;
  if (field_ == FieldTag::GaussianRationals) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  re_ -= o.re_;
  if (field_ == FieldTag::GaussianRationals) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (field_ == FieldTag::Rationals || (sgn(im_) == 0 && sgn(o.im_) == 0)) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inv();
}

Scalar& Scalar::operator*=(const mpq_class& q) {
  re_ *= q;
  if (sgn(im_) != 0) im_ *= q;
  return *this;
}

namespace {
thread_local mpq_class scratch;
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  require_same(a);
  require_same(b);
  if (field_ == FieldTag::Rationals || (sgn(a.im_) == 0 && sgn(b.im_) == 0)) {
    mpq_mul(scratch.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    mpq_sub(re_.get_mpq_t(), re_.get_mpq_t(), scratch.get_mpq_t());
    return;
  }
  *this -= a * b;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  require_same(a);
  require_same(b);
  if (field_ == FieldTag::Rationals || (sgn(a.im_) == 0 && sgn(b.im_) == 0)) {
    mpq_mul(scratch.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    mpq_add(re_.get_mpq_t(), re_.get_mpq_t(), scratch.get_mpq_t());
    return;
  }
  *this += a * b;
}

int Scalar::compare(const Scalar& o) const {
  int c = cmp(re_, o.re_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(im_, o.im_);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && re_ == o.re_ && im_ == o.im_;
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string s = re_.get_str();
  if (sgn(im_) < 0) {
    s += "-";
    s += mpq_class(-im_).get_str();
  } else {
    s += "+";
    s += im_.get_str();
  }
  s += "i";
  return s;
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
Scalar operator*(Scalar a, const mpq_class& q) { return a *= q; }
Scalar operator*(const mpq_class& q, Scalar a) { return a *= q; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

mpq_class parse_rational(const std::string& text) {
  auto slash = text.find('/');
  mpz_class num, den(1);
  if (num.set_str(text.substr(0, slash), 10) != 0) throw ParseError("bad integer in '" + text + "'");
  if (slash != std::string::npos) {
    if (den.set_str(text.substr(slash + 1), 10) != 0) throw ParseError("bad denominator in '" + text + "'");
    if (den == 0) throw DivisionByZero("zero denominator in '" + text + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar parse_scalar(std::string_view text, FieldTag f) {
  static const std::regex rational_re(R"(^\(?([+-]?\d+(?:/\d+)?)\)?$)");
  static const std::regex gaussian_re(R"(^\(?([+-]?\d+(?:/\d+)?)\)?([+-])\(?(\d+(?:/\d+)?|-\d+(?:/\d+)?)?\)?i$)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, rational_re)) {
    return Scalar(parse_rational(m[1].str()), f);
  }
  if (std::regex_match(s, m, gaussian_re)) {
    mpq_class re = parse_rational(m[1].str());
    mpq_class im = m[3].matched ? parse_rational(m[3].str()) : mpq_class(1);
    if (m[2].str() == "-") im = -im;
    if (f == FieldTag::Rationals) {
      if (sgn(im) != 0) throw FieldMismatch("imaginary part under Rationals tag: '" + s + "'");
      return Scalar(re, f);
    }
    return Scalar(re, im);
  }
  throw ParseError("malformed scalar literal: '" + s + "'");
}

Scalar scalar_arith(ArithOp op, const Scalar& a, const std::optional<Scalar>& b) {
  auto rhs = [&]() -> const Scalar& {
    if (!b) throw std::invalid_argument("binary operation needs two operands");
    return *b;
  };
  switch (op) {
    case ArithOp::Add: return a + rhs();
    case ArithOp::Sub: return a - rhs();
    case ArithOp::Mul: return a * rhs();
    case ArithOp::Div: return a / rhs();
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inv();
  }
  throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace axial
