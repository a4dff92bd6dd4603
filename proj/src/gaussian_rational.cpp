#include "specalc/gaussian_rational.hpp"

#include <cctype>

#include "specalc/errors.hpp"

namespace specalc {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_fraction(long num, long den, long im_num, long im_den) {
  if (den == 0 || im_den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
  return {Rational(num, den), Rational(im_num, im_den)};
}

Rational GaussianRational::abs_sq() const { return re_ * re_ + im_ * im_; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  Rational d = o.abs_sq();
  Rational re = (re_ * o.re_ + im_ * o.im_) / d;
  Rational im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im = im_ == 1 ? "i" : im_ == -1 ? "-i" : im_.get_str() + "i";
  if (sgn(re_) == 0) return im;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::size_t pos = 0;
  GaussianRational value = detail::scan_gaussian(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) {
    throw SyntaxError(1, pos + 1, "unexpected '" + std::string(1, text[pos]) + "' after number");
  }
  return value;
}

GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return {};
}

bool gq_abs_sq_lt_one(const GaussianRational& q) { return q.abs_sq() < 1; }

GaussianRational pow(GaussianRational base, unsigned n) {
  GaussianRational result(1);
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::optional<unsigned> power_index(const GaussianRational& q, const GaussianRational& t) {
  if (t.is_zero()) return std::nullopt;
  const Rational target = t.abs_sq();
  GaussianRational term(1);
  for (unsigned k = 0;; ++k) {
    if (term == t) return k;
    if (term.abs_sq() < target) return std::nullopt;
    term *= q;
  }
}

std::optional<unsigned> geom_member(const GaussianRational& c, const GaussianRational& r,
                                    const GaussianRational& q, const GaussianRational& p) {
  const GaussianRational offset = p - c;
  if (offset.is_zero()) return std::nullopt;
  const Rational target = offset.abs_sq();
  GaussianRational term = r * q;
  for (unsigned n = 1;; ++n) {
    if (term == offset) return n;
    if (term.abs_sq() < target) return std::nullopt;
    term *= q;
  }
}

namespace detail {
namespace {

struct Scanner {
  std::string_view src;
  std::size_t& pos;

  void skip_blank() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_blank();
    return pos < src.size() && src[pos] == c;
  }
  bool peek_digit() {
    skip_blank();
    return pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(1, pos + 1, msg);
  }
  std::string digits() {
    skip_blank();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(src.substr(start, pos - start));
  }
  // Unsigned rational: nat [ "/" nat ].
  Rational magnitude() {
    std::string num = digits();
    if (peek('/')) {
      ++pos;
      std::string den = digits();
      mpz_class d(den);
      if (d == 0) fail("zero denominator");
      Rational q{mpz_class(num), d};
      q.canonicalize();
      return q;
    }
    return Rational{mpz_class(num)};
  }
};

}  // namespace

GaussianRational scan_gaussian(std::string_view src, std::size_t& pos) {
  Scanner s{src, pos};
  int sign = 1;
  if (s.peek('+') || s.peek('-')) {
    sign = src[pos] == '-' ? -1 : 1;
    ++pos;
  }
  // Bare "i" / "-i".
  if (s.peek('i')) {
    ++pos;
    return {0, Rational(sign)};
  }
  if (!s.peek_digit()) s.fail("expected a number");
  Rational first = s.magnitude() * sign;
  if (s.peek('i')) {
    ++pos;
    return {0, first};
  }
  if (s.peek('+') || s.peek('-')) {
    const std::size_t save = pos;
    int im_sign = src[pos] == '-' ? -1 : 1;
    ++pos;
    Rational im(1);
    if (s.peek_digit()) {
      im = s.magnitude();
    } else if (!s.peek('i')) {
      pos = save;
      return {first, 0};
    }
    if (!s.peek('i')) s.fail("expected 'i' after imaginary part");
    ++pos;
    return {first, im * im_sign};
  }
  return {first, 0};
}

}  // namespace detail

}  // namespace specalc
