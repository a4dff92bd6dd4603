#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace specalc {

using Rational = mpq_class;

/// Exact complex number a + b i with a, b rational.
///
/// Both parts are kept canonical (gcd 1, positive denominator) after every
/// operation, so equality is plain structural equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational from_fraction(long num, long den, long im_num = 0,
                                        long im_den = 1);
  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// re² + im², exact.
  Rational abs_sq() const;
  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws Error(division_by_zero) when o is zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  // Lexicographic on (re, im). Only used to give sets a deterministic order.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : a.im_ < b.im_;
  }

  /// Canonical text: "3", "-1/2", "1/2-3/4i", "2i".
  std::string to_string() const;

  /// Parses the whole string; throws SyntaxError on trailing garbage.
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

enum class ArithOp { add, sub, mul, div };

GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

/// |q|² < 1, decided over the rationals.
bool gq_abs_sq_lt_one(const GaussianRational& q);

/// Integer power, n >= 0.
GaussianRational pow(GaussianRational base, unsigned n);

/// Returns n >= 1 with p == c + r·qⁿ, if any.
///
/// Requires r != 0 and 0 < |q|² < 1. The search stops as soon as
/// |r|²|q|²ⁿ < |p - c|², which always happens because the left side is
/// strictly decreasing.
std::optional<unsigned> geom_member(const GaussianRational& c, const GaussianRational& r,
                                    const GaussianRational& q, const GaussianRational& p);

/// Returns k >= 0 with t == qᵏ, if any (same preconditions on q).
std::optional<unsigned> power_index(const GaussianRational& q, const GaussianRational& t);

namespace detail {
// Scans one Gaussian rational starting at pos, skipping blanks between its
// parts. Advances pos past it. Throws SyntaxError with a 1-based column
// relative to the start of src.
GaussianRational scan_gaussian(std::string_view src, std::size_t& pos);
}  // namespace detail

}  // namespace specalc
