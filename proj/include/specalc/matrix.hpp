#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "specalc/gaussian_rational.hpp"
#include "specalc/product.hpp"

namespace specalc {

/// Dense matrix over the Gaussian rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  /// Jordan block of size n with eigenvalue lambda (ones on the superdiagonal).
  static ExactMatrix jordan(const GaussianRational& lambda, std::size_t n);
  static ExactMatrix diagonal(const std::vector<GaussianRational>& entries);
  static ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;
  bool is_upper_triangular() const;

  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  ExactMatrix shifted(const GaussianRational& lambda) const;  // this - λI
  ExactMatrix power(unsigned k) const;
  ExactMatrix column_block(const std::vector<std::size_t>& columns) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

inline constexpr std::size_t kDefaultDimensionCap = 12;

/// Standard Kronecker layout: block (i, j) is a(i, j)·b. Throws size_overflow
/// when a factor dimension exceeds `cap`.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b, std::size_t cap = kDefaultDimensionCap);

/// Matrix of U ↦ aUb on n×m matrices with vec stacking columns left to
/// right: vec(aUb) = (bᵀ ⊗ a) vec(U).
ExactMatrix elementary_rep(const ExactMatrix& a, const ExactMatrix& b, std::size_t cap = kDefaultDimensionCap);

std::size_t rank(const ExactMatrix& m);

/// Basis of N(m) as columns.
ExactMatrix null_space(const ExactMatrix& m);
/// Basis of R(m) as columns (pivot columns of m).
ExactMatrix column_space(const ExactMatrix& m);
/// Throws verification_failed when m is singular.
ExactMatrix inverse(const ExactMatrix& m);

struct AscentDescent {
  unsigned ascent = 0;
  unsigned descent = 0;
  unsigned pole_order = 0;  // 0 iff λ is not an eigenvalue
  std::size_t algebraic_multiplicity = 0;  // dim N((m - λ)^pole_order)
};

/// Ascent from the kernel chain of (m - λ)ᵏ and descent from its range
/// chain, computed separately with fraction-free elimination. Throws non_square, and verification_failed
/// if they differ.
AscentDescent ascent_descent(const ExactMatrix& m, const GaussianRational& lambda);

struct DrazinResult {
  ExactMatrix inverse;
  unsigned index = 0;
};

/// Core-nilpotent splitting on R(mᵏ) ⊕ N(mᵏ), k the index. The defining
/// identities mᵏ = mᵏDm, DmD = D and mD = Dm are checked before returning.
DrazinResult drazin_inverse(const ExactMatrix& m);

bool satisfies_drazin_identities(const ExactMatrix& m, const ExactMatrix& d, unsigned index);

/// m = similarity · triangular · similarity⁻¹ with `triangular` upper
/// triangular.
struct Triangularized {
  ExactMatrix similarity;
  ExactMatrix triangular;

  static Triangularized upper(ExactMatrix t);
  ExactMatrix matrix() const;
  /// Form of the transpose, re-triangularized with the exchange matrix.
  Triangularized transposed() const;
};

Triangularized kron(const Triangularized& a, const Triangularized& b, std::size_t cap = kDefaultDimensionCap);
Triangularized elementary_rep(const Triangularized& a, const Triangularized& b,
                              std::size_t cap = kDefaultDimensionCap);

/// Diagonal of an upper-triangular matrix. Throws not_triangular.
std::vector<GaussianRational> triangular_spectrum(const ExactMatrix& m);
/// Diagonal of the declared form after checking that it reproduces m
/// exactly. Throws not_triangular.
std::vector<GaussianRational> triangular_spectrum(const ExactMatrix& m, const Triangularized& form);

struct MatrixCheck {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct MatrixPairReport {
  bool ok = false;
  std::vector<GaussianRational> product_spectrum;  // distinct, sorted
  std::vector<std::pair<GaussianRational, unsigned>> pole_orders;
  std::vector<MatrixCheck> checks;
};

MatrixPairReport validate_matrix_pair(const Triangularized& a, const Triangularized& b, ProductMode mode,
                                      std::size_t cap = kDefaultDimensionCap);

/// "rows cols" then row-major entries in Gaussian-rational text form.
ExactMatrix parse_matrix(std::string_view text);
std::string render_matrix(const ExactMatrix& m);

}  // namespace specalc
