#include "specalc/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "specalc/errors.hpp"

namespace specalc {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::jordan(const GaussianRational& lambda, std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = lambda;
    if (i + 1 < n) m(i, i + 1) = 1;
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& entries) {
  ExactMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ExactMatrix ExactMatrix::direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

bool ExactMatrix::is_upper_triangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 1; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::shifted(const GaussianRational& lambda) const {
  ExactMatrix m = *this;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) m(i, i) -= lambda;
  return m;
}

ExactMatrix ExactMatrix::power(unsigned k) const {
  if (!is_square()) throw Error(ErrorCode::non_square, "power of a non-square matrix");
  ExactMatrix result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

ExactMatrix ExactMatrix::column_block(const std::vector<std::size_t>& columns) const {
  ExactMatrix m(rows_, columns.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) m(i, j) = (*this)(i, columns[j]);
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

namespace {

void check_cap(const ExactMatrix& m, std::size_t cap) {
  if (m.rows() > cap || m.cols() > cap) {
    throw Error(ErrorCode::size_overflow, "factor of size " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " exceeds the cap " +
                                              std::to_string(cap));
  }
}

struct Echelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination over the field.
Echelon reduce(ExactMatrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const GaussianRational inv = GaussianRational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const GaussianRational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

void require_square(const ExactMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorCode::non_square, std::string(what) + ": matrix is not square");
}

std::set<GaussianRational> distinct(const std::vector<GaussianRational>& v) { return {v.begin(), v.end()}; }

std::string join(const std::set<GaussianRational>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x.to_string();
  return out + "}";
}

// Gaussian integer with the real-only case kept cheap.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return re == 0 && im == 0; }
};

struct Scratch {
  mpz_class re;
  mpz_class im;
  mpz_class norm;
};

// out = (x·y − u·v) / d, the division being exact. out may alias y.
void cross_div(GaussInt& out, const GaussInt& x, const GaussInt& y, const GaussInt& u, const GaussInt& v,
               const GaussInt& d, Scratch& t) {
  mpz_ptr re = t.re.get_mpz_t();
  mpz_ptr im = t.im.get_mpz_t();
  const bool real = x.im == 0 && y.im == 0 && u.im == 0 && v.im == 0;
  mpz_mul(re, x.re.get_mpz_t(), y.re.get_mpz_t());
  mpz_submul(re, u.re.get_mpz_t(), v.re.get_mpz_t());
  if (real) {
    mpz_set_ui(im, 0);
  } else {
    mpz_submul(re, x.im.get_mpz_t(), y.im.get_mpz_t());
    mpz_addmul(re, u.im.get_mpz_t(), v.im.get_mpz_t());
    mpz_mul(im, x.re.get_mpz_t(), y.im.get_mpz_t());
    mpz_addmul(im, x.im.get_mpz_t(), y.re.get_mpz_t());
    mpz_submul(im, u.re.get_mpz_t(), v.im.get_mpz_t());
    mpz_submul(im, u.im.get_mpz_t(), v.re.get_mpz_t());
  }
  if (d.im == 0) {
    mpz_divexact(out.re.get_mpz_t(), re, d.re.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), im, d.re.get_mpz_t());
    return;
  }
  // times conj(d), then divide by |d|² (set by the caller in t.norm)
  mpz_mul(out.re.get_mpz_t(), re, d.re.get_mpz_t());
  mpz_addmul(out.re.get_mpz_t(), im, d.im.get_mpz_t());
  mpz_mul(out.im.get_mpz_t(), im, d.re.get_mpz_t());
  mpz_submul(out.im.get_mpz_t(), re, d.im.get_mpz_t());
  mpz_divexact(out.re.get_mpz_t(), out.re.get_mpz_t(), t.norm.get_mpz_t());
  mpz_divexact(out.im.get_mpz_t(), out.im.get_mpz_t(), t.norm.get_mpz_t());
}

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i).re = 1;
    return m;
  }

  // Multiplies by the lcm of all denominators, reported in `scale`.
  static IntMatrix scaled_from(const ExactMatrix& src, mpz_class* scale = nullptr) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < src.rows(); ++i)
      for (std::size_t j = 0; j < src.cols(); ++j) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), src(i, j).re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), src(i, j).im().get_den_mpz_t());
      }
    IntMatrix m(src.rows(), src.cols());
    for (std::size_t i = 0; i < src.rows(); ++i)
      for (std::size_t j = 0; j < src.cols(); ++j) {
        const Rational re = src(i, j).re() * l;
        const Rational im = src(i, j).im() * l;
        m.at(i, j) = {re.get_num(), im.get_num()};
      }
    if (scale != nullptr) *scale = l;
    return m;
  }

  ExactMatrix unscaled(const mpz_class& scale) const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const GaussInt& x = at(i, j);
        if (x.is_zero()) continue;
        Rational re(x.re, scale);
        Rational im(x.im, scale);
        re.canonicalize();
        im.canonicalize();
        m(i, j) = GaussianRational(std::move(re), std::move(im));
      }
    return m;
  }

  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return m;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const GaussInt& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const GaussInt& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          GaussInt& cij = c.at(i, j);
          mpz_addmul(cij.re.get_mpz_t(), aik.re.get_mpz_t(), bkj.re.get_mpz_t());
          if (aik.im != 0 || bkj.im != 0) {
            mpz_submul(cij.re.get_mpz_t(), aik.im.get_mpz_t(), bkj.im.get_mpz_t());
            mpz_addmul(cij.im.get_mpz_t(), aik.re.get_mpz_t(), bkj.im.get_mpz_t());
            mpz_addmul(cij.im.get_mpz_t(), aik.im.get_mpz_t(), bkj.re.get_mpz_t());
          }
        }
      }
    return c;
  }

  // Fraction-free (Bareiss) elimination; every division is exact.
  std::size_t rank() const {
    IntMatrix w = *this;
    GaussInt prev{1, 0};
    Scratch scratch;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
      std::size_t p = r;
      while (p < rows_ && w.at(p, col).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = col; j < cols_; ++j) std::swap(w.at(p, j), w.at(r, j));
      const GaussInt pivot = w.at(r, col);
      if (prev.im != 0) scratch.norm = prev.re * prev.re + prev.im * prev.im;
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const GaussInt lead = w.at(i, col);
        for (std::size_t j = col + 1; j < cols_; ++j) {
          cross_div(w.at(i, j), pivot, w.at(i, j), lead, w.at(r, j), prev, scratch);
        }
        w.at(i, col) = GaussInt{};
      }
      prev = pivot;
      ++r;
    }
    return r;
  }

 private:
  GaussInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GaussInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussInt> data_;
};

}  // namespace

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  mpz_class scale_a;
  mpz_class scale_b;
  const IntMatrix ia = IntMatrix::scaled_from(a, &scale_a);
  const IntMatrix ib = IntMatrix::scaled_from(b, &scale_b);
  return (ia * ib).unscaled(scale_a * scale_b);
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b, std::size_t cap) {
  check_cap(a, cap);
  check_cap(b, cap);
  ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

ExactMatrix elementary_rep(const ExactMatrix& a, const ExactMatrix& b, std::size_t cap) {
  require_square(a, "elementary_rep");
  require_square(b, "elementary_rep");
  return kron(b.transpose(), a, cap);
}

std::size_t rank(const ExactMatrix& m) { return IntMatrix::scaled_from(m).rank(); }

ExactMatrix null_space(const ExactMatrix& m) {
  Echelon e = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  ExactMatrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

ExactMatrix column_space(const ExactMatrix& m) { return m.column_block(reduce(m).pivots); }

ExactMatrix inverse(const ExactMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Echelon e = reduce(hconcat(m, ExactMatrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::verification_failed, "matrix is singular");
  }
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

AscentDescent ascent_descent(const ExactMatrix& m, const GaussianRational& lambda) {
  require_square(m, "ascent_descent");
  const std::size_t n = m.rows();
  // Ranks are invariant under the scaling that clears denominators.
  const IntMatrix a = IntMatrix::scaled_from(m.shifted(lambda));

  std::optional<unsigned> ascent;
  std::optional<unsigned> descent;
  IntMatrix current = IntMatrix::identity(n);  // aᵏ
  std::size_t rank_current = n;
  std::size_t multiplicity = 0;
  for (unsigned k = 0; k <= n && !(ascent && descent); ++k) {
    IntMatrix next = current * a;  // aᵏ⁺¹
    const std::size_t rank_next = next.rank();
    // N(aᵏ) ⊆ N(aᵏ⁺¹), with equality iff stacking aᵏ under aᵏ⁺¹ keeps the
    // kernel, i.e. adds no rows outside the row space.
    if (!ascent && IntMatrix::vstack(next, current).rank() == rank_next) {
      ascent = k;
      multiplicity = n - rank_current;
    }
    // R(aᵏ⁺¹) ⊆ R(aᵏ), with equality iff the dimensions agree.
    if (!descent && rank_next == rank_current) descent = k;
    current = std::move(next);
    rank_current = rank_next;
  }
  if (!ascent || !descent || *ascent != *descent) {
    throw Error(ErrorCode::verification_failed, "ascent and descent disagree at " + lambda.to_string());
  }
  return {*ascent, *descent, *ascent, multiplicity};
}

bool satisfies_drazin_identities(const ExactMatrix& m, const ExactMatrix& d, unsigned index) {
  const ExactMatrix mk = m.power(index);
  return mk * d * m == mk && d * m * d == d && m * d == d * m;
}

DrazinResult drazin_inverse(const ExactMatrix& m) {
  require_square(m, "drazin_inverse");
  const std::size_t n = m.rows();
  const unsigned index = ascent_descent(m, GaussianRational(0)).pole_order;
  DrazinResult out{ExactMatrix(n, n), index};
  if (index == 0) {
    out.inverse = inverse(m);
  } else {
    const ExactMatrix mk = m.power(index);
    const ExactMatrix range = column_space(mk);
    const ExactMatrix kernel = null_space(mk);
    const std::size_t r = range.cols();
    if (r > 0) {
      // In the basis [range | kernel] m is block diagonal (core, nilpotent).
      const ExactMatrix basis = hconcat(range, kernel);
      const ExactMatrix basis_inv = inverse(basis);
      const ExactMatrix split = basis_inv * m * basis;
      ExactMatrix core(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) core(i, j) = split(i, j);
      const ExactMatrix core_inv = inverse(core);
      ExactMatrix block(n, n);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) block(i, j) = core_inv(i, j);
      out.inverse = basis * block * basis_inv;
    }
  }
  if (!satisfies_drazin_identities(m, out.inverse, index)) {
    throw Error(ErrorCode::verification_failed, "Drazin identities fail");
  }
  return out;
}

Triangularized Triangularized::upper(ExactMatrix t) {
  const std::size_t n = t.rows();
  return {ExactMatrix::identity(n), std::move(t)};
}

ExactMatrix Triangularized::matrix() const { return similarity * triangular * inverse(similarity); }

Triangularized Triangularized::transposed() const {
  // mᵀ = P⁻ᵀ Tᵀ Pᵀ and J Tᵀ J is upper triangular for the exchange matrix J.
  const std::size_t n = triangular.rows();
  ExactMatrix exchange(n, n);
  for (std::size_t i = 0; i < n; ++i) exchange(i, n - 1 - i) = 1;
  return {inverse(similarity).transpose() * exchange, exchange * triangular.transpose() * exchange};
}

Triangularized kron(const Triangularized& a, const Triangularized& b, std::size_t cap) {
  return {kron(a.similarity, b.similarity, cap), kron(a.triangular, b.triangular, cap)};
}

Triangularized elementary_rep(const Triangularized& a, const Triangularized& b, std::size_t cap) {
  return kron(b.transposed(), a, cap);
}

std::vector<GaussianRational> triangular_spectrum(const ExactMatrix& m) {
  if (!m.is_upper_triangular()) throw Error(ErrorCode::not_triangular, "matrix is not upper triangular");
  std::vector<GaussianRational> diag;
  for (std::size_t i = 0; i < m.rows(); ++i) diag.push_back(m(i, i));
  return diag;
}

std::vector<GaussianRational> triangular_spectrum(const ExactMatrix& m, const Triangularized& form) {
  if (!form.triangular.is_upper_triangular()) {
    throw Error(ErrorCode::not_triangular, "declared form is not upper triangular");
  }
  if (form.similarity.rows() != m.rows() || form.matrix() != m) {
    throw Error(ErrorCode::not_triangular, "declared similarity does not reproduce the matrix");
  }
  return triangular_spectrum(form.triangular);
}

MatrixPairReport validate_matrix_pair(const Triangularized& a, const Triangularized& b, ProductMode mode,
                                      std::size_t cap) {
  MatrixPairReport report;
  auto check = [&report](std::string name, bool passed, std::string witness = {}) {
    report.checks.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
  };

  const ExactMatrix ma = a.matrix();
  const ExactMatrix mb = b.matrix();
  const auto spec_a = distinct(triangular_spectrum(ma, a));
  const auto spec_b = distinct(triangular_spectrum(mb, b));

  const Triangularized tensor_form = kron(a, b, cap);
  const Triangularized elem_form = elementary_rep(a, b, cap);
  const ExactMatrix tensor = kron(ma, mb, cap);
  const ExactMatrix elem = elementary_rep(ma, mb, cap);
  const auto spec_tensor = distinct(triangular_spectrum(tensor, tensor_form));
  const auto spec_elem = distinct(triangular_spectrum(elem, elem_form));

  const ExactMatrix& product = mode == ProductMode::tensor ? tensor : elem;
  const auto& spec_product = mode == ProductMode::tensor ? spec_tensor : spec_elem;
  report.product_spectrum.assign(spec_product.begin(), spec_product.end());

  std::set<GaussianRational> pairwise;
  for (const auto& x : spec_a)
    for (const auto& y : spec_b) pairwise.insert(x * y);
  check("spectrum_is_pairwise_products", spec_product == pairwise,
        join(spec_product) + " vs " + join(pairwise));
  check("modes_share_spectrum", spec_tensor == spec_elem, join(spec_tensor) + " vs " + join(spec_elem));

  // Orders at every eigenvalue; also confirms the read-off spectrum is
  // complete: algebraic multiplicities must add up to the dimension.
  auto orders_of = [&](const ExactMatrix& m, const std::set<GaussianRational>& spec, const std::string& label) {
    std::map<GaussianRational, unsigned> orders;
    std::size_t multiplicity = 0;
    bool ok = true;
    std::string witness;
    for (const auto& lambda : spec) {
      try {
        AscentDescent ad = ascent_descent(m, lambda);
        orders[lambda] = ad.pole_order;
        if (ad.pole_order == 0) {
          ok = false;
          witness = lambda.to_string() + " is not an eigenvalue";
        }
        multiplicity += ad.algebraic_multiplicity;
      } catch (const Error& e) {
        ok = false;
        witness = e.what();
      }
    }
    if (multiplicity != m.rows()) {
      ok = false;
      witness = "multiplicities sum to " + std::to_string(multiplicity) + " of " + std::to_string(m.rows());
    }
    check(label + "_every_point_is_pole", ok, witness);
    return orders;
  };
  const auto orders_a = orders_of(ma, spec_a, "a");
  const auto orders_b = orders_of(mb, spec_b, "b");
  const auto orders_tensor = orders_of(tensor, spec_tensor, "tensor");
  const auto orders_elem = orders_of(elem, spec_elem, "elementary");
  const auto& orders_product = mode == ProductMode::tensor ? orders_tensor : orders_elem;
  report.pole_orders.assign(orders_product.begin(), orders_product.end());

  check("modes_share_pole_orders", orders_tensor == orders_elem);

  bool bound_ok = true;
  std::string bound_witness;
  for (const auto& [lambda, order] : orders_product) {
    unsigned bound = 0;
    for (const auto& [mu, oa] : orders_a)
      for (const auto& [nu, ob] : orders_b)
        if (mu * nu == lambda) bound = std::max(bound, oa + ob - 1);
    if (order > bound) {
      bound_ok = false;
      bound_witness = "order " + std::to_string(order) + " at " + lambda.to_string() + " exceeds " +
                      std::to_string(bound);
    }
  }
  check("pole_order_bound", bound_ok, bound_witness);

  auto drazin_ok = [](const ExactMatrix& m) {
    try {
      DrazinResult d = drazin_inverse(m);
      return satisfies_drazin_identities(m, d.inverse, d.index);
    } catch (const Error&) {
      return false;
    }
  };
  check("drazin_identities_a", drazin_ok(ma));
  check("drazin_identities_b", drazin_ok(mb));
  check("drazin_identities_product", drazin_ok(product));

  report.ok = std::all_of(report.checks.begin(), report.checks.end(), [](const MatrixCheck& c) { return c.passed; });
  return report;
}

ExactMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(in >> rows >> cols) || rows == 0 || cols == 0) {
    throw SyntaxError(1, 1, "expected positive 'rows cols' header");
  }
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::string token;
      if (!(in >> token)) {
        throw SyntaxError(i + 2, 1, "missing entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      try {
        m(i, j) = GaussianRational::parse(token);
      } catch (const SyntaxError& e) {
        throw SyntaxError(i + 2, e.column(), std::string("entry '") + token + "': " + e.what());
      }
    }
  }
  std::string extra;
  if (in >> extra) throw SyntaxError(rows + 2, 1, "unexpected trailing entry '" + extra + "'");
  return m;
}

std::string render_matrix(const ExactMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace specalc
