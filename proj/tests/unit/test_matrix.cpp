#include <random>

#include "helpers.hpp"
#include "specalc/matrix.hpp"

using namespace specalc;
using namespace specalc::test;

namespace {

GaussianRational determinant(const ExactMatrix& m) {
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  GaussianRational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    ExactMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    GaussianRational term = m(0, c) * determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// Largest k with a nonzero k×k minor.
std::size_t rank_by_minors(const ExactMatrix& m) {
  std::size_t best = 0;
  std::size_t R = m.rows(), C = m.cols();
  for (unsigned rs = 1; rs < (1u << R); ++rs)
    for (unsigned cs = 1; cs < (1u << C); ++cs) {
      std::size_t k = std::popcount(rs);
      if (k != static_cast<std::size_t>(std::popcount(cs)) || k <= best) continue;
      ExactMatrix sub(k, k);
      for (std::size_t r = 0, i = 0; r < R; ++r) {
        if (!(rs >> r & 1)) continue;
        for (std::size_t c = 0, j = 0; c < C; ++c)
          if (cs >> c & 1) sub(i, j++) = m(r, c);
        ++i;
      }
      if (!determinant(sub).is_zero()) best = k;
    }
  return best;
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
  const std::vector<GaussianRational> pool = {1, -1, 2, gq("1/2"), gq("i"), gq("1-i")};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1 + zero_bias);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      int k = pick(rng);
      m(i, j) = k < static_cast<int>(pool.size()) ? pool[k] : GaussianRational(0);
    }
  return m;
}

ExactMatrix unit(std::size_t n, std::size_t m, std::size_t i, std::size_t j) {
  ExactMatrix u(n, m);
  u(i, j) = 1;
  return u;
}

ExactMatrix vec(const ExactMatrix& u) {
  ExactMatrix v(u.rows() * u.cols(), 1);
  for (std::size_t c = 0; c < u.cols(); ++c)
    for (std::size_t r = 0; r < u.rows(); ++r) v(c * u.rows() + r, 0) = u(r, c);
  return v;
}

}  // namespace

TEST_CASE("kron examples") {
  CHECK(kron(ExactMatrix::jordan(0, 2), ExactMatrix{{2}}) == ExactMatrix{{0, 2}, {0, 0}});
  ExactMatrix b{{1, 2}, {3, gq("i")}};
  CHECK(kron(ExactMatrix::identity(2), b) == ExactMatrix::direct_sum(b, b));
  ExactMatrix j = kron(ExactMatrix::jordan(1, 2), ExactMatrix::jordan(1, 2));
  CHECK(j.rows() == 4);
  CHECK(j.is_upper_triangular());
  std::vector<GaussianRational> ones(4, GaussianRational(1));
  CHECK(triangular_spectrum(j) == ones);
  CHECK(test::error_code_of([] { kron(ExactMatrix::identity(13), ExactMatrix::identity(1)); }) ==
        ErrorCode::size_overflow);
}

TEST_CASE("kron mixed product rule") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix a = random_matrix(rng, 2, 2, 2), b = random_matrix(rng, 3, 3, 2);
    ExactMatrix c = random_matrix(rng, 2, 2, 2), d = random_matrix(rng, 3, 3, 2);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("elementary_rep examples") {
  CHECK(elementary_rep(ExactMatrix{{2}}, ExactMatrix{{3}}) == ExactMatrix{{6}});
  CHECK(elementary_rep(ExactMatrix::identity(2), ExactMatrix::identity(3)) == ExactMatrix::identity(6));
  CHECK(elementary_rep(ExactMatrix::jordan(0, 2), ExactMatrix{{1}}) == ExactMatrix{{0, 1}, {0, 0}});
}

TEST_CASE("elementary_rep agrees with direct evaluation on matrix units") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 15; ++t) {
    std::size_t n = 1 + t % 3, m = 1 + (t / 3) % 3;
    ExactMatrix a = random_matrix(rng, n, n, 1), b = random_matrix(rng, m, m, 1);
    ExactMatrix rep = elementary_rep(a, b);
    REQUIRE(rep.rows() == n * m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        ExactMatrix u = unit(n, m, i, j);
        CHECK(rep * vec(u) == vec(a * u * b));
      }
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(ExactMatrix(3, 3)) == 0);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(rank(ExactMatrix::identity(n)) == n);
  CHECK(rank(ExactMatrix::jordan(0, 2)) == 1);
  // rows over the Gaussian rationals: second row is i times the first
  CHECK(rank(ExactMatrix{{1, gq("1+i")}, {gq("i"), gq("-1+i")}}) == 1);
}

TEST_CASE("rank agrees with the largest nonzero minor") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    ExactMatrix m = random_matrix(rng, r, c, 6);
    if (t % 5 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * gq("1/2-i");
    }
    CAPTURE(render_matrix(m));
    CHECK(rank(m) == rank_by_minors(m));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("null_space and column_space") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    ExactMatrix m = random_matrix(rng, 4, 4, 6);
    ExactMatrix n = null_space(m);
    ExactMatrix c = column_space(m);
    CHECK(n.cols() + rank(m) == 4);
    CHECK(c.cols() == rank(m));
    if (n.cols() > 0) CHECK((m * n).is_zero());
  }
}

TEST_CASE("ascent_descent examples") {
  ExactMatrix m = ExactMatrix::direct_sum(ExactMatrix::jordan(0, 2), ExactMatrix{{1}});
  CHECK(rank(m) == 2);
  CHECK(rank(m.power(2)) == 1);
  CHECK(rank(m.power(3)) == 1);
  AscentDescent ad = ascent_descent(m, 0);
  CHECK(ad.ascent == 2);
  CHECK(ad.descent == 2);
  CHECK(ad.pole_order == 2);
  CHECK(ad.algebraic_multiplicity == 2);

  AscentDescent id = ascent_descent(ExactMatrix::identity(3), 1);
  CHECK(id.ascent == 1);
  CHECK(id.descent == 1);

  ExactMatrix jj = kron(ExactMatrix::jordan(1, 2), ExactMatrix::jordan(1, 2));
  CHECK(ascent_descent(jj, 1).pole_order == 3);
  CHECK(ascent_descent(jj, 2).pole_order == 0);
  CHECK(test::error_code_of([] { ascent_descent(ExactMatrix(2, 3), 0); }) == ErrorCode::non_square);
}

TEST_CASE("rank chain is non-increasing and stabilizes at the index") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    ExactMatrix m = random_matrix(rng, 4, 4, 8);
    unsigned index = ascent_descent(m, 0).pole_order;
    std::vector<std::size_t> chain;
    for (unsigned k = 0; k <= 6; ++k) chain.push_back(rank(m.power(k)));
    for (unsigned k = 0; k + 1 < chain.size(); ++k) {
      CHECK(chain[k + 1] <= chain[k]);
      if (k < index) CHECK(chain[k + 1] < chain[k]);
      if (k >= index) CHECK(chain[k + 1] == chain[k]);
    }
  }
}

TEST_CASE("drazin_inverse examples") {
  DrazinResult nil = drazin_inverse(ExactMatrix::jordan(0, 2));
  CHECK(nil.inverse.is_zero());
  CHECK(nil.index == 2);

  ExactMatrix inv{{1, 2}, {0, gq("i")}};
  DrazinResult d = drazin_inverse(inv);
  CHECK(d.index == 0);
  CHECK(d.inverse == inverse(inv));
  CHECK(d.inverse * inv == ExactMatrix::identity(2));

  ExactMatrix idem{{1, 0}, {0, 0}};
  DrazinResult e = drazin_inverse(idem);
  CHECK(e.inverse == idem);
  CHECK(e.index == 1);
}

TEST_CASE("drazin identities on random matrices") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 40; ++t) {
    ExactMatrix m = random_matrix(rng, 1 + t % 5, 1 + t % 5, 5);
    DrazinResult d = drazin_inverse(m);
    ExactMatrix mk = m.power(d.index);
    CHECK(mk * d.inverse * m == mk);
    CHECK(d.inverse * m * d.inverse == d.inverse);
    CHECK(m * d.inverse == d.inverse * m);
    CHECK(satisfies_drazin_identities(m, d.inverse, d.index));
  }
  CHECK_FALSE(satisfies_drazin_identities(ExactMatrix::jordan(0, 2), ExactMatrix::identity(2), 2));
}

TEST_CASE("triangular_spectrum examples") {
  std::vector<GaussianRational> d122 = {1, 2, 2};
  CHECK(triangular_spectrum(ExactMatrix::diagonal(d122)) == d122);
  CHECK(triangular_spectrum(ExactMatrix::jordan(5, 3)) == std::vector<GaussianRational>(3, GaussianRational(5)));
  Triangularized upper{ExactMatrix{{1, 1}, {0, 1}}, ExactMatrix::diagonal({2, 3})};
  CHECK(triangular_spectrum(upper.matrix(), upper) == std::vector<GaussianRational>{2, 3});
  Triangularized f{ExactMatrix{{1, 0}, {1, 1}}, ExactMatrix::diagonal({2, 3})};
  ExactMatrix conj = f.matrix();
  CHECK_FALSE(conj.is_upper_triangular());
  CHECK(triangular_spectrum(conj, f) == std::vector<GaussianRational>{2, 3});
  CHECK(test::error_code_of([&] { triangular_spectrum(conj); }) == ErrorCode::not_triangular);
  Triangularized wrong{ExactMatrix::identity(2), ExactMatrix::diagonal({2, 3})};
  CHECK(test::error_code_of([&] { triangular_spectrum(conj, wrong); }) == ErrorCode::not_triangular);
}

TEST_CASE("triangularized forms of transposes and products") {
  Triangularized a{ExactMatrix{{1, 1}, {0, 1}}, ExactMatrix{{2, 1}, {0, 3}}};
  Triangularized b = Triangularized::upper(ExactMatrix{{gq("i"), 1}, {0, -1}});
  CHECK(a.transposed().matrix() == a.matrix().transpose());
  CHECK(a.transposed().triangular.is_upper_triangular());
  CHECK(kron(a, b).matrix() == kron(a.matrix(), b.matrix()));
  CHECK(elementary_rep(a, b).matrix() == elementary_rep(a.matrix(), b.matrix()));
  CHECK(elementary_rep(a, b).triangular.is_upper_triangular());
}

TEST_CASE("validate_matrix_pair examples") {
  for (ProductMode mode : {ProductMode::tensor, ProductMode::elementary}) {
    CAPTURE(to_string(mode));
    MatrixPairReport z = validate_matrix_pair(Triangularized::upper(ExactMatrix::jordan(0, 2)),
                                              Triangularized::upper(ExactMatrix{{2}}), mode);
    CHECK(z.ok);
    CHECK(z.product_spectrum == std::vector<GaussianRational>{0});

    MatrixPairReport d = validate_matrix_pair(Triangularized::upper(ExactMatrix::diagonal({1, 2})),
                                              Triangularized::upper(ExactMatrix::diagonal({3, 5})), mode);
    CHECK(d.ok);
    CHECK(d.product_spectrum == std::vector<GaussianRational>{3, 5, 6, 10});

    MatrixPairReport j = validate_matrix_pair(Triangularized::upper(ExactMatrix::jordan(1, 2)),
                                              Triangularized::upper(ExactMatrix::jordan(1, 2)), mode);
    CHECK(j.ok);
    REQUIRE(j.pole_orders.size() == 1);
    CHECK(j.pole_orders[0].second == 3);
    for (const MatrixCheck& c : j.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("pole order bound on products") {
  std::mt19937_64 rng(23);
  const std::vector<GaussianRational> eig = {0, 1, -1, 2, gq("i")};
  for (int t = 0; t < 12; ++t) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(eig.size()) - 1);
    ExactMatrix a = ExactMatrix::jordan(eig[pick(rng)], 1 + t % 3);
    ExactMatrix b = ExactMatrix::direct_sum(ExactMatrix::jordan(eig[pick(rng)], 1 + t % 2), ExactMatrix{{eig[pick(rng)]}});
    ExactMatrix k = kron(a, b);
    for (const GaussianRational& mu : triangular_spectrum(a))
      for (const GaussianRational& nu : triangular_spectrum(b)) {
        unsigned bound = ascent_descent(a, mu).pole_order + ascent_descent(b, nu).pole_order - 1;
        CHECK(ascent_descent(k, mu * nu).pole_order <= bound);
      }
  }
}

TEST_CASE("matrix text format") {
  ExactMatrix m = parse_matrix("2 2\n1/2 1+i\n-i 0\n");
  CHECK(m == ExactMatrix{{gq("1/2"), gq("1+i")}, {gq("-i"), 0}});
  CHECK(parse_matrix(render_matrix(m)) == m);
  CHECK(test::error_code_of([] { parse_matrix("2 2\n1 2 3\n"); }) == ErrorCode::syntax_error);
}
