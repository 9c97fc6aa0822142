#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <vector>

#include "esymdom/matrix.hpp"
#include "esymdom/rng.hpp"
#include "esymdom/sampling.hpp"

using namespace esymdom;

namespace {

Matrix diag(std::initializer_list<double> d)
{
    Matrix m(d.size());
    std::size_t i = 0;
    for (double v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

SpdMatrix random_spd(std::uint64_t seed, std::size_t n, double lo = 0.2,
                     double hi = 5.0)
{
    SplitMix64 rng(seed);
    const Matrix q = esymdom::detail::random_orthogonal(rng, n);
    std::vector<double> d(n);
    for (double& v : d) v = rng.log_uniform(lo, hi);
    return SpdMatrix{esymdom::detail::conjugate_diag(q, d)};
}

// elimination oracle for determinants (LU with partial pivoting)
double det_by_elimination(Matrix m)
{
    const std::size_t n = m.dim();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m(r, col)) > std::fabs(m(piv, col))) piv = r;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

} // namespace

TEST_CASE("jacobi eigensolver")
{
    SECTION("diagonal input")
    {
        const SpdMatrix a{diag({3, 1, 2})};
        CHECK(a.eigenvalues() == std::vector<double>{1, 2, 3});
        // eigenvector columns are signed unit vectors
        for (std::size_t c = 0; c < 3; ++c) {
            double off = 0.0;
            double on = 0.0;
            for (std::size_t r = 0; r < 3; ++r) {
                const double v = std::fabs(a.eigenvectors()(r, c));
                if (v > on) {
                    off += on;
                    on = v;
                } else {
                    off += v;
                }
            }
            CHECK(on == Catch::Approx(1.0).margin(1e-12));
            CHECK(off <= 1e-12);
        }
    }
    SECTION("identity")
    {
        const SpdMatrix a{Matrix::identity(4)};
        for (double l : a.eigenvalues()) CHECK(l == Catch::Approx(1.0).margin(1e-13));
    }
    SECTION("random SPD reconstruction within 1e-10")
    {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            for (std::size_t n : {2u, 5u, 8u}) {
                // the SpdMatrix constructor enforces the reconstruction and
                // orthogonality bounds; building is the assertion
                const SpdMatrix a = random_spd(seed * 31 + n, n);
                CHECK(a.eigenvalues().size() == n);
                CHECK(std::is_sorted(a.eigenvalues().begin(),
                                     a.eigenvalues().end()));
            }
        }
    }
    SECTION("validation rejects non-symmetric and indefinite input")
    {
        Matrix bad(2);
        bad(0, 0) = 1.0;
        bad(0, 1) = 0.5;
        bad(1, 0) = -0.5;
        bad(1, 1) = 1.0;
        CHECK_THROWS_AS(SpdMatrix{bad}, std::invalid_argument);
        CHECK_THROWS_AS((SpdMatrix{diag({1.0, -2.0})}), std::invalid_argument);
    }
}

TEST_CASE("exterior power traces")
{
    const SpdMatrix a{diag({1, 2, 3})};
    CHECK(exterior_trace(a, 1) == Catch::Approx(6.0).epsilon(1e-13));
    CHECK(exterior_trace(a, 2) == Catch::Approx(11.0).epsilon(1e-13));
    CHECK(exterior_trace(a, 3) == Catch::Approx(6.0).epsilon(1e-13));
    CHECK_THROWS_AS(exterior_trace(a, 0), std::invalid_argument);
    CHECK_THROWS_AS(exterior_trace(a, 4), std::invalid_argument);

    for (std::uint64_t seed = 3; seed < 8; ++seed) {
        const SpdMatrix m = random_spd(seed, 5);
        CHECK(std::fabs(exterior_trace(m, 1) - m.dense().trace()) <=
              1e-10 * std::fabs(m.dense().trace()));
        const double det = det_by_elimination(m.dense());
        CHECK(std::fabs(exterior_trace(m, 5) - det) <= 1e-9 * std::fabs(det));
    }
}

TEST_CASE("matrix dominance order")
{
    const SpdMatrix a{diag({2, 0.5})};
    const SpdMatrix b{diag({4, 0.25})};
    const auto v = matrix_compare(a, b);
    CHECK(v.kind == OrderKind::StrictOrder);
    CHECK(v.direction == OrderDirection::LeftBelowRight);

    CHECK(matrix_compare(a, a).kind == OrderKind::Equal);

    // definitional: identical to compare on the eigenvalue vectors
    const auto direct = compare(a.eigenvalue_vector(), b.eigenvalue_vector());
    CHECK(v.kind == direct.kind);
    CHECK(v.direction == direct.direction);
    CHECK(v.margins == direct.margins);
}

TEST_CASE("log det (I + A)")
{
    CHECK(logdet_I_plus(SpdMatrix{Matrix::identity(2)}) ==
          Catch::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(logdet_I_plus(SpdMatrix{diag({1, 2, 3})}) ==
          Catch::Approx(std::log(24.0)).epsilon(1e-14));

    for (std::uint64_t seed = 21; seed < 26; ++seed) {
        const SpdMatrix m = random_spd(seed, 6);
        Matrix ipa = m.dense() + Matrix::identity(6);
        const double want = std::log(det_by_elimination(ipa));
        CHECK(std::fabs(logdet_I_plus(m) - want) <= 1e-9 * std::fabs(want));
    }
}

TEST_CASE("riemannian distance")
{
    const SpdMatrix a = random_spd(31, 4);
    CHECK(riemannian_distance(a, a) <= 1e-7);

    const double e = std::exp(1.0);
    CHECK(riemannian_distance(SpdMatrix{diag({e, e})},
                              SpdMatrix{Matrix::identity(2)}) ==
          Catch::Approx(std::sqrt(2.0)).epsilon(1e-12));

    for (std::uint64_t seed = 41; seed < 46; ++seed) {
        const SpdMatrix x = random_spd(seed, 4);
        const SpdMatrix y = random_spd(seed + 100, 4);
        CHECK(std::fabs(riemannian_distance(x, y) - riemannian_distance(y, x)) <=
              1e-10);
    }

    // delta_R(A,C)^2 equals the sum of squared log eigenvalues of A C^{-1}
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto tr = matrix_triple(seed, 4, PairConstraint::FullStrict);
        if (!tr) continue;
        const double d = riemannian_distance(tr->a, tr->c);
        double want = 0.0;
        for (double v : tr->x) {
            const double l = std::log(v);
            want += l * l;
        }
        CHECK(std::fabs(d * d - want) <= 1e-9 * std::max(want, 1.0));
    }
}

TEST_CASE("s-divergence")
{
    const SpdMatrix a = random_spd(51, 4);
    CHECK(std::fabs(s_divergence(a, a)) <= 1e-12);

    const SpdMatrix p{diag({4.0})};
    const SpdMatrix q{diag({1.0})};
    CHECK(s_divergence(p, q) ==
          Catch::Approx(std::log(2.5) - 0.5 * std::log(4.0)).epsilon(1e-13));

    for (std::uint64_t seed = 61; seed < 71; ++seed) {
        const SpdMatrix x = random_spd(seed, 5);
        const SpdMatrix y = random_spd(seed + 200, 5);
        CHECK(s_divergence(x, y) >= -1e-12);
        CHECK(std::fabs(s_divergence(x, y) - s_divergence(y, x)) <= 1e-10);
    }
}

TEST_CASE("quantum Renyi entropy")
{
    const std::size_t n = 4;
    const SpdMatrix mixed{Matrix::identity(n).scaled(1.0 / n)};
    for (double a : {0.0, 0.5, 2.0})
        CHECK(quantum_renyi(mixed, RenyiOrder(a)) ==
              Catch::Approx(std::log(double(n))).epsilon(1e-12));

    // diagonal X reduces to the classical entropy of the diagonal
    const SpdMatrix d{diag({0.5, 0.25, 0.25})};
    CHECK(quantum_renyi(d, RenyiOrder(2.0)) ==
          Catch::Approx(renyi_entropy(PositiveVector{{0.5, 0.25, 0.25}},
                                      RenyiOrder(2.0)))
              .epsilon(1e-13));

    // invariance under orthogonal conjugation
    SplitMix64 rng(71);
    const Matrix u = esymdom::detail::random_orthogonal(rng, 3);
    const SpdMatrix rotated{
        esymdom::detail::conjugate_diag(u, {0.5, 0.25, 0.25})};
    for (double a : {0.25, 1.5}) {
        const double h0 = quantum_renyi(d, RenyiOrder(a));
        const double h1 = quantum_renyi(rotated, RenyiOrder(a));
        CHECK(std::fabs(h0 - h1) <= 1e-9 * std::max(1.0, std::fabs(h0)));
    }

    CHECK_THROWS_AS(quantum_renyi(SpdMatrix{Matrix::identity(3)}, RenyiOrder(0.5)),
                    std::invalid_argument);
}

TEST_CASE("orthogonal conjugation invariance of the matrix functionals")
{
    SplitMix64 rng(81);
    const std::vector<double> spectrum{0.4, 1.3, 2.2, 5.1};
    const SpdMatrix base{diag({0.4, 1.3, 2.2, 5.1})};
    const Matrix u = esymdom::detail::random_orthogonal(rng, 4);
    const SpdMatrix rot{esymdom::detail::conjugate_diag(u, spectrum)};

    for (std::size_t k = 1; k <= 4; ++k) {
        const double a = exterior_trace(base, k);
        const double b = exterior_trace(rot, k);
        CHECK(std::fabs(a - b) <= 1e-9 * std::fabs(a));
    }
    CHECK(std::fabs(logdet_I_plus(base) - logdet_I_plus(rot)) <= 1e-9);
}

TEST_CASE("matrix CSV block round trip")
{
    const SpdMatrix a = random_spd(91, 3);
    std::ostringstream os;
    write_matrix_csv(os, a.dense());
    std::istringstream is(os.str());
    const Matrix back = read_matrix_csv(is);
    REQUIRE(back.dim() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(back(i, j) == a.dense()(i, j)); // 17 digits: exact round trip

    std::istringstream bad("0\n");
    CHECK_THROWS_AS(read_matrix_csv(bad), std::invalid_argument);
}
