#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "subbergman/jacobi.hpp"
#include "subbergman/quadrature.hpp"
#include "subbergman/sampling.hpp"
#include "subbergman/series.hpp"

using namespace subbergman;

namespace {

Eigen::MatrixXcd random_hermitian(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cplx{g(rng), g(rng)};
    return 0.5 * (a + a.adjoint());
}

}  // namespace

TEST_CASE("series product and reciprocal") {
    const std::vector<cplx> a{1.0, 2.0, 3.0};
    const std::vector<cplx> b{1.0, -1.0};
    const auto p = series::multiply(a, b, 5);
    const cplx expect[] = {1.0, 1.0, 1.0, -3.0, 0.0};
    for (int k = 0; k < 5; ++k) CHECK(std::abs(p[k] - expect[k]) < 1e-15);

    // 1/(1 - z) = sum z^k
    const auto r = series::reciprocal(std::vector<cplx>{1.0, -1.0}, 10);
    for (const auto& c : r) CHECK(std::abs(c - 1.0) < 1e-15);
    CHECK_THROWS(series::reciprocal(std::vector<cplx>{0.0, 1.0}, 4));
}

TEST_CASE("series exponential matches exp(z) coefficients") {
    const auto e = series::exp(std::vector<cplx>{0.0, 1.0}, 20);
    double fact = 1.0;
    for (int k = 0; k < 20; ++k) {
        if (k > 0) fact *= k;
        CHECK(std::abs(e[k] - 1.0 / fact) < 1e-15);
    }
    const auto shifted = series::exp(std::vector<cplx>{cplx{0.0, 1.0}}, 3);
    CHECK(std::abs(shifted[0] - std::exp(cplx{0.0, 1.0})) < 1e-15);
    CHECK(std::abs(shifted[1]) == 0.0);
}

TEST_CASE("horner evaluation") {
    const std::vector<cplx> c{1.0, cplx{0.0, 2.0}, -1.0};
    const cplx z{0.3, -0.2};
    CHECK(std::abs(series::horner(c, z) - (1.0 + cplx{0.0, 2.0} * z - z * z)) < 1e-15);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto rule = gauss_legendre(10);
    double s = 0.0;
    for (std::size_t i = 0; i < 10; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 18);
    CHECK(s == doctest::Approx(2.0 / 19.0).epsilon(1e-13));
    for (std::size_t i = 1; i < 10; ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);

    const auto unit = gauss_legendre(32, 0.0, 1.0);
    double t = 0.0;
    for (std::size_t i = 0; i < 32; ++i) t += unit.weights[i] * std::sqrt(unit.nodes[i]);
    // The integrand is not smooth at 0, so convergence is only algebraic.
    CHECK(t == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
}

TEST_CASE("jacobi agrees with the library eigensolver") {
    for (int n : {1, 2, 5, 17}) {
        const auto h = random_hermitian(n, static_cast<unsigned>(n));
        const auto jr = jacobi_hermitian(h);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        REQUIRE(jr.eigenvalues.size() == n);
        for (int k = 0; k < n; ++k) CHECK(jr.eigenvalues(k) == doctest::Approx(es.eigenvalues()(k)).epsilon(1e-11));
        for (int k = 0; k < n; ++k) {
            const Eigen::VectorXcd v = jr.eigenvectors.col(k);
            CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK((h * v - jr.eigenvalues(k) * v).norm() < 1e-10);
        }
    }
}

TEST_CASE("jacobi on a known spectrum") {
    Eigen::MatrixXcd h(2, 2);
    h << 0.0, 1.0, 1.0, 0.0;
    const auto jr = jacobi_hermitian(h);
    CHECK(jr.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(jr.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("sampler determinism and independence of streams") {
    DiskSampler a(7, 3), b(7, 3), c(7, 4);
    const auto pa = a.boundary_enriched(30, 0.0);
    const auto pb = b.boundary_enriched(30, 0.0);
    const auto pc = c.boundary_enriched(30, 0.0);
    REQUIRE(pa.size() == 30);
    for (std::size_t i = 0; i < 30; ++i) CHECK(pa[i] == pb[i]);
    CHECK_FALSE(pa[0] == pc[0]);
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(pa[i].value() - pa[j].value()) >= 1e-3);

    DiskSampler u(1, 0);
    for (const auto& p : u.uniform_disk(200, 0.8)) CHECK(p.abs() <= 0.8);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("boundary enrichment pushes points outward") {
    DiskSampler s0(5, 0), s1(5, 0);
    double mean0 = 0.0, mean1 = 0.0;
    for (const auto& p : s0.boundary_enriched(400, 0.0)) mean0 += p.abs();
    for (const auto& p : s1.boundary_enriched(400, 2.0)) mean1 += p.abs();
    CHECK(mean1 > mean0);
}
