#include <doctest.h>

#include <cmath>
#include <random>

#include "subbergman/operators.hpp"
#include "subbergman/sampling.hpp"
#include "subbergman/symbols.hpp"

using namespace subbergman;

namespace {

PowerSeriesSymbol identity() { return to_series(PolynomialSpec({0.0, 1.0}), 2); }

}  // namespace

TEST_CASE("toeplitz matrix entries") {
    const auto t = toeplitz_matrix(identity(), WeightParameter(0.0), 6);
    CHECK(t.kind == OperatorKind::toeplitz);
    for (int k = 0; k < 5; ++k) CHECK(std::abs(t.entries(k + 1, k) - std::sqrt((k + 1.0) / (k + 2.0))) < 1e-15);
    CHECK(std::abs(t.entries(1, 0) - 0.70710678118654752) < 1e-15);
    CHECK(t.entries(0, 1) == cplx{0.0, 0.0});

    const auto one = toeplitz_matrix(to_series(PolynomialSpec({1.0}), 1), WeightParameter(0.3), 5);
    CHECK((one.entries - Eigen::MatrixXcd::Identity(5, 5)).norm() == 0.0);

    const auto hardy = toeplitz_matrix(identity(), WeightParameter(-1.0), 6);
    for (int k = 0; k < 5; ++k) CHECK(hardy.entries(k + 1, k) == cplx{1.0, 0.0});

    CHECK_THROWS(toeplitz_matrix(identity(), WeightParameter(0.0), 0));
}

TEST_CASE("defect matrices of the shift") {
    const auto conj = defect_matrix(identity(), WeightParameter(0.0), 50, DefectSide::conj);
    for (int k = 0; k < 50; ++k) {
        CHECK(std::abs(conj.entries(k, k) - 1.0 / (k + 2.0)) < 1e-15);
        for (int j = 0; j < 50; ++j)
            if (j != k) CHECK(conj.entries(j, k) == cplx{0.0, 0.0});
    }
    const auto hardy_conj = defect_matrix(identity(), WeightParameter(-1.0), 50, DefectSide::conj);
    CHECK(hardy_conj.entries.cwiseAbs().maxCoeff() == 0.0);
    const auto hardy_phi = defect_matrix(identity(), WeightParameter(-1.0), 50, DefectSide::phi);
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(50, 50);
    expect(0, 0) = 1.0;
    CHECK((hardy_phi.entries - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("padding beyond the series length does not change the block") {
    const auto phi = to_series(BlaschkeSpec({0.5, cplx{-0.2, 0.4}}));
    for (auto side : {DefectSide::phi, DefectSide::conj}) {
        const auto base = defect_matrix(phi, WeightParameter(0.0), 60, side, phi.length());
        const auto more = defect_matrix(phi, WeightParameter(0.0), 60, side, phi.length() + 137);
        CHECK((base.entries - more.entries).cwiseAbs().maxCoeff() < 1e-14);
        const auto dflt = defect_matrix(phi, WeightParameter(0.0), 60, side);
        CHECK((base.entries - dflt.entries).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("intertwining of the two defects") {
    const auto phi = to_series(BlaschkeSpec({0.5, -0.3}));
    const std::size_t n = 300;
    const std::size_t l = phi.length();
    const WeightParameter alpha(0.5);
    const auto t = toeplitz_matrix(phi, alpha, n).entries;
    const auto ep = defect_matrix(phi, alpha, n, DefectSide::phi).entries;
    const auto ec = defect_matrix(phi, alpha, n, DefectSide::conj).entries;
    std::mt19937_64 rng(12);
    std::normal_distribution<double> g;
    // v lives in the first n - 2L coordinates so that T v and E_conj v stay inside the section.
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
        for (std::size_t k = 0; k + 2 * l < n; ++k) v(static_cast<Eigen::Index>(k)) = cplx{g(rng), g(rng)};
        v /= v.norm();
        const Eigen::VectorXcd lhs = ep * (t * v);
        const Eigen::VectorXcd rhs = t * (ec * v);
        CHECK((lhs - rhs).norm() < 1e-9);
    }
}

TEST_CASE("berezin transform") {
    const auto e = defect_matrix(identity(), WeightParameter(0.0), 200, DefectSide::phi);
    CHECK(berezin(e, DiskPoint(0.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(berezin(e, DiskPoint(0.6, 0.0)) - 0.64) < 1e-8);

    const auto s = to_series(SingularInnerSpec(1.0), 600);
    const auto es = defect_matrix(s, WeightParameter(0.0), 600, DefectSide::phi);
    CHECK(std::abs(berezin(es, DiskPoint(0.9, 0.0)) - 1.0) < 1e-6);

    CHECK_THROWS(berezin(toeplitz_matrix(identity(), WeightParameter(0.0), 10), DiskPoint(0.1, 0.0)));
}

TEST_CASE("berezin identity over admissible symbols") {
    DiskSampler sampler(21, 0);
    const auto pts = sampler.uniform_disk(20, 0.8);
    const std::vector<SymbolSpec> specs{PolynomialSpec({0.0, 1.0}), MobiusSpec(0.5), BlaschkeSpec({0.5, -0.5}),
                                        PolynomialSpec({0.2, 0.3, cplx{0.0, 0.3}})};
    for (const auto& spec : specs) {
        for (double alpha : {-0.5, 0.0, 1.0}) {
            const auto e = defect_matrix(to_series(spec), WeightParameter(alpha), 400, DefectSide::phi);
            for (const auto& a : pts) {
                const double expected = 1.0 - std::norm(eval_closed_form(spec, a.value()));
                CHECK(std::abs(berezin(e, a) - expected) < 1e-6);
            }
        }
    }
}

TEST_CASE("spectrum of the shift defect") {
    const auto e = defect_matrix(identity(), WeightParameter(0.0), 400, DefectSide::conj);
    const auto r = spectrum(e, FitWindow{10, 200});
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
        CHECK(std::abs(r.eigenvalues[k] - 1.0 / (static_cast<double>(k) + 2.0)) < 1e-12);
    }
    CHECK(r.decay_exponent == doctest::Approx(-1.0).epsilon(0.02));
    REQUIRE(r.schatten.size() == 4);
    CHECK(r.schatten[0].p == 1.0);
    CHECK(r.schatten[3].tail_converged);
}

TEST_CASE("spectrum edge cases") {
    const auto zero = defect_matrix(to_series(PolynomialSpec({0.0}), 1), WeightParameter(0.0), 40, DefectSide::phi);
    const auto r = spectrum(zero, FitWindow{1, 20});
    for (double v : r.eigenvalues) CHECK(v == doctest::Approx(1.0));
    CHECK(std::abs(r.decay_exponent) < 1e-10);

    CHECK_THROWS(spectrum(zero, FitWindow{0, 10}));
    CHECK_THROWS(spectrum(zero, FitWindow{5, 31}));
    auto skew = zero;
    skew.entries(0, 1) = 1e-6;
    CHECK_THROWS(spectrum(skew, FitWindow{1, 10}));

    CHECK(parse_window("20:200").first == 20);
    CHECK(parse_window("20:200").last == 200);
    CHECK_THROWS(parse_window("20"));
    CHECK_THROWS(parse_window("30:20"));
}

TEST_CASE("blaschke defect decays like 1/n") {
    const auto e = defect_matrix(to_series(BlaschkeSpec({0.5, -0.5})), WeightParameter(0.0), 400, DefectSide::phi);
    const auto r = spectrum(e, FitWindow{20, 200});
    CHECK(r.decay_exponent >= -1.15);
    CHECK(r.decay_exponent <= -0.85);
}

TEST_CASE("top eigenvalues are stable under doubling the section") {
    const auto phi = to_series(BlaschkeSpec({0.4, cplx{0.0, 0.3}}));
    const auto a = hermitian_eigenvalues(defect_matrix(phi, WeightParameter(0.0), 120, DefectSide::phi).entries);
    const auto b = hermitian_eigenvalues(defect_matrix(phi, WeightParameter(0.0), 240, DefectSide::phi).entries);
    for (std::size_t k = 0; k < 30; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-6);
}

TEST_CASE("defect root squares back") {
    const auto e = defect_matrix(to_series(MobiusSpec(0.3)), WeightParameter(0.0), 60, DefectSide::phi);
    const auto d = defect_root(e);
    CHECK((d * d - e.entries).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("inclusion eigenvalues") {
    const auto small = inclusion_eigenvalues(WeightParameter(0.0), -1.0, 3);
    REQUIRE(small.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(small[k] == 1.0 / (static_cast<double>(k) + 1.0));

    const auto big = inclusion_eigenvalues(WeightParameter(0.0), -1.0, 256);
    for (std::size_t k = 0; k < big.size(); ++k) CHECK(big[k] == 1.0 / (static_cast<double>(k) + 1.0));

    const auto gap2 = inclusion_eigenvalues(WeightParameter(0.5), -1.5, 64);
    for (std::size_t k = 16; k < gap2.size(); ++k) {
        const double scaled = gap2[k] * std::pow(static_cast<double>(k) + 1.0, 2.0);
        CHECK(scaled >= 0.25);
        CHECK(scaled <= 4.0);
    }
    CHECK(inclusion_eigenvalues(WeightParameter(0.5), 0.0, 0) == std::vector<double>{1.0});
    CHECK_THROWS(inclusion_eigenvalues(WeightParameter(0.0), 0.0, 4));
    CHECK_THROWS(inclusion_eigenvalues(WeightParameter(0.0), 0.5, 4));
}
