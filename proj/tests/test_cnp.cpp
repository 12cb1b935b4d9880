#include <doctest.h>

#include <cmath>
#include <random>

#include "subbergman/cnp.hpp"
#include "subbergman/jacobi.hpp"
#include "subbergman/sampling.hpp"
#include "subbergman/symbols.hpp"

using namespace subbergman;

namespace {

PowerSeriesSymbol identity() { return to_series(PolynomialSpec({0.0, 1.0}), 2); }

std::vector<DiskPoint> sample(std::uint64_t seed, std::size_t n, double alpha = 0.0) {
    DiskSampler s(seed, 0);
    return s.boundary_enriched(n, alpha);
}

double jacobi_min(const Eigen::MatrixXcd& m) { return jacobi_hermitian(m).eigenvalues(0); }

}  // namespace

TEST_CASE("pick matrix of the identity at alpha = 0 is rank one") {
    const auto pts = sample(1, 12);
    const auto p = build_pick(identity(), WeightParameter(0.0), pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const cplx expected = pts[i].value() * std::conj(pts[j].value());
            CHECK(std::abs(p.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - expected) < 1e-12);
        }
    }
    const auto r = psd_test(p);
    CHECK(r.verdict == PickVerdict::psd_pass);
    CHECK(r.min_eigenvalue >= -1e-12);
    CHECK_FALSE(r.certificate());
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("zero row at the base point") {
    auto pts = sample(2, 10);
    pts.insert(pts.begin() + 4, DiskPoint(0.0, 0.0));
    for (const auto& phi : {to_series(BlaschkeSpec({0.5, -0.5})), to_series(MobiusSpec(0.3)), identity()}) {
        const auto p = build_pick(phi, WeightParameter(-0.5), pts);
        CHECK(p.entries.row(4).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(p.entries.col(4).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("build_pick input checks") {
    const auto pts = sample(3, 5);
    CHECK_THROWS_AS(build_pick(to_series(PolynomialSpec({0.5}), 1), WeightParameter(0.0), pts), std::invalid_argument);
    auto dup = pts;
    dup.push_back(pts[1]);
    CHECK_THROWS_AS(build_pick(identity(), WeightParameter(0.0), dup), std::invalid_argument);
    CHECK_THROWS(build_pick(to_series(PolynomialSpec({1.0, 0.0}), 2), WeightParameter(0.0), pts));
}

TEST_CASE("explicit indefinite matrix") {
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    const auto r = psd_test(m);
    CHECK(r.verdict == PickVerdict::fail);
    CHECK(r.min_eigenvalue == doctest::Approx(-1.0));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->indices == std::vector<std::size_t>{0, 1});
    CHECK(r.witness->min_eigenvalue == doctest::Approx(-1.0));
}

TEST_CASE("non-Mobius symbols fail with a re-verifiable witness") {
    const auto pts = sample(7, 30);
    const auto p = build_pick(to_series(PolynomialSpec({0.0, 0.0, 1.0}), 3), WeightParameter(0.0), pts);
    const auto r = psd_test(p);
    CHECK(r.verdict == PickVerdict::fail);
    CHECK(r.min_eigenvalue < -1e-6);
    REQUIRE(r.witness.has_value());
    const auto& w = *r.witness;
    CHECK(w.points.size() == w.indices.size());
    CHECK(w.points.size() >= 2);
    CHECK(jacobi_min(w.matrix) < -1e-6);
    CHECK(std::abs(jacobi_min(w.matrix) - w.min_eigenvalue) < 1e-9);
    // Rebuilding the witness from its points gives the same matrix.
    const auto again = build_pick(to_series(PolynomialSpec({0.0, 0.0, 1.0}), 3), WeightParameter(0.0), w.points);
    CHECK((again.entries - w.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("identity at alpha = 1 is not CNP") {
    const auto r = cnp_scan(identity(), WeightParameter(1.0), 30, 20, 7);
    CHECK(r.certificate());
    CHECK(r.min_eigenvalue < -1e-6);
}

TEST_CASE("cnp_scan on Mobius and monomial symbols") {
    for (cplx a : {cplx{0.0, 0.0}, cplx{0.4, 0.0}, cplx{0.0, 0.3}}) {
        for (double alpha : {-0.5, 0.0}) {
            const auto r = cnp_scan(to_series(MobiusSpec(a)), WeightParameter(alpha), 30, 20, 7);
            CHECK(r.verdict == PickVerdict::psd_pass);
            CHECK(r.failing_trials == 0);
            CHECK(r.trials == 20);
            CHECK(r.min_eigenvalue >= -1e-9 * std::max(1.0, r.trace));
        }
    }
    const auto mono = cnp_scan(to_series(MonomialSpec::cnp_example(2, -1.5)), WeightParameter(-1.5), 30, 20, 7);
    CHECK(mono.failing_trials == 0);

    const auto b = cnp_scan(to_series(BlaschkeSpec({0.5, -0.5})), WeightParameter(0.0), 30, 20, 7);
    CHECK(b.failing_trials >= 1);
}

TEST_CASE("principal submatrices of a passing matrix pass") {
    const auto pts = sample(9, 30, -0.5);
    const auto p = build_pick(to_series(MobiusSpec(0.4)), WeightParameter(-0.5), pts);
    REQUIRE(psd_test(p).verdict == PickVerdict::psd_pass);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<DiskPoint> subset;
        for (const auto& z : pts)
            if (rng() % 2) subset.push_back(z);
        if (subset.size() < 2) continue;
        CHECK(psd_test(build_pick(to_series(MobiusSpec(0.4)), WeightParameter(-0.5), subset)).verdict ==
              PickVerdict::psd_pass);
    }
}

TEST_CASE("normalization does not change verdicts") {
    for (const auto& phi : {to_series(BlaschkeSpec({0.5, cplx{0.1, 0.2}})), to_series(MobiusSpec(0.6))}) {
        const auto psi = normalize(phi).psi;
        const auto a = cnp_trial_minima(phi, WeightParameter(-0.5), 20, 10, 13);
        const auto b = cnp_trial_minima(psi, WeightParameter(-0.5), 20, 10, 13);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK((a[k] < -1e-9) == (b[k] < -1e-9));
            CHECK(std::abs(a[k] - b[k]) < 1e-8 * std::max(1.0, std::abs(a[k])));
        }
    }
}

TEST_CASE("scans are deterministic") {
    const auto phi = to_series(BlaschkeSpec({0.5, -0.5}));
    const auto a = cnp_scan(phi, WeightParameter(-0.5), 30, 5, 42);
    const auto b = cnp_scan(phi, WeightParameter(-0.5), 30, 5, 42);
    CHECK(a.min_eigenvalue == b.min_eigenvalue);
    CHECK(a.worst_trial == b.worst_trial);
    CHECK(a.failing_trials == b.failing_trials);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->indices == b.witness->indices);
    CHECK(cnp_trial_minima(phi, WeightParameter(-0.5), 30, 5, 42) ==
          cnp_trial_minima(phi, WeightParameter(-0.5), 30, 5, 42));
    CHECK_THROWS(cnp_scan(phi, WeightParameter(-0.5), 2, 5, 42));
    CHECK_THROWS(cnp_scan(phi, WeightParameter(-0.5), 30, 0, 42));
}
