#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <vector>

#include "subbergman/kernels.hpp"
#include "subbergman/sampling.hpp"
#include "subbergman/symbols.hpp"

using namespace subbergman;

namespace {

std::vector<DiskPoint> points(std::uint64_t seed, std::size_t n, double radius) {
    DiskSampler s(seed, 0);
    return s.uniform_disk(n, radius);
}

// Below alpha = -1 a Blaschke product need not be a contractive multiplier,
// so the monomial CNP example stands in as the symbol there.
std::vector<KernelSpec> all_kinds(double alpha) {
    const auto phi = alpha > -1.0 ? to_series(BlaschkeSpec({0.5, cplx{0.0, -0.3}}))
                                  : to_series(MonomialSpec::cnp_example(2, alpha));
    std::vector<KernelSpec> out{KernelSpec(KernelKind::bergman, WeightParameter(alpha)),
                                KernelSpec(KernelKind::sub, WeightParameter(alpha), phi)};
    if (alpha > -1.0) out.emplace_back(KernelKind::conj_sub, WeightParameter(alpha), phi);
    return out;
}

}  // namespace

TEST_CASE("kernel spec validation") {
    CHECK_THROWS_AS(KernelSpec(KernelKind::sub, WeightParameter(0.0)), std::invalid_argument);
    CHECK_THROWS_AS(KernelSpec(KernelKind::conj_sub, WeightParameter(-1.0), to_series(MobiusSpec(0.5))),
                    std::domain_error);
    CHECK(parse_kernel_kind("conj_sub") == KernelKind::conj_sub);
    CHECK(to_string(KernelKind::sub) == "sub");
    CHECK_THROWS(parse_kernel_kind("szego"));
}

TEST_CASE("bergman kernel values") {
    for (double alpha : {-1.5, -1.0, 0.0, 2.0}) {
        CHECK(bergman_kernel(WeightParameter(alpha), 0.0, cplx{0.3, 0.4}) == cplx{1.0, 0.0});
    }
    const cplx k = eval_kernel(KernelSpec(KernelKind::bergman, WeightParameter(0.0)), DiskPoint(0.5, 0.0),
                               DiskPoint(0.5, 0.0));
    CHECK(std::abs(k - 1.0 / (0.75 * 0.75)) < 1e-12);
}

TEST_CASE("sub kernel with phi(0) = 0 is one at w = 0") {
    const KernelSpec spec(KernelKind::sub, WeightParameter(-0.5), to_series(BlaschkeSpec({0.0, 0.4})));
    for (const auto& z : points(1, 10, 0.95)) CHECK(std::abs(eval_kernel(spec, z, DiskPoint(0.0, 0.0)) - 1.0) < 1e-14);
}

TEST_CASE("normalized kernel") {
    const NormalizedKernelPoint origin{DiskPoint(0.0, 0.0), WeightParameter(0.0)};
    CHECK(std::abs(eval_normalized(origin, DiskPoint(0.3, -0.2)) - 1.0) < 1e-15);
    const NormalizedKernelPoint p{DiskPoint(0.6, 0.0), WeightParameter(0.0)};
    CHECK(std::abs(eval_normalized(p, DiskPoint(0.6, 0.0)) - 1.5625) < 1e-12);
}

TEST_CASE("hermitian symmetry and real diagonal") {
    const auto pts = points(2, 8, 0.9);
    for (double alpha : {-0.5, 0.0, 1.0}) {
        for (const auto& spec : all_kinds(alpha)) {
            KernelEvaluator k(spec);
            for (const auto& z : pts) {
                for (const auto& w : pts) CHECK(std::abs(k(z, w) - std::conj(k(w, z))) < 1e-12);
                const cplx d = k(z, z);
                CHECK(std::abs(d.imag()) < 1e-12);
                if (spec.kind == KernelKind::sub) CHECK(d.real() >= 0.0);
            }
        }
    }
}

TEST_CASE("gram matrices are positive semidefinite") {
    for (double alpha : {-1.5, -0.5, 0.0, 1.0}) {
        for (const auto& spec : all_kinds(alpha)) {
            KernelEvaluator k(spec);
            const auto pts = points(3, 20, 0.9);
            const Eigen::MatrixXcd g = k.gram(pts);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
            CHECK(es.eigenvalues()(0) >= -1e-9 * g.trace().real());
        }
    }
}

TEST_CASE("conj_sub coefficient sum against quadrature") {
    for (const auto& phi : {to_series(BlaschkeSpec({0.5})), to_series(BlaschkeSpec({0.5, -0.5}))}) {
        for (double alpha : {-0.5, 0.0, 1.0}) {
            KernelEvaluator k(KernelSpec(KernelKind::conj_sub, WeightParameter(alpha), phi));
            const auto zs = points(10, 5, 0.7);
            const auto ws = points(11, 5, 0.7);
            for (std::size_t i = 0; i < zs.size(); ++i) {
                const cplx coeff = k(zs[i], ws[i]);
                const cplx quad = conj_sub_quadrature(phi, WeightParameter(alpha), zs[i], ws[i]);
                CHECK(std::abs(coeff - quad) < 1e-6);
            }
        }
    }
}

TEST_CASE("conj_sub for the identity symbol") {
    // E = I - T*T is diagonal with entries 1 - w_k / w_{k+1} = (1+alpha)/(k+2+alpha),
    // so at alpha = 0 the kernel is sum_k (k+1)/(k+2) (z conj w)^k.
    KernelEvaluator k(KernelSpec(KernelKind::conj_sub, WeightParameter(0.0), to_series(PolynomialSpec({0.0, 1.0}), 2)));
    const cplx x = cplx{0.3, 0.1} * std::conj(cplx{0.5, -0.2});
    // sum (k+1)/(k+2) x^k = 1/(1-x) - sum x^k/(k+2) = 1/(1-x) + (x + log(1-x))/x^2
    const cplx expected = 1.0 / (1.0 - x) + (x + std::log(1.0 - x)) / (x * x);
    CHECK(std::abs(k(DiskPoint(0.3, 0.1), DiskPoint(0.5, -0.2)) - expected) < 1e-9);
}

TEST_CASE("rescaling identity") {
    const auto pts = points(5, 10, 0.9);
    CHECK(rescaling_check(to_series(PolynomialSpec({0.0, 1.0}), 2), WeightParameter(0.0), pts) < 1e-12);
    CHECK(rescaling_check(to_series(MobiusSpec(0.5)), WeightParameter(0.0), pts) < 1e-9);
    CHECK(rescaling_check(to_series(BlaschkeSpec({0.3, -0.4})), WeightParameter(-0.5), pts) < 1e-8);
    CHECK_THROWS(rescaling_check(to_series(MobiusSpec(0.5)), WeightParameter(0.0), std::vector<DiskPoint>{pts[0]}));
    CHECK_THROWS(rescaling_check(to_series(PolynomialSpec({0.5}), 1), WeightParameter(0.0), pts));
}

TEST_CASE("mobius factorization") {
    const auto pts = points(6, 10, 0.9);
    CHECK(mobius_factorization_check(0.0, 1.0, WeightParameter(0.0), pts) < 1e-14);
    CHECK(mobius_factorization_check(0.5, 1.0, WeightParameter(0.0), pts) < 1e-10);
    CHECK(mobius_factorization_check(cplx{0.0, 0.3}, 1.0, WeightParameter(-0.5), pts) < 1e-10);
    CHECK_THROWS(mobius_factorization_check(0.5, 1.0, WeightParameter(0.5), pts));
}
