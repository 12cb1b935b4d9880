#include "subbergman/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace subbergman::series {

std::vector<cplx> multiply(std::span<const cplx> a, std::span<const cplx> b, std::size_t length) {
    std::vector<cplx> out(length, cplx{0.0, 0.0});
    const std::size_t na = std::min(a.size(), length);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == cplx{0.0, 0.0}) continue;
        const std::size_t nb = std::min(b.size(), length - i);
        for (std::size_t j = 0; j < nb; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<cplx> reciprocal(std::span<const cplx> a, std::size_t length) {
    if (a.empty() || a[0] == cplx{0.0, 0.0}) {
        throw std::domain_error("series reciprocal needs a nonzero constant term");
    }
    std::vector<cplx> out(length, cplx{0.0, 0.0});
    if (length == 0) return out;
    const cplx inv0 = 1.0 / a[0];
    out[0] = inv0;
    for (std::size_t n = 1; n < length; ++n) {
        cplx acc{0.0, 0.0};
        const std::size_t kmax = std::min(n, a.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) acc += a[k] * out[n - k];
        out[n] = -acc * inv0;
    }
    return out;
}

std::vector<cplx> exp(std::span<const cplx> a, std::size_t length) {
    std::vector<cplx> out(length, cplx{0.0, 0.0});
    if (length == 0) return out;
    out[0] = std::exp(a.empty() ? cplx{0.0, 0.0} : a[0]);
    for (std::size_t n = 1; n < length; ++n) {
        cplx acc{0.0, 0.0};
        const std::size_t kmax = std::min(n, a.empty() ? 0 : a.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) acc += static_cast<double>(k) * a[k] * out[n - k];
        out[n] = acc / static_cast<double>(n);
    }
    return out;
}

cplx horner(std::span<const cplx> coeffs, cplx z) {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace subbergman::series
