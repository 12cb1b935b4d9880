#ifndef SUBBERGMAN_SERIES_HPP
#define SUBBERGMAN_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "subbergman/scalars.hpp"

// Truncated power-series arithmetic over complex coefficients. Every result is
// exact modulo z^length (up to rounding).
namespace subbergman::series {

std::vector<cplx> multiply(std::span<const cplx> a, std::span<const cplx> b, std::size_t length);

/// 1/a; requires a[0] != 0.
std::vector<cplx> reciprocal(std::span<const cplx> a, std::size_t length);

/// exp(a) by the recurrence n f_n = sum_{k=1..n} k a_k f_{n-k}, f_0 = exp(a_0).
std::vector<cplx> exp(std::span<const cplx> a, std::size_t length);

cplx horner(std::span<const cplx> coeffs, cplx z);

}  // namespace subbergman::series

#endif
