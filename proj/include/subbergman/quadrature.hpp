#ifndef SUBBERGMAN_QUADRATURE_HPP
#define SUBBERGMAN_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace subbergman {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]; nodes ascending.
QuadratureRule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0);

}  // namespace subbergman

#endif
