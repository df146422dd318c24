#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

#include "aqfock/qcalc.hpp"

// Continuous density of nu_{alpha,q} on (-2/sqrt(1-q), 2/sqrt(1-q)), the
// q-Gaussian special case, and Gauss-Legendre quadrature against nu_{alpha,q}
// in the substituted variable x = 2 cos(theta)/sqrt(1-q).

namespace aqfock {

struct SupportInterval {
    double lo;
    double hi;
};

/// (-2/sqrt(1-q), 2/sqrt(1-q)).
SupportInterval support_interval(double q);

struct OutOfSupportError : std::domain_error {
    explicit OutOfSupportError(double x) : std::domain_error("density: x outside the open support"), x(x) {}
    double x;
};

struct NearPoleError : std::runtime_error {
    NearPoleError() : std::runtime_error("density: denominator g-product below 1e-12") {}
};

/// Truncated product g(x,b;q) = prod_{k>=0} (1 - b x sqrt(1-q) q^k + b^2 q^{2k}).
std::complex<double> g_factor(double x, std::complex<double> b, const QParams& params,
                              const TruncationPolicy& trunc = {});

/// Density of nu_{alpha,q} at x strictly inside the support:
///   (q,-alpha;q)_inf / (2 pi) * sqrt((1-q)/(4-(1-q)x^2))
///   * g(x,1) g(x,-1) g(x,sqrt(q)) g(x,-sqrt(q)) / (g(x,i gamma) g(x,-i gamma))
/// with gamma^2 = -alpha. Throws OutOfSupportError / NearPoleError.
double nu_density(double x, const QParams& params, const TruncationPolicy& trunc = {});

/// Standard q-Gaussian density (alpha = 0 case), via
/// sqrt(1-q)/pi * sin(theta) * prod_{n>=1} (1-q^n)|1-q^n e^{2 i theta}|^2,
/// x sqrt(1-q) = 2 cos(theta).
double q_gaussian_density(double x, double q, const TruncationPolicy& trunc = {});

/// int f(x) nu_{alpha,q}(dx) by Gauss-Legendre of the given order in theta;
/// the substitution removes the inverse-square-root endpoint behaviour.
double integrate(const std::function<double(double)>& f, const QParams& params,
                 const TruncationPolicy& trunc = {}, int quad_order = 400);

namespace detail {
/// Gauss-Legendre nodes and weights on [-1,1]; cached per order.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);
}  // namespace detail

}  // namespace aqfock
