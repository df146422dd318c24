#include "aqfock/density.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace aqfock {

using std::numbers::pi;

SupportInterval support_interval(double q) {
    const double s = 2.0 / std::sqrt(1.0 - q);
    return {-s, s};
}

std::complex<double> g_factor(double x, std::complex<double> b, const QParams& params,
                              const TruncationPolicy& trunc) {
    const double q = params.q;
    const int n_terms = trunc.terms(q);
    const double xs = x * std::sqrt(1.0 - q);
    std::complex<long double> prod = 1.0L;
    const std::complex<long double> bl(b.real(), b.imag());
    long double qk = 1.0L, q2k = 1.0L;
    const long double lq = q;
    for (int k = 0; k < n_terms; ++k) {
        prod *= (1.0L - bl * static_cast<long double>(xs) * qk + bl * bl * q2k);
        qk *= lq;
        q2k *= lq * lq;
    }
    return {static_cast<double>(prod.real()), static_cast<double>(prod.imag())};
}

namespace {

// Numerator/denominator g-products evaluated together; shared by the density
// and the quadrature weight.
std::complex<double> g_ratio(double x, const QParams& params, const TruncationPolicy& trunc) {
    const std::complex<double> sq = std::sqrt(std::complex<double>(params.q, 0.0));
    // b = +-i gamma with gamma^2 = -alpha, i.e. b^2 = alpha in both cases.
    const std::complex<double> ig = std::complex<double>(0.0, 1.0) * std::sqrt(std::complex<double>(-params.alpha, 0.0));
    const std::complex<double> num = g_factor(x, {1.0, 0.0}, params, trunc) * g_factor(x, {-1.0, 0.0}, params, trunc) *
                                     g_factor(x, sq, params, trunc) * g_factor(x, -sq, params, trunc);
    const std::complex<double> den = g_factor(x, ig, params, trunc) * g_factor(x, -ig, params, trunc);
    if (std::abs(den) < 1e-12) throw NearPoleError();
    return num / den;
}

double density_prefactor(const QParams& params, const TruncationPolicy& trunc) {
    return q_pochhammer_inf(params.q, params.q, trunc) * q_pochhammer_inf(-params.alpha, params.q, trunc) /
           (2.0 * pi);
}

double real_checked(std::complex<double> v) {
    if (std::abs(v.imag()) > 1e-10 * std::max(std::abs(v.real()), 1e-30))
        throw std::runtime_error("density: g-product has non-negligible imaginary part");
    return v.real();
}

}  // namespace

double nu_density(double x, const QParams& params, const TruncationPolicy& trunc) {
    const SupportInterval s = support_interval(params.q);
    if (!(x > s.lo && x < s.hi)) throw OutOfSupportError(x);
    const double root = std::sqrt((1.0 - params.q) / (4.0 - (1.0 - params.q) * x * x));
    return density_prefactor(params, trunc) * root * real_checked(g_ratio(x, params, trunc));
}

double q_gaussian_density(double x, double q, const TruncationPolicy& trunc) {
    const SupportInterval s = support_interval(q);
    if (!(x > s.lo && x < s.hi)) throw OutOfSupportError(x);
    const double theta = std::acos(0.5 * x * std::sqrt(1.0 - q));
    const std::complex<long double> e2it(std::cos(2.0 * theta), std::sin(2.0 * theta));
    long double prod = 1.0L, qn = q;
    const int n_terms = trunc.terms(q);
    for (int n = 1; n <= n_terms; ++n) {
        prod *= (1.0L - qn) * std::norm(1.0L - qn * e2it);
        qn *= q;
    }
    return std::sqrt(1.0 - q) / pi * std::sin(theta) * static_cast<double>(prod);
}

namespace detail {

const GaussLegendre& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    GaussLegendre gl;
    gl.nodes.resize(static_cast<std::size_t>(order));
    gl.weights.resize(static_cast<std::size_t>(order));
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_order from the Chebyshev-like initial guess.
        long double z = std::cos(pi * (i + 0.75L) / (order + 0.5L));
        long double pp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L, p1 = 0.0L;
            for (int j = 0; j < order; ++j) {
                const long double p2 = p1;
                p1 = p0;
                p0 = ((2.0L * j + 1.0L) * z * p1 - j * p2) / (j + 1);
            }
            pp = order * (z * p0 - p1) / (z * z - 1.0L);
            const long double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-17L) break;
        }
        gl.nodes[static_cast<std::size_t>(i)] = static_cast<double>(-z);
        gl.nodes[static_cast<std::size_t>(order - 1 - i)] = static_cast<double>(z);
        const double w = static_cast<double>(2.0L / ((1.0L - z * z) * pp * pp));
        gl.weights[static_cast<std::size_t>(i)] = w;
        gl.weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
    return cache.emplace(order, std::move(gl)).first->second;
}

}  // namespace detail

double integrate(const std::function<double(double)>& f, const QParams& params, const TruncationPolicy& trunc,
                 int quad_order) {
    // x = 2 cos(theta)/sqrt(1-q): density * |dx/dtheta| = prefactor * g-ratio,
    // smooth up to the endpoints.
    const auto& gl = detail::gauss_legendre(quad_order);
    const double pref = density_prefactor(params, trunc);
    const double scale = 2.0 / std::sqrt(1.0 - params.q);
    long double total = 0.0L;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double theta = 0.5 * pi * (gl.nodes[i] + 1.0);
        const double x = scale * std::cos(theta);
        const double w = real_checked(g_ratio(x, params, trunc));
        total += static_cast<long double>(gl.weights[i]) * (0.5 * pi) * pref * w * f(x);
    }
    return static_cast<double>(total);
}

}  // namespace aqfock
