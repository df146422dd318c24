#include "aqfock/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace aqfock {

JacobiSequence::JacobiSequence(std::vector<double> omega_, std::vector<double> alpha_)
    : omega(std::move(omega_)), alpha_seq(std::move(alpha_)) {
    for (double w : omega)
        if (!(w > 0.0)) throw std::domain_error("JacobiSequence: omega_n must be positive");
    if (alpha_seq.size() != omega.size())
        throw std::invalid_argument("JacobiSequence: omega and alpha_seq length mismatch");
}

JacobiSequence mp_jacobi(const QParams& params, int n_max) {
    if (n_max < 1) throw std::invalid_argument("mp_jacobi: n_max must be >= 1");
    std::vector<double> omega(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double qn1 = std::pow(params.q, n - 1);
        omega[n - 1] = (1.0 + params.alpha * qn1) * q_number(n, params.q);
    }
    return JacobiSequence(std::move(omega), std::vector<double>(static_cast<std::size_t>(n_max), 0.0));
}

double MonicPolynomial::operator()(double x) const {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

MonicPolynomial polynomial(const JacobiSequence& J, int n) {
    if (n < 0) throw std::out_of_range("polynomial: negative degree");
    if (n > J.levels()) throw std::out_of_range("polynomial: degree exceeds Jacobi data");
    std::vector<double> prev{1.0};  // P_0
    if (n == 0) return {std::move(prev)};
    std::vector<double> cur{-J.alpha_seq[0], 1.0};  // P_1 = x - alpha_0
    for (int m = 1; m < n; ++m) {
        // P_{m+1} = (x - alpha_m) P_m - omega_m P_{m-1}
        std::vector<double> next(static_cast<std::size_t>(m) + 2, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] -= J.alpha_seq[static_cast<std::size_t>(m)] * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i] -= J.omega[static_cast<std::size_t>(m) - 1] * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {std::move(cur)};
}

double norm_squared(const JacobiSequence& J, int n) {
    if (n < 0 || n > J.levels()) throw std::out_of_range("norm_squared: n out of range");
    double prod = 1.0;  // omega_0
    for (int k = 1; k <= n; ++k) prod *= J.omega[static_cast<std::size_t>(k) - 1];
    return prod;
}

std::vector<double> moments_from_jacobi(const JacobiSequence& J, int k_max) {
    if (k_max < 0) throw std::invalid_argument("moments_from_jacobi: negative k_max");
    const int dim = (k_max + 1) / 2 + 1;
    if (J.levels() < dim - 1)
        throw std::invalid_argument("moments_from_jacobi: Jacobi data too short");
    std::vector<double> off(static_cast<std::size_t>(dim - 1));
    for (int i = 0; i + 1 < dim; ++i) off[static_cast<std::size_t>(i)] = std::sqrt(J.omega[static_cast<std::size_t>(i)]);
    // Walks of length <= k_max never sit on the top diagonal entry, so
    // padding it with 0 when J provides exactly dim-1 levels is exact.
    std::vector<double> diag(static_cast<std::size_t>(dim), 0.0);
    for (int i = 0; i < dim && i < static_cast<int>(J.alpha_seq.size()); ++i)
        diag[static_cast<std::size_t>(i)] = J.alpha_seq[static_cast<std::size_t>(i)];

    std::vector<double> v(static_cast<std::size_t>(dim), 0.0), w(v);
    v[0] = 1.0;
    std::vector<double> moments;
    moments.reserve(static_cast<std::size_t>(k_max) + 1);
    moments.push_back(1.0);
    for (int k = 1; k <= k_max; ++k) {
        for (int i = 0; i < dim; ++i) {
            const auto u = static_cast<std::size_t>(i);
            double s = 0.0;
            if (i > 0) s += off[u - 1] * v[u - 1];
            s += diag[u] * v[u];
            if (i + 1 < dim) s += off[u] * v[u + 1];
            w[u] = s;
        }
        std::swap(v, w);
        moments.push_back(v[0]);
    }
    return moments;
}

}  // namespace aqfock
