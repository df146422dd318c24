#pragma once

#include <vector>

#include "aqfock/qcalc.hpp"

// Three-term recurrence engine: Jacobi sequences, monic orthogonal
// polynomials, norms, and moments via the tridiagonal quantum
// decomposition.

namespace aqfock {

/// Recurrence data (omega_n, alpha_n) of a family of monic orthogonal
/// polynomials. omega holds omega_1..omega_N (omega_0 == 1 by convention),
/// alpha_seq holds alpha_0..alpha_{N-1}. All omega_n must be positive.
struct JacobiSequence {
    std::vector<double> omega;
    std::vector<double> alpha_seq;

    JacobiSequence(std::vector<double> omega_, std::vector<double> alpha_);

    int levels() const { return static_cast<int>(omega.size()); }
};

/// Jacobi sequence of the q-Meixner-Pollaczek polynomials:
/// omega_n = (1 + alpha q^{n-1}) [n]_q, alpha_n = 0.
JacobiSequence mp_jacobi(const QParams& params, int n_max);

/// Monic polynomial, coefficients low degree first, leading coefficient 1.
struct MonicPolynomial {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;
};

/// P_n from the three-term recursion x P_n = P_{n+1} + omega_n P_{n-1} + alpha_n P_n
/// with P_0 = 1, P_1 = x - alpha_0.
MonicPolynomial polynomial(const JacobiSequence& J, int n);

/// Squared L^2 norm [omega_n]! = prod_{k=0}^n omega_k of P_n.
double norm_squared(const JacobiSequence& J, int n);

/// Moments m_0..m_{k_max} of the orthogonality measure, m_k = (T^k)_{00}
/// for the symmetric tridiagonal T with diagonal alpha_n and off-diagonal
/// sqrt(omega_n). Needs ceil(k_max/2) levels of J.
std::vector<double> moments_from_jacobi(const JacobiSequence& J, int k_max);

}  // namespace aqfock
