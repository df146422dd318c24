#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

// q-calculus primitives: q-numbers, q-factorials, q-shifted factorials
// (finite and truncated infinite), q-binomials, Rogers-Szego polynomials
// and the classical Pochhammer symbol. Everything is a pure function of
// its arguments.

namespace aqfock {

/// Deformation parameters (alpha, q). Construction rejects values outside
/// the open square (-1,1)^2.
struct QParams {
    double alpha;
    double q;

    QParams(double alpha_, double q_) : alpha(alpha_), q(q_) {
        if (!(alpha > -1.0 && alpha < 1.0))
            throw std::domain_error("QParams: alpha must lie in (-1,1)");
        if (!(q > -1.0 && q < 1.0))
            throw std::domain_error("QParams: q must lie in (-1,1)");
    }
};

/// Cutoff rule shared by all infinite products and atom series: retain
/// N* = min{n : |q|^n < tol} terms, additionally capped by max_terms.
/// Remaining factors of an infinite product (a;q)_inf differ from 1 by
/// at most |a| * tol / (1-|q|) each.
struct TruncationPolicy {
    double tol = 1e-16;
    int max_terms = 10000;

    TruncationPolicy() = default;
    TruncationPolicy(double tol_, int max_terms_ = 10000) : tol(tol_), max_terms(max_terms_) {
        if (!(tol > 0.0)) throw std::domain_error("TruncationPolicy: tol must be positive");
        if (max_terms < 1) throw std::domain_error("TruncationPolicy: max_terms must be positive");
    }

    /// Number of retained terms for ratio |q|.
    int terms(double q) const {
        double p = 1.0;  // |q|^0
        int n = 0;
        while (std::abs(p) >= tol && n < max_terms) {
            p *= std::abs(q);
            ++n;
        }
        return n;
    }
};

namespace detail {

// Accumulation type: products of many near-1 factors lose digits in the
// working precision, so double-precision entry points accumulate in
// long double.
template <class Real>
using wide_t = std::conditional_t<(sizeof(Real) < sizeof(long double)), long double, Real>;

inline void require_nonneg(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

}  // namespace detail

/// q-number [n]_q = 1 + q + ... + q^{n-1}; 0 for n = 0.
template <class Real>
Real q_number(int n, Real q) {
    detail::require_nonneg(n, "q_number");
    using W = detail::wide_t<Real>;
    W sum = 0, p = 1;
    for (int j = 0; j < n; ++j) {
        sum += p;
        p *= static_cast<W>(q);
    }
    return static_cast<Real>(sum);
}

/// q-factorial [k]_q! = prod_{l=1}^k [l]_q, with [0]_q! = 1.
template <class Real>
Real q_factorial(int k, Real q) {
    detail::require_nonneg(k, "q_factorial");
    using W = detail::wide_t<Real>;
    W prod = 1, num = 0, p = 1;
    for (int l = 1; l <= k; ++l) {
        num += p;  // [l]_q
        p *= static_cast<W>(q);
        prod *= num;
    }
    return static_cast<Real>(prod);
}

/// Finite q-shifted factorial (a;q)_k = prod_{l=1}^k (1 - a q^{l-1}).
template <class Real>
Real q_pochhammer(Real a, Real q, int k) {
    detail::require_nonneg(k, "q_pochhammer");
    using W = detail::wide_t<Real>;
    W prod = 1, qp = 1;
    for (int l = 0; l < k; ++l) {
        prod *= (W(1) - static_cast<W>(a) * qp);
        qp *= static_cast<W>(q);
    }
    return static_cast<Real>(prod);
}

/// Truncated infinite q-shifted factorial (a;q)_inf, |q| < 1.
template <class Real>
Real q_pochhammer_inf(Real a, Real q, const TruncationPolicy& trunc = {}) {
    if (!(std::abs(static_cast<double>(q)) < 1.0))
        throw std::domain_error("q_pochhammer_inf: requires |q| < 1");
    return q_pochhammer(a, q, trunc.terms(static_cast<double>(q)));
}

/// q-binomial coefficient (q;q)_n / ((q;q)_l (q;q)_{n-l}), computed as a
/// cancellation-free product of ratios; strictly positive for q in (-1,1).
template <class Real>
Real q_binomial(int n, int l, Real q) {
    detail::require_nonneg(n, "q_binomial");
    if (l < 0 || l > n) throw std::out_of_range("q_binomial: l outside 0..n");
    if (l > n - l) l = n - l;
    using W = detail::wide_t<Real>;
    W prod = 1;
    W qj = 1;                                     // q^j
    W qnl = std::pow(static_cast<W>(q), n - l);   // q^{n-l+j}
    for (int j = 1; j <= l; ++j) {
        qj *= static_cast<W>(q);
        qnl *= static_cast<W>(q);
        prod *= (W(1) - qnl) / (W(1) - qj);
    }
    return static_cast<Real>(prod);
}

/// Rogers-Szego polynomial h_n(z|q) = sum_l qbinom(n,l,q) z^l (sum form).
template <class Real>
Real rogers_szego(int n, Real z, Real q) {
    detail::require_nonneg(n, "rogers_szego");
    using W = detail::wide_t<Real>;
    const W wq = static_cast<W>(q), wz = static_cast<W>(z);
    std::vector<W> qpow(static_cast<std::size_t>(n) + 1);
    qpow[0] = 1;
    for (int j = 1; j <= n; ++j) qpow[j] = qpow[j - 1] * wq;
    W sum = 0, binom = 1, zp = 1;
    for (int l = 0; l <= n; ++l) {
        sum += binom * zp;
        if (l < n)  // qbinom(n,l+1) = qbinom(n,l) * (1-q^{n-l})/(1-q^{l+1})
            binom *= (W(1) - qpow[n - l]) / (W(1) - qpow[l + 1]);
        zp *= wz;
    }
    return static_cast<Real>(sum);
}

/// Rogers-Szego polynomial via the recurrence
/// h_{n+1}(z|q) = (z+1) h_n(z|q) - (1-q^n) z h_{n-1}(z|q).
/// For z >= -1 both recurrence coefficients are nonnegative, so the
/// evaluation is cancellation-free; at z = -1 odd-degree values vanish
/// exactly.
template <class Real>
Real rogers_szego_rec(int n, Real z, Real q) {
    detail::require_nonneg(n, "rogers_szego_rec");
    using W = detail::wide_t<Real>;
    const W wz = static_cast<W>(z), wq = static_cast<W>(q);
    if (n == 0) return Real(1);
    W hprev = 1, h = wz + 1, qm = wq;
    for (int m = 1; m < n; ++m) {
        W next = (wz + 1) * h - (W(1) - qm) * wz * hprev;
        hprev = h;
        h = next;
        qm *= wq;
    }
    return static_cast<Real>(h);
}

/// Classical Pochhammer symbol (k)_n = k (k+1) ... (k+n-1), (k)_0 = 1.
template <class Real>
Real pochhammer(Real k, int n) {
    detail::require_nonneg(n, "pochhammer");
    using W = detail::wide_t<Real>;
    W prod = 1;
    for (int j = 0; j < n; ++j) prod *= (static_cast<W>(k) + j);
    return static_cast<Real>(prod);
}

}  // namespace aqfock
