#include "aqfock/radial.hpp"

#include <algorithm>
#include <cmath>

namespace aqfock {

namespace {

constexpr double kMergeTol = 1e-14;   // positions closer than this coincide
constexpr double kDropTol = 1e-300;   // weights below this are zero

}  // namespace

DiscreteRadialMeasure DiscreteRadialMeasure::from_atoms(std::vector<RadialAtom> atoms, TruncationMeta meta) {
    for (const auto& a : atoms)
        if (!(a.r >= 0.0)) throw std::domain_error("DiscreteRadialMeasure: negative atom position");
    std::sort(atoms.begin(), atoms.end(), [](const RadialAtom& a, const RadialAtom& b) { return a.r < b.r; });
    std::vector<RadialAtom> merged;
    merged.reserve(atoms.size());
    for (const auto& a : atoms) {
        if (!merged.empty() && a.r - merged.back().r <= kMergeTol)
            merged.back().w += a.w;
        else
            merged.push_back(a);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const RadialAtom& a) { return std::abs(a.w) < kDropTol; }),
                 merged.end());
    DiscreteRadialMeasure mu;
    mu.atoms_ = std::move(merged);
    mu.meta_ = meta;
    return mu;
}

double moment(const DiscreteRadialMeasure& mu, int two_k) {
    if (two_k < 0 || two_k % 2 != 0) throw std::invalid_argument("moment: order must be even and nonnegative");
    long double sum = 0.0L;
    for (const auto& a : mu.atoms()) sum += static_cast<long double>(a.w) * std::pow(static_cast<long double>(a.r), two_k);
    return static_cast<double>(sum);
}

DiscreteRadialMeasure dilate(const DiscreteRadialMeasure& mu, double t) {
    if (!(t > 0.0)) throw std::domain_error("dilate: t must be positive");
    std::vector<RadialAtom> atoms = mu.atoms();
    for (auto& a : atoms) a.r *= t;
    return DiscreteRadialMeasure::from_atoms(std::move(atoms), mu.truncation());
}

DiscreteRadialMeasure mellin_convolve(const DiscreteRadialMeasure& mu, const DiscreteRadialMeasure& nu) {
    std::vector<RadialAtom> atoms;
    atoms.reserve(mu.size() * nu.size());
    for (const auto& a : mu.atoms())
        for (const auto& b : nu.atoms()) atoms.push_back({a.r * b.r, a.w * b.w});
    TruncationMeta meta;
    meta.tol = std::max(mu.truncation().tol, nu.truncation().tol);
    meta.terms = static_cast<int>(atoms.size());
    meta.residual = mu.truncation().residual + nu.truncation().residual;
    return DiscreteRadialMeasure::from_atoms(std::move(atoms), meta);
}

bool is_nonnegative(const DiscreteRadialMeasure& mu, double tol) {
    for (const auto& a : mu.atoms())
        if (a.w < -tol) return false;
    return true;
}

DiscreteRadialMeasure t_deform(const DiscreteRadialMeasure& mu, double t) {
    if (!(t >= 1.0)) throw std::domain_error("t_deform: t must be >= 1");
    std::vector<RadialAtom> atoms;
    atoms.reserve(mu.size() + 1);
    atoms.push_back({0.0, 1.0 - 1.0 / t});
    for (const auto& a : mu.atoms()) atoms.push_back({a.r, a.w / t});
    return DiscreteRadialMeasure::from_atoms(std::move(atoms), mu.truncation());
}

const char* to_string(Branch b) {
    switch (b) {
        case Branch::Q_ZERO: return "Q_ZERO";
        case Branch::Q_POS_ALPHA_LT: return "Q_POS_ALPHA_LT";
        case Branch::ALPHA_EQ_Q: return "ALPHA_EQ_Q";
        case Branch::NONE: return "NONE";
    }
    return "NONE";
}

ExistenceVerdict classify(const QParams& params, double alpha_eq_q_eps) {
    const double alpha = params.alpha, q = params.q;
    const bool alpha_eq_q = alpha_eq_q_eps > 0.0 ? std::abs(alpha - q) <= alpha_eq_q_eps : alpha == q;
    if (q == 0.0) {
        if (alpha <= 0.0) return {true, Branch::Q_ZERO, "alpha <= q = 0"};
        return {false, Branch::NONE, "alpha > q >= 0"};
    }
    if (alpha_eq_q) return {true, Branch::ALPHA_EQ_Q, "alpha = q != 0"};
    if (q > 0.0) {
        if (alpha < q) return {true, Branch::Q_POS_ALPHA_LT, "q > 0 and alpha < q"};
        return {false, Branch::NONE, "alpha > q >= 0"};
    }
    return {false, Branch::NONE, "q < 0 and alpha != q"};
}

namespace {

// Shared driver for the geometric atom series. `weight` must be called with
// n = 0, 1, 2, ... in order (the generators below keep incremental state).
// Keeps N* = min{n : ratio^n < tol} atoms (capped), then accumulates 64
// further terms plus a geometric bound as the recorded residual.
template <class Real, class WeightFn, class PositionFn>
DiscreteRadialMeasure build_series(double ratio, const TruncationPolicy& trunc, WeightFn weight,
                                   PositionFn position) {
    const double r = std::min(std::max(ratio, 1e-3), 0.999999);
    int n_keep = 1;
    {
        double p = r;
        while (p >= trunc.tol && n_keep < trunc.max_terms) {
            p *= r;
            ++n_keep;
        }
    }
    std::vector<RadialAtom> atoms;
    atoms.reserve(static_cast<std::size_t>(n_keep));
    for (int n = 0; n < n_keep; ++n) atoms.push_back({position(n), static_cast<double>(weight(n))});
    // Residual: 64 explicit tail terms plus a geometric bound. The max of
    // the last two probes covers series whose odd terms vanish identically.
    long double residual = 0.0L, last = 0.0L, prev = 0.0L;
    for (int n = n_keep; n < n_keep + 64; ++n) {
        prev = last;
        last = std::abs(static_cast<long double>(weight(n)));
        residual += last;
    }
    residual += std::max(last, prev) * r / (1.0L - r);
    TruncationMeta meta{trunc.tol, n_keep, static_cast<double>(residual)};
    return DiscreteRadialMeasure::from_atoms(std::move(atoms), meta);
}

template <class Real>
DiscreteRadialMeasure rho_alpha_q_impl(double alpha_d, double q_d, const TruncationPolicy& trunc) {
    const Real alpha = static_cast<Real>(alpha_d), q = static_cast<Real>(q_d);
    if (q_d == 0.0)
        return DiscreteRadialMeasure::from_atoms({{0.0, -alpha_d}, {1.0, 1.0 + alpha_d}}, {trunc.tol, 2, 0.0});
    const Real c = q_pochhammer_inf(-alpha, q, trunc);
    // w_n = (-alpha;q)_inf (-alpha)^n / (q;q)_n, evaluated incrementally.
    auto weight = [&, num = Real(1), poch = Real(1), qp = q](int n) mutable -> Real {
        if (n > 0) {
            num *= -alpha;
            poch *= (Real(1) - qp);
            qp *= q;
        }
        return c * num / poch;
    };
    auto position = [&](int n) { return std::pow(q_d, 0.5 * n); };
    return build_series<Real>(std::max(std::abs(alpha_d), q_d), trunc, weight, position);
}

template <class Real>
DiscreteRadialMeasure rho_nu_alpha_q_impl(double alpha_d, double q_d, const TruncationPolicy& trunc) {
    const Real alpha = static_cast<Real>(alpha_d), q = static_cast<Real>(q_d);
    if (q_d == 0.0)
        return DiscreteRadialMeasure::from_atoms({{0.0, -alpha_d}, {1.0, 1.0 + alpha_d}}, {trunc.tol, 2, 0.0});
    const Real c = q_pochhammer_inf(-alpha, q, trunc) * q_pochhammer_inf(q, q, trunc);
    const double scale = 1.0 / std::sqrt(1.0 - q_d);
    // w_n = (-alpha,q;q)_inf u_n with u_n = q^n h_n(-alpha/q | q)/(q;q)_n.
    // The Rogers-Szego recurrence transfers to the scaled quantity as
    //   u_n = ((q - alpha) u_{n-1} + alpha q u_{n-2}) / (1 - q^n),
    // which stays O(max(|alpha|,q)^n) where the unscaled h_n overflows, and
    // keeps every weight on the mathematically correct side of zero: both
    // terms carry the sign (-1)^n for alpha > q, both are positive for
    // 0 <= alpha <= q, the cancellation for alpha < 0 is bounded away from
    // total, and odd terms vanish identically at alpha = q.
    auto weight = [&, u_prev = Real(1), u = (q - alpha) / (Real(1) - q), qn = q](int n) mutable -> Real {
        Real un;
        if (n == 0) un = u_prev;
        else if (n == 1) un = u;
        else {
            qn *= q;
            Real next = ((q - alpha) * u + alpha * q * u_prev) / (Real(1) - qn);
            u_prev = u;
            u = next;
            un = u;
        }
        return c * un;
    };
    auto position = [&](int n) { return scale * std::pow(q_d, 0.5 * n); };
    return build_series<Real>(std::max(std::abs(alpha_d), q_d), trunc, weight, position);
}

template <class Real>
DiscreteRadialMeasure rho_nu_qq_impl(double q_d, const TruncationPolicy& trunc) {
    const Real q2 = static_cast<Real>(q_d) * static_cast<Real>(q_d);
    const Real c = q_pochhammer_inf(q2, q2, trunc);
    const double scale = 1.0 / std::sqrt(1.0 - q_d);
    const double aq = std::abs(q_d);
    auto weight = [&, num = Real(1), poch = Real(1), q2p = q2](int n) mutable -> Real {
        if (n > 0) {
            num *= q2;
            poch *= (Real(1) - q2p);
            q2p *= q2;
        }
        return c * num / poch;
    };
    auto position = [&](int n) { return scale * std::pow(aq, n); };
    return build_series<Real>(static_cast<double>(q2), trunc, weight, position);
}

}  // namespace

DiscreteRadialMeasure rho_alpha_q(const QParams& params, const TruncationPolicy& trunc, Precision prec) {
    if (params.q < 0.0) throw std::domain_error("rho_alpha_q: requires q in [0,1)");
    return prec == Precision::extended ? rho_alpha_q_impl<long double>(params.alpha, params.q, trunc)
                                       : rho_alpha_q_impl<double>(params.alpha, params.q, trunc);
}

DiscreteRadialMeasure rho_nu_alpha_q(const QParams& params, const TruncationPolicy& trunc, Precision prec) {
    if (params.q < 0.0) throw std::domain_error("rho_nu_alpha_q: requires q in [0,1); see classify");
    return prec == Precision::extended ? rho_nu_alpha_q_impl<long double>(params.alpha, params.q, trunc)
                                       : rho_nu_alpha_q_impl<double>(params.alpha, params.q, trunc);
}

DiscreteRadialMeasure rho_nu_qq(double q, const TruncationPolicy& trunc, Precision prec) {
    if (q == 0.0 || !(q > -1.0 && q < 1.0)) throw std::domain_error("rho_nu_qq: requires q in (-1,1) \\ {0}");
    return prec == Precision::extended ? rho_nu_qq_impl<long double>(q, trunc) : rho_nu_qq_impl<double>(q, trunc);
}

DiscreteRadialMeasure radial_measure(const QParams& params, const TruncationPolicy& trunc, Precision prec,
                                     double alpha_eq_q_eps) {
    const ExistenceVerdict v = classify(params, alpha_eq_q_eps);
    switch (v.branch) {
        case Branch::Q_ZERO:
            return DiscreteRadialMeasure::from_atoms({{0.0, -params.alpha}, {1.0, 1.0 + params.alpha}},
                                                     {trunc.tol, 2, 0.0});
        case Branch::Q_POS_ALPHA_LT:
            return rho_nu_alpha_q(params, trunc, prec);
        case Branch::ALPHA_EQ_Q:
            return rho_nu_qq(params.q, trunc, prec);
        case Branch::NONE:
            break;
    }
    throw NonexistenceError(v);
}

}  // namespace aqfock
