#include "aqfock/suites.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "aqfock/density.hpp"
#include "aqfock/fock1.hpp"
#include "aqfock/jacobi.hpp"
#include "aqfock/typeb.hpp"

namespace aqfock {

namespace {

// Parameter points used across the suites.
const std::vector<std::pair<double, double>> kMomentPoints = {
    {-0.5, 0.5}, {0.2, 0.6}, {-0.9, 0.0}, {0.5, 0.5}, {-0.3, -0.3}};
const std::vector<std::pair<double, double>> kDensityPoints = {{-0.5, 0.5}, {0.3, 0.6}, {0.5, 0.5}};
const std::vector<double> kQGrid = {0.1, 0.5, 0.9, -0.1, -0.5, -0.9};
const std::vector<double> kQ2Grid = {0.2, 0.5, 0.8, -0.2, -0.5, -0.8};

double target_moment(double alpha, double q, int k) {
    return q_pochhammer(-alpha, q, k) * q_factorial(k, q);
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

CheckRow row(std::string name, double value, double threshold, int dim = 0) {
    return {std::move(name), dim, value, threshold, value <= threshold};
}

}  // namespace

namespace checks {

CheckRow rs_dual_route(int n_max, double rel_tol) {
    double worst = 0.0;
    for (double q : kQGrid)
        for (int n = 0; n <= n_max; ++n)
            for (int zi = 0; zi <= 20; ++zi) {
                const double z = -5.0 + 0.5 * zi;
                const double a = rogers_szego(n, z, q), b = rogers_szego_rec(n, z, q);
                worst = std::max(worst, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
            }
    return row("rs sum vs recurrence", worst, rel_tol);
}

CheckRow rs_odd_zeros(int n_max, double abs_tol) {
    double worst = 0.0;
    for (double q : kQGrid)
        for (int n = 1; n <= n_max; n += 2) worst = std::max(worst, std::abs(rogers_szego(n, -1.0, q)));
    return row("rs h_n(-1|q) = 0, odd n", worst, abs_tol);
}

CheckRow rs_even_positive(int n_max) {
    double min_val = std::numeric_limits<double>::infinity();
    for (double q : kQGrid)
        for (int n = 0; n <= n_max; n += 2)
            for (int i = 0; i <= 1000; ++i) {
                const double x = -5.0 + 0.01 * i;
                min_val = std::min(min_val, rogers_szego(n, x, q));
            }
    CheckRow r{"rs h_n > 0, even n (min over grid)", 0, min_val, 0.0, min_val > 0.0};
    return r;
}

CheckRow qfactorial_vs_pochhammer(int k_max, double rel_tol) {
    double worst = 0.0;
    for (double q : kQGrid)
        for (int k = 0; k <= k_max; ++k) {
            const double lhs = q_factorial(k, q) * std::pow(1.0 - q, k);
            const double rhs = q_pochhammer(q, q, k);
            worst = std::max(worst, rel_err(lhs, rhs));
        }
    return row("[k]_q! (1-q)^k = (q;q)_k", worst, rel_tol);
}

CheckRow pochhammer_splitting(double rel_tol) {
    double worst = 0.0;
    for (double q : kQGrid)
        for (double a : {-0.8, -0.3, 0.4, 0.9})
            for (int k : {1, 3, 7, 12}) {
                const double lhs = q_pochhammer(a, q, k);
                const double rhs = q_pochhammer_inf(a, q) / q_pochhammer_inf(a * std::pow(q, k), q);
                worst = std::max(worst, rel_err(lhs, rhs));
            }
    return row("(a;q)_k = (a;q)_inf/(a q^k;q)_inf", worst, rel_tol);
}

CheckRow pochhammer_limit(double q, double abs_tol) {
    const int k = 2, n = 3;
    const double lhs = q_pochhammer(std::pow(q, k), q, n) / std::pow(1.0 - q, n);
    const double rhs = pochhammer(static_cast<double>(k), n);
    return row("(q^k;q)_n/(1-q)^n -> (k)_n", std::abs(lhs - rhs), abs_tol);
}

CheckRow moment_reproduction(int k_max, double rel_tol, double trunc_tol, Precision prec) {
    const TruncationPolicy trunc(trunc_tol);
    double worst = 0.0;
    for (auto [alpha, q] : kMomentPoints) {
        const DiscreteRadialMeasure mu = radial_measure(QParams(alpha, q), trunc, prec);
        for (int k = 0; k <= k_max; ++k)
            worst = std::max(worst, rel_err(moment(mu, 2 * k), target_moment(alpha, q, k)));
    }
    return row("radial moments = (-alpha;q)_k [k]_q!", worst, rel_tol);
}

CheckRow dichotomy_agreement(int grid_points, double trunc_tol) {
    const TruncationPolicy trunc(trunc_tol);
    int mismatches = 0;
    for (int i = 0; i < grid_points; ++i)
        for (int j = 0; j < grid_points; ++j) {
            const double alpha = -0.95 + 1.9 * i / (grid_points - 1);
            const double q = -0.95 + 1.9 * j / (grid_points - 1);
            const QParams p(alpha, q);
            const ExistenceVerdict v = classify(p);
            if (v.exists) {
                // The theorem's construction must be nonnegative.
                if (!is_nonnegative(radial_measure(p, trunc), 1e-12)) ++mismatches;
            }
            if (q >= 0.0) {
                // Signed construction flips sign exactly on alpha > q.
                const bool nonneg = is_nonnegative(rho_nu_alpha_q(p, trunc), 1e-12);
                if (nonneg != (alpha <= q)) ++mismatches;
            }
        }
    return row("existence dichotomy grid mismatches", static_cast<double>(mismatches), 0.0);
}

CheckRow dichotomy_negative_witness(int grid_points, double trunc_tol) {
    const TruncationPolicy trunc(trunc_tol);
    // Least-negative violating weight over the alpha > q >= 0 cells; the
    // check demands a strictly negative witness < -1e-6 in every such cell.
    double weakest = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i)
        for (int j = 0; j < grid_points; ++j) {
            const double alpha = -0.95 + 1.9 * i / (grid_points - 1);
            const double q = -0.95 + 1.9 * j / (grid_points - 1);
            if (!(q >= 0.0 && alpha > q)) continue;
            const DiscreteRadialMeasure mu = rho_nu_alpha_q(QParams(alpha, q), trunc);
            double min_w = 0.0;
            for (const auto& a : mu.atoms()) min_w = std::min(min_w, a.w);
            weakest = std::max(weakest, min_w);
        }
    CheckRow r{"weakest negative witness on alpha > q >= 0", 0, weakest, -1e-6, weakest < -1e-6};
    return r;
}

CheckRow q2_identity(int k_max, double rel_tol) {
    double worst = 0.0;
    for (double q : kQ2Grid)
        for (int k = 0; k <= k_max; ++k) {
            const double lhs = q_pochhammer(-q, q, k) * q_factorial(k, q);
            const double rhs = std::pow(1.0 + q, k) * q_factorial(k, q * q);
            worst = std::max(worst, rel_err(lhs, rhs));
        }
    return row("(-q;q)_k [k]_q! = (1+q)^k [k]_{q^2}!", worst, rel_tol);
}

CheckRow qq_vs_alpha_q_moments(int k_max, double rel_tol, double trunc_tol) {
    const TruncationPolicy trunc(trunc_tol);
    double worst = 0.0;
    for (double q : {0.2, 0.5, 0.8}) {
        const DiscreteRadialMeasure a = rho_nu_qq(q, trunc);
        const DiscreteRadialMeasure b = rho_nu_alpha_q(QParams(q, q), trunc);
        for (int k = 0; k <= k_max; ++k) worst = std::max(worst, rel_err(moment(a, 2 * k), moment(b, 2 * k)));
    }
    return row("rho_nu_qq vs rho_nu_alpha_q moments, q > 0", worst, rel_tol);
}

CheckRow t_deform_moments(double rel_tol) {
    const DiscreteRadialMeasure mu = rho_nu_alpha_q(QParams(-0.5, 0.5));
    double worst = 0.0;
    for (double t : {1.0, 1.5, 3.0}) {
        const DiscreteRadialMeasure nu = t_deform(mu, t);
        worst = std::max(worst, rel_err(moment(nu, 0), 1.0));
        for (int k = 1; k <= 12; ++k)
            worst = std::max(worst, rel_err(moment(nu, 2 * k), moment(mu, 2 * k) / t));
    }
    return row("t-deform moments scale by 1/t", worst, rel_tol);
}

CheckRow factorization_atomwise(double tol) {
    double worst = 0.0;
    for (auto [alpha, q] : {std::pair{-0.5, 0.5}, std::pair{0.3, 0.6}}) {
        const TruncationPolicy trunc(1e-12);
        const QParams p(alpha, q);
        const DiscreteRadialMeasure direct = rho_nu_alpha_q(p, trunc);
        const DiscreteRadialMeasure conv =
            mellin_convolve(rho_alpha_q(p, trunc), dilate(rho_alpha_q(QParams(-q, q), trunc), 1.0 / std::sqrt(1.0 - q)));
        // Compare atoms carrying non-negligible weight.
        auto significant = [](const DiscreteRadialMeasure& m) {
            std::vector<RadialAtom> out;
            for (const auto& a : m.atoms())
                if (std::abs(a.w) > 1e-10) out.push_back(a);
            return out;
        };
        const auto da = significant(direct), ca = significant(conv);
        if (da.size() != ca.size()) return row("factorization atom count", 1.0, 0.0);
        for (std::size_t i = 0; i < da.size(); ++i) {
            worst = std::max(worst, std::abs(da[i].r - ca[i].r));
            worst = std::max(worst, std::abs(da[i].w - ca[i].w));
        }
    }
    return row("factorization rho_nu = rho_alpha_q (*) D(rho_{-q,q})", worst, tol);
}

CheckRow density_normalization(int quad_order, double tol) {
    double worst = 0.0;
    for (auto [alpha, q] : kDensityPoints) {
        const double mass = integrate([](double) { return 1.0; }, QParams(alpha, q), {}, quad_order);
        worst = std::max(worst, std::abs(mass - 1.0));
    }
    return row("int d nu = 1", worst, tol);
}

CheckRow orthogonality(int max_degree, int quad_order, double tol) {
    double worst = 0.0;
    for (auto [alpha, q] : kDensityPoints) {
        const QParams p(alpha, q);
        const JacobiSequence J = mp_jacobi(p, max_degree + 1);
        std::vector<MonicPolynomial> P;
        for (int n = 0; n <= max_degree; ++n) P.push_back(polynomial(J, n));
        for (int m = 0; m <= max_degree; ++m)
            for (int n = m; n <= max_degree; ++n) {
                const double val =
                    integrate([&](double x) { return P[static_cast<std::size_t>(m)](x) * P[static_cast<std::size_t>(n)](x); }, p, {}, quad_order);
                const double want = m == n ? norm_squared(J, n) : 0.0;
                worst = std::max(worst, std::abs(val - want) / std::max(1.0, std::abs(want)));
            }
    }
    return row("orthogonality <P_m,P_n> = delta [omega_n]!", worst, tol);
}

CheckRow quadrature_moment_agreement(int k_max, int quad_order, double tol) {
    double worst = 0.0;
    for (auto [alpha, q] : kDensityPoints) {
        const QParams p(alpha, q);
        const auto ms = moments_from_jacobi(mp_jacobi(p, k_max), k_max);
        for (int k = 0; k <= k_max; ++k) {
            const double val = integrate([k](double x) { return std::pow(x, k); }, p, {}, quad_order);
            worst = std::max(worst, std::abs(val - ms[static_cast<std::size_t>(k)]));
        }
    }
    return row("quadrature moments vs tridiagonal", worst, tol);
}

CheckRow density_nonnegative(int grid_points) {
    double min_val = std::numeric_limits<double>::infinity();
    for (auto [alpha, q] : kDensityPoints) {
        const QParams p(alpha, q);
        const SupportInterval s = support_interval(q);
        for (int i = 1; i <= grid_points; ++i) {
            const double x = s.lo + (s.hi - s.lo) * i / (grid_points + 1);
            min_val = std::min(min_val, nu_density(x, p));
        }
    }
    CheckRow r{"density nonnegative (min over grid)", 0, min_val, 0.0, min_val >= 0.0};
    return r;
}

CheckRow qgaussian_match(double q, double tol) {
    const QParams p(0.0, q);
    const SupportInterval s = support_interval(q);
    double worst = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double x = s.lo + (s.hi - s.lo) * i / 201.0;
        worst = std::max(worst, std::abs(nu_density(x, p) - q_gaussian_density(x, q)));
    }
    return row("alpha = 0 matches q-Gaussian density", worst, tol);
}

std::vector<CheckRow> relation_residuals(int dim, double tol) {
    std::vector<CheckRow> rows;
    for (auto [alpha, q] : {std::pair{0.0, 0.5}, std::pair{0.5, 0.5}, std::pair{-0.3, 0.7}, std::pair{-0.4, -0.6}}) {
        const RelationReport rep = verify_relations(QParams(alpha, q), dim);
        for (const auto& c : rep.checks) {
            char name[96];
            std::snprintf(name, sizeof name, "%s @ (%g,%g)", c.relation.c_str(), alpha, q);
            rows.push_back(row(name, c.residual, tol, dim));
        }
    }
    return rows;
}

CheckRow relations_rational(int dim) {
    const bool ok = relations_exact(1, 2, 1, 2, dim) && relations_exact(-3, 10, 7, 10, dim) &&
                    relations_exact(-2, 5, -2, 5, dim);
    CheckRow r{"rational-mode relations exactly zero", dim, ok ? 0.0 : 1.0, 0.0, ok};
    return r;
}

CheckRow scaled_limit(double beta, double q, int n_max, double rel_tol) {
    const LimitReport rep = scaled_limit_check(beta, q, n_max + 1);
    char name[96];
    std::snprintf(name, sizeof name, "q up 1 limits, beta=%g q=%g", beta, q);
    return row(name, std::max(rep.m_deviation, rep.jacobi_deviation), rel_tol, n_max + 1);
}

CheckRow alpha_jackson_realizes_annihilation(int dim, double tol) {
    double worst = 0.0;
    for (auto [alpha, q] : {std::pair{-0.5, 0.5}, std::pair{0.4, -0.3}}) {
        const QParams p(alpha, q);
        const JacobiSequence J = mp_jacobi(p, dim);
        const OperatorMatrix am = annihilation(J, dim);
        for (int n = 1; n < dim; ++n) {
            // Phi_n as monomial coefficients, z^n / sqrt([omega_n]!).
            PolyCoeffs phi(static_cast<std::size_t>(n) + 1, 0.0);
            phi[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(norm_squared(J, n));
            const PolyCoeffs dphi = alpha_jackson(phi, p);
            // Expand back in Phi_{n-1}: coefficient * sqrt([omega_{n-1}]!).
            const double got = dphi[static_cast<std::size_t>(n) - 1] * std::sqrt(norm_squared(J, n - 1));
            worst = std::max(worst, std::abs(got - am(n - 1, n)) / std::max(1.0, std::abs(am(n - 1, n))));
        }
    }
    return row("alpha-Jackson realizes a-", worst, tol);
}

CheckRow group_sizes(int n_max) {
    int bad = 0;
    long fact = 1;
    for (int n = 1; n <= n_max; ++n) {
        fact *= n;
        const long want = (1L << n) * fact;
        if (static_cast<long>(enumerate_group(n).elements.size()) != want) ++bad;
    }
    return row("|Sigma_n| = 2^n n!", static_cast<double>(bad), 0.0, n_max);
}

CheckRow braid_relations(int n_max) {
    int bad = 0;
    for (int n = 1; n <= n_max; ++n) {
        const auto e = SignedPermutation::identity(n);
        std::vector<SignedPermutation> pi;
        for (int i = 0; i < n; ++i) pi.push_back(SignedPermutation::generator(n, i));
        auto power = [&](const SignedPermutation& g, int k) {
            SignedPermutation acc = e;
            for (int j = 0; j < k; ++j) acc = acc.compose(g);
            return acc;
        };
        for (int i = 0; i < n; ++i)
            if (!(power(pi[static_cast<std::size_t>(i)], 2) == e)) ++bad;
        if (n >= 2 && !(power(pi[0].compose(pi[1]), 4) == e)) ++bad;
        for (int i = 1; i + 1 < n; ++i)
            if (!(power(pi[static_cast<std::size_t>(i)].compose(pi[static_cast<std::size_t>(i) + 1]), 3) == e)) ++bad;
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (!(power(pi[static_cast<std::size_t>(i)].compose(pi[static_cast<std::size_t>(j)]), 2) == e)) ++bad;
    }
    return row("generalized braid relations", static_cast<double>(bad), 0.0, n_max);
}

CheckRow length_additivity(int n_max) {
    int bad = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& el : enumerate_group(n).elements)
            if (el.l1 + el.l2 != static_cast<int>(el.word.size())) ++bad;
    return row("l1 + l2 = Coxeter length", static_cast<double>(bad), 0.0, n_max);
}

CheckRow gram_norms(int n_max, double tol) {
    double worst = 0.0;
    for (auto [alpha, q] : kMomentPoints) {
        const QParams p(alpha, q);
        for (int d : {1, 2}) {
            for (double jsign : {1.0, -1.0}) {
                const Involution J = jsign * Involution::Identity(d, d);
                Eigen::VectorXd f = Eigen::VectorXd::Zero(d);
                f(0) = 1.0;
                for (int n = 1; n <= n_max; ++n) {
                    const SimpleTensor fn(static_cast<std::size_t>(n), f);
                    const double got = aq_gram({fn}, p, J)(0, 0);
                    // <f, fbar> = jsign, so the norm is prod (1 + jsign alpha q^{j-1}) [j]_q.
                    double want = 1.0;
                    for (int j = 1; j <= n; ++j)
                        want *= (1.0 + jsign * alpha * std::pow(q, j - 1)) * q_number(j, q);
                    worst = std::max(worst, rel_err(got, want));
                }
            }
        }
    }
    return row("<f^n,f^n>_{alpha,q} = [omega_n]!", worst, tol, n_max);
}

CheckRow vacuum_chain_vs_tridiagonal(double rel_tol) {
    double worst = 0.0;
    for (auto [alpha, q] : kMomentPoints) {
        const QParams p(alpha, q);
        const auto ms = moments_from_jacobi(mp_jacobi(p, 5), 8);
        for (int k = 0; k <= 8; ++k)
            worst = std::max(worst, rel_err(vacuum_moment(p, k), ms[static_cast<std::size_t>(k)]));
    }
    return row("vacuum chain = tridiagonal moments", worst, rel_tol);
}

CheckRow vacuum_vs_quadrature(int quad_order, double tol) {
    const QParams p(-0.4, 0.3);
    double worst = 0.0;
    for (int k = 0; k <= 8; ++k) {
        const double quad = integrate([k](double x) { return std::pow(x, k); }, p, {}, quad_order);
        worst = std::max(worst, std::abs(vacuum_moment(p, k) - quad));
    }
    return row("vacuum chain vs quadrature @ (-0.4,0.3)", worst, tol);
}

CheckRow commutation(int d, int rank, double tol) {
    double worst = 0.0;
    const Involution I = Involution::Identity(d, d);
    Involution Jsig = Involution::Identity(d, d);
    if (d > 1) Jsig(d - 1, d - 1) = -1.0;
    for (auto [alpha, q] : {std::pair{0.5, -0.5}, std::pair{-0.4, 0.3}, std::pair{0.3, 0.3}, std::pair{0.0, 0.6}}) {
        for (const Involution& J : {I, Involution(-I), Jsig}) {
            const CommutationReport rep = check_commutation(QParams(alpha, q), d, rank, J);
            worst = std::max(worst, rep.max_residual);
        }
    }
    return row("tensor commutation via Gram adjoint", worst, tol, d);
}

}  // namespace checks

std::vector<std::string> suite_names() { return {"qcalc", "radial", "density", "fock1", "typeb", "all"}; }

std::vector<CheckRow> run_suite(const std::string& suite, const SuiteOptions& opts) {
    using namespace checks;
    std::vector<CheckRow> rows;
    auto add = [&rows](CheckRow r) { rows.push_back(std::move(r)); };
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "qcalc") {
        known = true;
        add(rs_dual_route(30, 1e-12));
        add(rs_odd_zeros(19, 1e-12));
        add(rs_even_positive(20));
        add(qfactorial_vs_pochhammer(20, 1e-12));
        add(pochhammer_splitting(1e-10));
        add(pochhammer_limit(0.9999, 1e-2));
    }
    if (all || suite == "radial") {
        known = true;
        add(moment_reproduction(12, 1e-8, 1e-18, opts.precision));
        add(dichotomy_agreement(41, opts.tol));
        add(dichotomy_negative_witness(41, opts.tol));
        add(q2_identity(20, 1e-12));
        add(qq_vs_alpha_q_moments(12, 1e-10, opts.tol));
        add(t_deform_moments(1e-12));
        add(factorization_atomwise(1e-10));
    }
    if (all || suite == "density") {
        known = true;
        add(density_normalization(opts.quad_order, 1e-8));
        add(orthogonality(6, opts.quad_order, 1e-6));
        add(quadrature_moment_agreement(8, opts.quad_order, 1e-6));
        add(density_nonnegative(1000));
        add(qgaussian_match(0.5, 1e-10));
    }
    if (all || suite == "fock1") {
        known = true;
        for (auto& r : relation_residuals(opts.dim, 1e-12)) add(std::move(r));
        add(relations_rational(std::min(opts.dim, 24)));
        add(scaled_limit(1.0, 0.999, 10, 1e-2));
        add(scaled_limit(0.5, 0.9999, 10, 1e-3));
        add(alpha_jackson_realizes_annihilation(std::min(opts.dim, 16), 1e-12));
    }
    if (all || suite == "typeb") {
        known = true;
        add(group_sizes(5));
        add(braid_relations(std::min(opts.n, 4)));
        add(length_additivity(std::min(opts.n, 4)));
        add(gram_norms(std::min(opts.n, 4), 1e-12));
        add(vacuum_chain_vs_tridiagonal(1e-12));
        add(vacuum_vs_quadrature(opts.quad_order, 1e-6));
        add(commutation(2, 2, 1e-10));
    }
    if (!known) throw UnknownSuiteError("unknown suite: " + suite);
    return rows;
}

}  // namespace aqfock
