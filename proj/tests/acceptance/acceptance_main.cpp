// Acceptance runner: one line per criterion, nonzero exit iff any fails.
// Every tolerance is fixed here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "aqfock/density.hpp"
#include "aqfock/fock1.hpp"
#include "aqfock/jacobi.hpp"
#include "aqfock/suites.hpp"
#include "aqfock/typeb.hpp"

using namespace aqfock;

namespace {

int g_failures = 0;

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int criterion, const std::string& label, bool pass, const std::string& detail) {
    if (!pass) ++g_failures;
    std::printf("criterion %2d %-28s %s  (%s)\n", criterion, label.c_str(), pass ? "PASS" : "FAIL", detail.c_str());
}

std::string residual_detail(const CheckRow& r) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s: %.3e <= %.1e", r.name.c_str(), r.value, r.threshold);
    return buf;
}

bool all_pass(const std::vector<CheckRow>& rows, std::string& detail) {
    bool ok = true;
    double worst = 0.0;
    std::string worst_name;
    for (const auto& r : rows) {
        ok = ok && r.pass;
        const double rel = r.threshold > 0.0 ? r.value / r.threshold : r.value;
        if (rel >= worst) {
            worst = rel;
            worst_name = residual_detail(r);
        }
    }
    detail = worst_name;
    return ok;
}

}  // namespace

int main() {
    // 1. Moment reproduction: five parameter points, k <= 12, rel 1e-8,
    //    truncation tol 1e-18, under 5 s.
    {
        Timer t;
        const CheckRow r = checks::moment_reproduction(12, 1e-8, 1e-18, Precision::standard);
        const double sec = t.seconds();
        char buf[128];
        std::snprintf(buf, sizeof buf, "worst rel %.3e <= 1e-08, %.2f s < 5 s", r.value, sec);
        report(1, "moment reproduction", r.pass && sec < 5.0, buf);
    }

    // 2. Existence dichotomy on the 41 x 41 grid, weights >= -1e-12 on the
    //    existence region, strictly negative witness < -1e-6 off it.
    {
        const CheckRow agree = checks::dichotomy_agreement(41, 1e-16);
        const CheckRow witness = checks::dichotomy_negative_witness(41, 1e-16);
        char buf[128];
        std::snprintf(buf, sizeof buf, "%d mismatches, weakest witness %.3e < -1e-06",
                      static_cast<int>(agree.value), witness.value);
        report(2, "existence dichotomy", agree.pass && witness.pass, buf);
    }

    // 3. Orthogonality by quadrature, m,n <= 6, order 400, three points,
    //    |<P_m,P_n> - delta [omega_n]!| <= 1e-6 max(1, [omega_n]!), under 10 s.
    {
        Timer t;
        const CheckRow r = checks::orthogonality(6, 400, 1e-6);
        const double sec = t.seconds();
        char buf[128];
        std::snprintf(buf, sizeof buf, "worst scaled residual %.3e <= 1e-06, %.2f s < 10 s", r.value, sec);
        report(3, "orthogonality by quadrature", r.pass && sec < 10.0, buf);
    }

    // 4. Type-B brute force: <f^n,f^n>_{alpha,q} = prod (1+alpha q^{j-1})[j]_q
    //    over all 2^n n! elements, n <= 4, d <= 2, J = +-I, five points,
    //    1e-12; group sizes and braid relations exact.
    {
        const CheckRow gram = checks::gram_norms(4, 1e-12);
        const CheckRow sizes = checks::group_sizes(5);
        const CheckRow braid = checks::braid_relations(4);
        char buf[128];
        std::snprintf(buf, sizeof buf, "worst rel %.3e <= 1e-12, sizes/braid exact: %s", gram.value,
                      (sizes.pass && braid.pass) ? "yes" : "no");
        report(4, "type-B brute force", gram.pass && sizes.pass && braid.pass, buf);
    }

    // 5. Commutation relations: one-mode on the leading 23x23 block of dim 24
    //    (< 1e-12, exactly zero in rational mode) and tensor-level Gram-adjoint
    //    (< 1e-10 at d = 2, rank <= 2).
    {
        std::string detail;
        const std::vector<CheckRow> rel = checks::relation_residuals(24, 1e-12);
        const bool rel_ok = all_pass(rel, detail);
        const CheckRow rat = checks::relations_rational(24);
        const CheckRow comm = checks::commutation(2, 2, 1e-10);
        char buf[160];
        std::snprintf(buf, sizeof buf, "one-mode %s; rational exact: %s; tensor %.3e <= 1e-10", detail.c_str(),
                      rat.pass ? "yes" : "no", comm.value);
        report(5, "commutation relations", rel_ok && rat.pass && comm.pass, buf);
    }

    // 6. Rogers-Szego facts: dual-route agreement 1e-12 for n <= 30, odd
    //    zeros at -1 (<= 1e-12) for n <= 19, even positivity for n <= 20.
    {
        const CheckRow dual = checks::rs_dual_route(30, 1e-12);
        const CheckRow zeros = checks::rs_odd_zeros(19, 1e-12);
        const CheckRow even = checks::rs_even_positive(20);
        char buf[160];
        std::snprintf(buf, sizeof buf, "dual %.3e <= 1e-12, odd zeros %.3e <= 1e-12, even min %.3e > 0", dual.value,
                      zeros.value, even.value);
        report(6, "Rogers-Szego facts", dual.pass && zeros.pass && even.pass, buf);
    }

    // 7. q^2 identity (rel 1e-12, k <= 20) and rho_nu_qq vs rho_nu_alpha_q
    //    moment agreement for q > 0 (rel 1e-10).
    {
        const CheckRow ident = checks::q2_identity(20, 1e-12);
        const CheckRow agree = checks::qq_vs_alpha_q_moments(12, 1e-10, 1e-16);
        char buf[128];
        std::snprintf(buf, sizeof buf, "identity %.3e <= 1e-12, measures %.3e <= 1e-10", ident.value, agree.value);
        report(7, "q^2 identity", ident.pass && agree.pass, buf);
    }

    // 8. Vacuum-moment triangle at (-0.4, 0.3): chain recursion, tridiagonal,
    //    and quadrature moments pairwise within 1e-6 for k <= 8.
    {
        const QParams p(-0.4, 0.3);
        const auto tridiag = moments_from_jacobi(mp_jacobi(p, 5), 8);
        double worst = 0.0;
        for (int k = 0; k <= 8; ++k) {
            const double chain = vacuum_moment(p, k);
            const double quad = integrate([k](double x) { return std::pow(x, k); }, p, {}, 400);
            const double tri = tridiag[static_cast<std::size_t>(k)];
            worst = std::max({worst, std::abs(chain - tri), std::abs(chain - quad), std::abs(tri - quad)});
        }
        char buf[128];
        std::snprintf(buf, sizeof buf, "max pairwise diff %.3e <= 1e-06", worst);
        report(8, "vacuum-moment triangle", worst <= 1e-6, buf);
    }

    // 9. t-deformation: moments scale by 1/t for k >= 1 and stay 1 at k = 0,
    //    up to roundoff, t in {1, 1.5, 3}.
    {
        const CheckRow r = checks::t_deform_moments(1e-12);
        char buf[128];
        std::snprintf(buf, sizeof buf, "worst rel %.3e <= 1e-12 (roundoff)", r.value);
        report(9, "t-deformation", r.pass, buf);
    }

    // 10. Limit smoke tests at q = 0.999, beta = 1: scaled Jacobi coefficients
    //     vs (n+2b-1)n/4 and scaled M-diagonal vs n+beta, n <= 10, within 1e-2
    //     (relative).
    {
        const LimitReport rep = scaled_limit_check(1.0, 0.999, 11);
        char buf[128];
        std::snprintf(buf, sizeof buf, "M %.3e, jacobi %.3e <= 1e-02", rep.m_deviation, rep.jacobi_deviation);
        report(10, "limit smoke tests", rep.m_deviation <= 1e-2 && rep.jacobi_deviation <= 1e-2, buf);
    }

    if (g_failures == 0)
        std::printf("all 10 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
