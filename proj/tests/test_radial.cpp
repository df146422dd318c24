#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "aqfock/measure_io.hpp"
#include "aqfock/radial.hpp"

using namespace aqfock;

namespace {

double target_moment(double alpha, double q, int k) {
    return q_pochhammer(-alpha, q, k) * q_factorial(k, q);
}

DiscreteRadialMeasure delta(double r) { return DiscreteRadialMeasure::from_atoms({{r, 1.0}}); }

}  // namespace

TEST_CASE("canonicalization") {
    const auto mu = DiscreteRadialMeasure::from_atoms({{1.0, 0.25}, {0.0, 0.5}, {1.0 + 1e-15, 0.25}, {2.0, 0.0}});
    REQUIRE(mu.size() == 2);  // merged pair at 1, dropped zero weight at 2
    CHECK(mu.atoms()[0].r == 0.0);
    CHECK(mu.atoms()[1].r == 1.0);
    CHECK(mu.atoms()[1].w == doctest::Approx(0.5));
    CHECK_THROWS_AS(DiscreteRadialMeasure::from_atoms({{-1.0, 0.5}}), std::domain_error);
}

TEST_CASE("moment") {
    CHECK(moment(delta(1.0), 0) == 1.0);
    for (int k = 1; k <= 6; ++k) CHECK(moment(delta(1.0), 2 * k) == 1.0);
    CHECK_THROWS_AS(moment(delta(1.0), 3), std::invalid_argument);

    // rho_{nu_{alpha,0}} = -alpha delta_0 + (1+alpha) delta_1 at alpha = -0.5
    const auto mu = rho_nu_alpha_q(QParams(-0.5, 0.0));
    for (int k = 1; k <= 6; ++k) CHECK(moment(mu, 2 * k) == doctest::Approx(0.5).epsilon(1e-15));

    const auto nu = rho_nu_alpha_q(QParams(-0.5, 0.5));
    CHECK(std::abs(moment(nu, 6) - target_moment(-0.5, 0.5, 3)) <= 1e-10);
}

TEST_CASE("dilate") {
    const auto d2 = dilate(delta(1.0), 2.0);
    CHECK(d2.atoms()[0].r == 2.0);
    CHECK(dilate(rho_nu_alpha_q(QParams(-0.3, 0.4)), 1.0) == rho_nu_alpha_q(QParams(-0.3, 0.4)));
    CHECK_THROWS_AS(dilate(delta(1.0), 0.0), std::domain_error);

    // D_{(1-q)^{-1/2}}(rho_{-q,q}) has moments [k]_q!
    const double q = 0.5;
    const auto mu = dilate(rho_alpha_q(QParams(-q, q)), 1.0 / std::sqrt(1.0 - q));
    for (int k = 0; k <= 10; ++k) {
        const double want = q_factorial(k, q);
        CHECK(std::abs(moment(mu, 2 * k) - want) <= 1e-12 * std::max(1.0, want));
    }
}

TEST_CASE("mellin_convolve") {
    const auto dab = mellin_convolve(delta(0.5), delta(3.0));
    REQUIRE(dab.size() == 1);
    CHECK(dab.atoms()[0].r == doctest::Approx(1.5));

    const auto mu = rho_nu_alpha_q(QParams(-0.5, 0.5));
    CHECK(mellin_convolve(mu, delta(1.0)) == mu);

    // moments multiply, random atom lists
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> pos(0.0, 3.0), wt(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<RadialAtom> a, b;
        for (int i = 0; i < 5; ++i) a.push_back({pos(rng), wt(rng)});
        for (int i = 0; i < 4; ++i) b.push_back({pos(rng), wt(rng)});
        const auto ma = DiscreteRadialMeasure::from_atoms(a);
        const auto mb = DiscreteRadialMeasure::from_atoms(b);
        const auto mc = mellin_convolve(ma, mb);
        for (int k = 0; k <= 6; ++k) {
            const double lhs = moment(mc, 2 * k);
            const double rhs = moment(ma, 2 * k) * moment(mb, 2 * k);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("rho_alpha_q") {
    CHECK_THROWS_AS(rho_alpha_q(QParams(0.3, -0.2)), std::domain_error);

    SUBCASE("q = 0 collapses to two atoms") {
        const auto mu = rho_alpha_q(QParams(-0.5, 0.0));
        REQUIRE(mu.size() == 2);
        CHECK(mu.atoms()[0].r == 0.0);
        CHECK(mu.atoms()[0].w == doctest::Approx(0.5));
        CHECK(mu.atoms()[1].r == 1.0);
        CHECK(mu.atoms()[1].w == doctest::Approx(0.5));
    }
    SUBCASE("moments are (-alpha;q)_k") {
        const auto mu = rho_alpha_q(QParams(0.4, 0.6));
        CHECK(moment(mu, 0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(moment(mu, 4) == doctest::Approx(1.4 * 1.24).epsilon(1e-12));  // (-0.4;0.6)_2
        for (int k = 0; k <= 10; ++k) {
            const double want = q_pochhammer(-0.4, 0.6, k);
            CHECK(std::abs(moment(mu, 2 * k) - want) <= 1e-12 * std::max(1.0, want));
        }
    }
}

TEST_CASE("rho_nu_alpha_q") {
    CHECK_THROWS_AS(rho_nu_alpha_q(QParams(0.3, -0.2)), std::domain_error);

    SUBCASE("alpha = 0 is the radial q-Gaussian with moments [k]_q!") {
        const auto mu = rho_nu_alpha_q(QParams(0.0, 0.4));
        for (int k = 0; k <= 12; ++k) {
            const double want = q_factorial(k, 0.4);
            CHECK(std::abs(moment(mu, 2 * k) - want) <= 1e-10 * std::max(1.0, want));
        }
    }
    SUBCASE("closed-form moments at (-0.5, 0.5)") {
        const auto mu = rho_nu_alpha_q(QParams(-0.5, 0.5));
        for (int k = 0; k <= 12; ++k) {
            const double want = target_moment(-0.5, 0.5, k);
            CHECK(std::abs(moment(mu, 2 * k) - want) <= 1e-10 * std::max(1.0, want));
        }
    }
    SUBCASE("total mass is 1") {
        for (auto [alpha, q] : {std::pair{-0.9, 0.9}, {0.9, 0.9}, {0.5, 0.2}, {-0.5, 0.0}})
            CHECK(std::abs(moment(rho_nu_alpha_q(QParams(alpha, q)), 0) - 1.0) <= 1e-10);
    }
    SUBCASE("factorization through the Mellin convolution, atom by atom") {
        for (auto [alpha, q] : {std::pair{-0.5, 0.5}, {0.3, 0.6}}) {
            const TruncationPolicy trunc(1e-12);
            const auto direct = rho_nu_alpha_q(QParams(alpha, q), trunc);
            const auto conv = mellin_convolve(rho_alpha_q(QParams(alpha, q), trunc),
                                              dilate(rho_alpha_q(QParams(-q, q), trunc), 1.0 / std::sqrt(1.0 - q)));
            auto sig = [](const DiscreteRadialMeasure& m) {
                std::vector<RadialAtom> out;
                for (const auto& a : m.atoms())
                    if (std::abs(a.w) > 1e-10) out.push_back(a);
                return out;
            };
            const auto da = sig(direct), ca = sig(conv);
            REQUIRE(da.size() == ca.size());
            for (std::size_t i = 0; i < da.size(); ++i) {
                CHECK(std::abs(da[i].r - ca[i].r) <= 1e-12);
                CHECK(std::abs(da[i].w - ca[i].w) <= 1e-10);
            }
        }
    }
}

TEST_CASE("rho_nu_qq") {
    CHECK_THROWS_AS(rho_nu_qq(0.0), std::domain_error);

    SUBCASE("second moment is 1 + q") {
        for (double q : {-0.4, 0.3, 0.8}) CHECK(moment(rho_nu_qq(q), 2) == doctest::Approx(1.0 + q).epsilon(1e-10));
    }
    SUBCASE("moments (-q;q)_k [k]_q! for q < 0") {
        const double q = -0.4;
        const auto mu = rho_nu_qq(q);
        for (int k = 0; k <= 12; ++k) {
            const double want = target_moment(q, q, k);
            CHECK(std::abs(moment(mu, 2 * k) - want) <= 1e-10 * std::max(1.0, want));
        }
        for (const auto& a : mu.atoms()) CHECK(a.w >= 0.0);
    }
    SUBCASE("agrees with rho_nu_alpha_q on the diagonal for q > 0") {
        for (double q : {0.2, 0.5, 0.8}) {
            const auto a = rho_nu_qq(q);
            const auto b = rho_nu_alpha_q(QParams(q, q));
            for (int k = 0; k <= 12; ++k) {
                const double ma = moment(a, 2 * k), mb = moment(b, 2 * k);
                CHECK(std::abs(ma - mb) <= 1e-10 * std::max(1.0, std::abs(ma)));
            }
        }
    }
}

TEST_CASE("classify") {
    auto check = [](double a, double q, bool exists, Branch branch) {
        const ExistenceVerdict v = classify(QParams(a, q));
        CHECK(v.exists == exists);
        CHECK(v.branch == branch);
        CHECK((v.branch == Branch::NONE) == !v.exists);
    };
    check(0.5, 0.2, false, Branch::NONE);
    check(-0.5, 0.5, true, Branch::Q_POS_ALPHA_LT);
    check(-0.3, -0.3, true, Branch::ALPHA_EQ_Q);
    check(0.3, 0.3, true, Branch::ALPHA_EQ_Q);
    check(0.0, 0.0, true, Branch::Q_ZERO);
    check(-0.9, 0.0, true, Branch::Q_ZERO);
    check(0.1, 0.0, false, Branch::NONE);
    check(-0.2, -0.4, false, Branch::NONE);

    // epsilon override for the diagonal
    CHECK(classify(QParams(0.3 + 1e-12, 0.3)).exists == false);
    CHECK(classify(QParams(0.3 + 1e-12, 0.3), 1e-9).branch == Branch::ALPHA_EQ_Q);
}

TEST_CASE("radial_measure dispatch") {
    CHECK(radial_measure(QParams(0.0, 0.0)) == delta(1.0));
    CHECK_THROWS_AS(radial_measure(QParams(0.5, 0.2)), NonexistenceError);
    // branch ALPHA_EQ_Q uses the manifestly nonnegative construction
    const auto mu = radial_measure(QParams(0.9, 0.9));
    CHECK(is_nonnegative(mu, 0.0));
    for (int k = 0; k <= 12; ++k) {
        const double want = target_moment(0.9, 0.9, k);
        CHECK(std::abs(moment(mu, 2 * k) - want) <= 1e-8 * std::max(1.0, want));
    }
}

TEST_CASE("weights stay finite at extreme parameter corners") {
    // large |alpha|/q makes the unscaled Rogers-Szego values overflow long
    // before the weights become negligible; the scaled recurrence must not.
    for (auto [alpha, q] : {std::pair{0.95, 0.0475}, {0.95, 0.01}, {-0.95, 0.01}, {0.95, 0.9025}}) {
        const auto mu = rho_nu_alpha_q(QParams(alpha, q), TruncationPolicy(1e-16));
        for (const auto& a : mu.atoms()) CHECK(std::isfinite(a.w));
        CHECK(std::isfinite(mu.truncation().residual));
        CHECK(std::abs(moment(mu, 0) - 1.0) <= 1e-10);
    }
}

TEST_CASE("moment target holds across the existence region") {
    // sample of accepted parameters from all three branches
    const TruncationPolicy trunc(1e-18);
    for (double alpha = -0.9; alpha < 0.95; alpha += 0.3)
        for (double q = -0.9; q < 0.95; q += 0.3) {
            QParams p(alpha, q);
            if (!classify(p).exists) continue;
            const auto mu = radial_measure(p, trunc);
            for (int k = 0; k <= 12; ++k) {
                const double want = target_moment(alpha, q, k);
                CHECK(std::abs(moment(mu, 2 * k) - want) <= 1e-8 * std::max(1.0, std::abs(want)));
            }
        }
    for (double q : {-0.6, -0.3, 0.45, 0.9}) {  // the diagonal branch explicitly
        const auto mu = radial_measure(QParams(q, q), trunc);
        for (int k = 0; k <= 12; ++k) {
            const double want = target_moment(q, q, k);
            CHECK(std::abs(moment(mu, 2 * k) - want) <= 1e-8 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("is_nonnegative") {
    CHECK(is_nonnegative(delta(1.0), 0.0));
    CHECK_FALSE(is_nonnegative(rho_nu_alpha_q(QParams(0.5, 0.2)), 1e-12));
    CHECK(is_nonnegative(rho_nu_alpha_q(QParams(-0.5, 0.5)), 1e-12));
}

TEST_CASE("t_deform") {
    const auto mu = rho_nu_alpha_q(QParams(-0.5, 0.5));
    CHECK(t_deform(mu, 1.0) == mu);
    CHECK_THROWS_AS(t_deform(mu, 0.5), std::domain_error);

    SUBCASE("Kesten radial measure") {
        const double t = 2.5;
        const auto kappa = t_deform(delta(std::sqrt(t)), t);
        REQUIRE(kappa.size() == 2);
        CHECK(kappa.atoms()[0].r == 0.0);
        CHECK(kappa.atoms()[0].w == doctest::Approx(1.0 - 1.0 / t));
        CHECK(kappa.atoms()[1].r == doctest::Approx(std::sqrt(t)));
        CHECK(kappa.atoms()[1].w == doctest::Approx(1.0 / t));
    }
    SUBCASE("moments halve at t = 2") {
        const auto nu = t_deform(mu, 2.0);
        CHECK(moment(nu, 0) == doctest::Approx(1.0).epsilon(1e-12));
        for (int k = 1; k <= 12; ++k)
            CHECK(moment(nu, 2 * k) == doctest::Approx(0.5 * moment(mu, 2 * k)).epsilon(1e-12));
    }
    SUBCASE("merges with an existing origin atom") {
        const auto nu = t_deform(radial_measure(QParams(-0.5, 0.0)), 2.0);
        REQUIRE(nu.size() == 2);
        CHECK(nu.atoms()[0].w == doctest::Approx(0.5 + 0.25));  // (1 - 1/t) + (-alpha)/t
    }
}

// Proof-device fixture: the signed measure supported on q^n/(1-q) for q < 0,
// whose k-th (not 2k-th) moments reproduce (-alpha;q)_k [k]_q!. Its support
// leaves [0, inf), which is what rules out a radial representation there.
TEST_CASE("non-existence device for q < 0 has negative support points") {
    const double alpha = 0.3, q = -0.5;
    const double c = q_pochhammer_inf(-alpha, q) * q_pochhammer_inf(q, q);
    std::vector<std::pair<double, double>> atoms;  // (position, weight), position may be < 0
    for (int n = 0; n < 200; ++n) {
        const double w = c * std::pow(q, n) / q_pochhammer(q, q, n) * rogers_szego_rec(n, -alpha / q, q);
        atoms.emplace_back(std::pow(q, n) / (1.0 - q), w);
    }
    bool has_negative_position = false;
    for (const auto& [r, w] : atoms) has_negative_position = has_negative_position || r < 0.0;
    CHECK(has_negative_position);
    for (int k = 0; k <= 8; ++k) {
        double mk = 0.0;
        for (const auto& [r, w] : atoms) mk += w * std::pow(r, k);
        const double want = target_moment(alpha, q, k);
        CHECK(std::abs(mk - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("JSON round-trip and CSV emission") {
    const QParams p(-0.5, 0.5);
    const auto mu = rho_nu_alpha_q(p);
    const nlohmann::json j = measure_to_json(p, mu);
    QParams back(0.0, 0.0);
    const auto parsed = measure_from_json(j, &back);
    CHECK(parsed == mu);
    CHECK(back.alpha == p.alpha);
    CHECK(back.q == p.q);
    CHECK(j.at("truncation").at("terms").get<int>() == mu.truncation().terms);

    std::ostringstream os;
    write_csv(os, mu);
    const std::string s = os.str();
    CHECK(s.rfind("r,w\n", 0) == 0);
    double prev = -1.0;
    std::istringstream is(s.substr(4));
    std::string line;
    while (std::getline(is, line)) {
        const double r = std::stod(line.substr(0, line.find(',')));
        CHECK(r > prev);
        prev = r;
    }
}
