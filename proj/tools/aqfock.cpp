// aqfock: construct, classify, and verify radial Bargmann representations
// of the (alpha,q)-Gaussian orthogonality measure; emit moment and density
// tables; run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 non-existence verdict,
// 64 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aqfock/density.hpp"
#include "aqfock/fock1.hpp"
#include "aqfock/jacobi.hpp"
#include "aqfock/measure_io.hpp"
#include "aqfock/radial.hpp"
#include "aqfock/suites.hpp"
#include "aqfock/typeb.hpp"

namespace {

constexpr const char* kSchema = "aqfock/1";
constexpr int kExitVerdict = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
    double alpha = 0.0;
    double q = 0.0;
    std::optional<double> t;
    int kmax = 12;
    int dim = 24;
    int n = 3;
    int grid = 41;
    int quad_order = 400;
    double tol = 1e-16;
    int max_terms = 10000;
    double eq_eps = 0.0;
    std::string format = "json";
    std::string output;
    std::string suite = "all";
    bool force = false;
};

aqfock::Precision env_precision() {
    const char* v = std::getenv("AQFOCK_PRECISION");
    return (v && std::string(v) == "extended") ? aqfock::Precision::extended : aqfock::Precision::standard;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// All output goes through a stream chosen by --output.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw CLI::ValidationError("--output", "cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

int cmd_measure(const RunConfig& cfg) {
    const aqfock::QParams params(cfg.alpha, cfg.q);
    const aqfock::TruncationPolicy trunc(cfg.tol, cfg.max_terms);
    const aqfock::ExistenceVerdict verdict = aqfock::classify(params, cfg.eq_eps);
    std::string warning;
    aqfock::DiscreteRadialMeasure mu;
    if (verdict.exists) {
        mu = aqfock::radial_measure(params, trunc, env_precision(), cfg.eq_eps);
    } else if (cfg.force && cfg.q >= 0.0) {
        mu = aqfock::rho_nu_alpha_q(params, trunc, env_precision());
        warning = "forced signed measure; " + verdict.reason;
    } else {
        std::cerr << "no radial Bargmann representation: " << verdict.reason;
        if (cfg.force && cfg.q < 0.0) std::cerr << " (--force unavailable: no signed construction for q < 0)";
        std::cerr << "\n";
        return kExitVerdict;
    }
    if (cfg.t) mu = aqfock::t_deform(mu, *cfg.t);

    Sink sink(cfg.output);
    if (cfg.format == "csv") {
        aqfock::write_csv(sink.stream(), mu);
    } else {
        nlohmann::json j = aqfock::measure_to_json(params, mu);
        j["schema"] = kSchema;
        j["exists"] = verdict.exists;
        j["branch"] = aqfock::to_string(verdict.branch);
        if (!warning.empty()) j["warning"] = warning;
        sink.stream() << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_classify(const RunConfig& cfg) {
    const aqfock::ExistenceVerdict v = aqfock::classify(aqfock::QParams(cfg.alpha, cfg.q), cfg.eq_eps);
    Sink sink(cfg.output);
    if (cfg.format == "csv") {
        sink.stream() << "alpha,q,exists,branch,reason\n"
                      << fmt(cfg.alpha) << ',' << fmt(cfg.q) << ',' << (v.exists ? "true" : "false") << ','
                      << aqfock::to_string(v.branch) << ',' << v.reason << "\n";
    } else {
        nlohmann::json j{{"schema", kSchema}, {"alpha", cfg.alpha},          {"q", cfg.q},
                         {"exists", v.exists}, {"branch", aqfock::to_string(v.branch)}, {"reason", v.reason}};
        sink.stream() << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_moments(const RunConfig& cfg) {
    const aqfock::QParams params(cfg.alpha, cfg.q);
    const auto ms = aqfock::moments_from_jacobi(aqfock::mp_jacobi(params, cfg.kmax / 2 + 1), cfg.kmax);
    Sink sink(cfg.output);
    if (cfg.format == "json") {
        nlohmann::json j{{"schema", kSchema}, {"alpha", cfg.alpha}, {"q", cfg.q}, {"moments", ms}};
        sink.stream() << j.dump(2) << "\n";
        return 0;
    }
    sink.stream() << "k,moment\n";
    for (std::size_t k = 0; k < ms.size(); ++k) sink.stream() << k << ',' << fmt(ms[k]) << "\n";
    return 0;
}

int cmd_density(const RunConfig& cfg, int grid_points) {
    const aqfock::QParams params(cfg.alpha, cfg.q);
    const aqfock::TruncationPolicy trunc(cfg.tol, cfg.max_terms);
    const aqfock::SupportInterval s = aqfock::support_interval(cfg.q);
    Sink sink(cfg.output);
    sink.stream() << "x,density\n";
    const int n = std::max(grid_points, 2);
    for (int i = 1; i <= n; ++i) {
        const double x = s.lo + (s.hi - s.lo) * i / (n + 1);
        sink.stream() << fmt(x) << ',' << fmt(aqfock::nu_density(x, params, trunc)) << "\n";
    }
    return 0;
}

int cmd_typeb(const RunConfig& cfg) {
    const aqfock::QParams params(cfg.alpha, cfg.q);
    if (cfg.n < 1 || cfg.n > 4) throw CLI::ValidationError("--n", "gram rank must be in 1..4");
    const aqfock::Involution J = aqfock::Involution::Identity(1, 1);
    const Eigen::VectorXd f = Eigen::VectorXd::Ones(1);
    Sink sink(cfg.output);
    sink.stream() << "check,k,value,reference,residual\n";
    const aqfock::JacobiSequence jac = aqfock::mp_jacobi(params, cfg.n);
    for (int k = 0; k <= cfg.n; ++k) {
        const aqfock::SimpleTensor fk(static_cast<std::size_t>(k), f);
        const double got = aqfock::aq_gram({fk}, params, J)(0, 0);
        const double want = aqfock::norm_squared(jac, k);
        sink.stream() << "gram_diag," << k << ',' << fmt(got) << ',' << fmt(want) << ',' << fmt(std::abs(got - want))
                      << "\n";
    }
    const int kmax = std::min(2 * cfg.n, 8);
    const auto ms = aqfock::moments_from_jacobi(aqfock::mp_jacobi(params, kmax / 2 + 1), kmax);
    for (int k = 0; k <= kmax; ++k) {
        const double got = aqfock::vacuum_moment(params, k);
        const double want = ms[static_cast<std::size_t>(k)];
        sink.stream() << "vacuum_moment," << k << ',' << fmt(got) << ',' << fmt(want) << ','
                      << fmt(std::abs(got - want)) << "\n";
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg, double amin, double amax, double qmin, double qmax) {
    if (cfg.grid < 2) throw CLI::ValidationError("--grid", "need at least 2 points");
    for (double b : {amin, amax, qmin, qmax})
        if (!(b >= -0.95 && b <= 0.95)) throw CLI::ValidationError("sweep", "grid bounds must lie within [-0.95, 0.95]");
    const aqfock::TruncationPolicy trunc(cfg.tol, cfg.max_terms);
    const aqfock::Precision prec = env_precision();
    Sink sink(cfg.output);
    sink.stream() << "alpha,q,exists,branch,min_weight\n";
    for (int i = 0; i < cfg.grid; ++i) {
        const double alpha = amin + (amax - amin) * i / (cfg.grid - 1);
        for (int j = 0; j < cfg.grid; ++j) {
            const double q = qmin + (qmax - qmin) * j / (cfg.grid - 1);
            const aqfock::QParams p(alpha, q);
            const aqfock::ExistenceVerdict v = aqfock::classify(p, cfg.eq_eps);
            std::string min_weight = "nan";
            if (v.exists || q >= 0.0) {
                const aqfock::DiscreteRadialMeasure mu =
                    v.exists ? aqfock::radial_measure(p, trunc, prec, cfg.eq_eps) : aqfock::rho_nu_alpha_q(p, trunc, prec);
                double mw = std::numeric_limits<double>::infinity();
                for (const auto& a : mu.atoms()) mw = std::min(mw, a.w);
                min_weight = fmt(mw);
            }
            sink.stream() << fmt(alpha) << ',' << fmt(q) << ',' << (v.exists ? "true" : "false") << ','
                          << aqfock::to_string(v.branch) << ',' << min_weight << "\n";
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<aqfock::CheckRow> rows;
    aqfock::SuiteOptions opts;
    opts.dim = cfg.dim;
    opts.n = cfg.n;
    opts.tol = cfg.tol;
    opts.quad_order = cfg.quad_order;
    opts.precision = env_precision();
    try {
        rows = aqfock::run_suite(cfg.suite, opts);
    } catch (const aqfock::UnknownSuiteError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    Sink sink(cfg.output);
    sink.stream() << "check,dim,residual,threshold,status\n";
    bool all_pass = true;
    for (const auto& r : rows) {
        all_pass = all_pass && r.pass;
        sink.stream() << '"' << r.name << "\"," << r.dim << ',' << fmt(r.value) << ',' << fmt(r.threshold) << ','
                      << (r.pass ? "pass" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial Bargmann representations of the (alpha,q)-Gaussian distribution"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_params = [&cfg](CLI::App* sub, bool required = true) {
        auto* a = sub->add_option("--alpha", cfg.alpha, "deformation parameter alpha in (-1,1)");
        auto* q = sub->add_option("--q", cfg.q, "deformation parameter q in (-1,1)");
        if (required) {
            a->required();
            q->required();
        }
        sub->add_option("--tol", cfg.tol, "series truncation tolerance")->capture_default_str();
        sub->add_option("--max-terms", cfg.max_terms, "series term cap")->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", cfg.output, "output path (default: stdout)");
    };

    auto* measure = app.add_subcommand("measure", "emit the radial measure (JSON, or CSV with columns r,w)");
    add_params(measure);
    measure->add_option("--t", cfg.t, "apply the t-deformation (t >= 1)");
    measure->add_flag("--force", cfg.force, "emit the signed measure even when no representation exists (q >= 0)");
    measure->add_option("--eq-eps", cfg.eq_eps, "widen the alpha == q comparison in classify");

    auto* classify = app.add_subcommand("classify", "existence verdict for the radial representation");
    add_params(classify);
    classify->add_option("--eq-eps", cfg.eq_eps, "widen the alpha == q comparison");

    auto* moments = app.add_subcommand("moments", "moment table from the Jacobi tridiagonal (CSV columns k,moment)");
    add_params(moments);
    moments->add_option("--kmax", cfg.kmax, "highest moment order")->check(CLI::Range(0, 200))->capture_default_str();

    int density_grid = 200;
    auto* density = app.add_subcommand("density", "density samples on a uniform interior grid (CSV columns x,density)");
    add_params(density);
    density->add_option("--grid", density_grid, "number of interior sample points")->capture_default_str();

    auto* typeb = app.add_subcommand("typeb", "Gram diagonal and vacuum-moment comparison (CSV columns check,k,value,reference,residual)");
    add_params(typeb);
    typeb->add_option("--n", cfg.n, "tensor rank bound (1..4)")->capture_default_str();

    double amin = -0.95, amax = 0.95, qmin = -0.95, qmax = 0.95;
    auto* sweep = app.add_subcommand("sweep", "existence map over an (alpha,q) grid (CSV columns alpha,q,exists,branch,min_weight)");
    sweep->add_option("--grid", cfg.grid, "points per axis")->capture_default_str();
    sweep->add_option("--alpha-min", amin)->capture_default_str();
    sweep->add_option("--alpha-max", amax)->capture_default_str();
    sweep->add_option("--q-min", qmin)->capture_default_str();
    sweep->add_option("--q-max", qmax)->capture_default_str();
    sweep->add_option("--tol", cfg.tol, "series truncation tolerance")->capture_default_str();
    sweep->add_option("--max-terms", cfg.max_terms, "series term cap")->capture_default_str();
    sweep->add_option("--output", cfg.output, "output path (default: stdout)");
    sweep->add_option("--eq-eps", cfg.eq_eps, "widen the alpha == q comparison");

    auto* verify = app.add_subcommand("verify", "run a verification suite, nonzero exit on failure (CSV columns check,dim,residual,threshold,status)");
    verify->add_option("--suite", cfg.suite, "qcalc|radial|density|fock1|typeb|all")->capture_default_str();
    verify->add_option("--dim", cfg.dim, "operator truncation dimension")->capture_default_str();
    verify->add_option("--n", cfg.n, "type-B rank bound")->capture_default_str();
    verify->add_option("--tol", cfg.tol, "series truncation tolerance")->capture_default_str();
    verify->add_option("--quad-order", cfg.quad_order, "quadrature order")->capture_default_str();
    verify->add_option("--output", cfg.output, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (measure->parsed()) {
            if (cfg.t && !(*cfg.t >= 1.0)) throw CLI::ValidationError("--t", "t must be >= 1");
            return cmd_measure(cfg);
        }
        if (classify->parsed()) return cmd_classify(cfg);
        if (moments->parsed()) return cmd_moments(cfg);
        if (density->parsed()) return cmd_density(cfg, density_grid);
        if (typeb->parsed()) return cmd_typeb(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg, amin, amax, qmin, qmax);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
