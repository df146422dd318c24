#pragma once

#include <string>
#include <vector>

#include "aqfock/radial.hpp"

// Named verification suites over the library's own identities: each check
// returns the worst observed residual together with the threshold it is
// held to. Used by the CLI `verify` subcommand and by the acceptance
// runner.

namespace aqfock {

struct CheckRow {
    std::string name;
    int dim = 0;          // matrix/tensor dimension where meaningful
    double value = 0.0;   // observed residual / count
    double threshold = 0.0;
    bool pass = false;
};

struct SuiteOptions {
    int dim = 24;         // fock1 truncation dimension
    int n = 4;            // typeb group rank
    double tol = 1e-16;   // series truncation
    int quad_order = 400;
    Precision precision = Precision::standard;
};

struct UnknownSuiteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// suite in {qcalc, radial, density, fock1, typeb, all}.
std::vector<CheckRow> run_suite(const std::string& suite, const SuiteOptions& opts = {});

std::vector<std::string> suite_names();

namespace checks {

// qcalc
CheckRow rs_dual_route(int n_max, double rel_tol);
CheckRow rs_odd_zeros(int n_max, double abs_tol);
CheckRow rs_even_positive(int n_max);
CheckRow qfactorial_vs_pochhammer(int k_max, double rel_tol);
CheckRow pochhammer_splitting(double rel_tol);
CheckRow pochhammer_limit(double q, double abs_tol);

// radial
CheckRow moment_reproduction(int k_max, double rel_tol, double trunc_tol, Precision prec);
CheckRow dichotomy_agreement(int grid_points, double trunc_tol);
CheckRow dichotomy_negative_witness(int grid_points, double trunc_tol);
CheckRow q2_identity(int k_max, double rel_tol);
CheckRow qq_vs_alpha_q_moments(int k_max, double rel_tol, double trunc_tol);
CheckRow t_deform_moments(double rel_tol);
CheckRow factorization_atomwise(double tol);

// density
CheckRow density_normalization(int quad_order, double tol);
CheckRow orthogonality(int max_degree, int quad_order, double tol);
CheckRow quadrature_moment_agreement(int k_max, int quad_order, double tol);
CheckRow density_nonnegative(int grid_points);
CheckRow qgaussian_match(double q, double tol);

// fock1
std::vector<CheckRow> relation_residuals(int dim, double tol);
CheckRow relations_rational(int dim);
CheckRow scaled_limit(double beta, double q, int n_max, double rel_tol);
CheckRow alpha_jackson_realizes_annihilation(int dim, double tol);

// typeb
CheckRow group_sizes(int n_max);
CheckRow braid_relations(int n_max);
CheckRow length_additivity(int n_max);
CheckRow gram_norms(int n_max, double tol);
CheckRow vacuum_chain_vs_tridiagonal(double rel_tol);
CheckRow vacuum_vs_quadrature(int quad_order, double tol);
CheckRow commutation(int d, int rank, double tol);

}  // namespace checks

}  // namespace aqfock
