#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aqfock/jacobi.hpp"
#include "aqfock/qcalc.hpp"

// One-mode (alpha,q)-operators on the truncated Bargmann-Fock basis
// Phi_0..Phi_{dim-1}: multiplication Z, Jackson and alpha-deformed Jackson
// derivatives, M_{alpha,q}, q-commutators, and the relation checks.

namespace aqfock {

/// Dense operator on the truncated basis.
using OperatorMatrix = Eigen::MatrixXd;

/// Dense coefficient vector of a polynomial, low degree first.
using PolyCoeffs = std::vector<double>;

/// a+ Phi_n = sqrt(omega_{n+1}) Phi_{n+1}; subdiagonal only.
OperatorMatrix creation(const JacobiSequence& J, int dim);

/// a- Phi_0 = 0, a- Phi_n = sqrt(omega_n) Phi_{n-1}; superdiagonal only.
OperatorMatrix annihilation(const JacobiSequence& J, int dim);

/// Jackson derivative on coefficients: z^n -> [n]_q z^{n-1}.
PolyCoeffs jackson(const PolyCoeffs& coeffs, double q);

/// alpha-deformed Jackson derivative: z^n -> (1 + alpha q^{n-1}) [n]_q z^{n-1}.
PolyCoeffs alpha_jackson(const PolyCoeffs& coeffs, const QParams& params);

/// M_{alpha,q} = I + alpha q^{2N}: diagonal entries 1 + alpha q^{2n}.
OperatorMatrix m_matrix(const QParams& params, int dim);

/// [A,B]_s = AB - sBA.
OperatorMatrix q_commutator(const OperatorMatrix& A, const OperatorMatrix& B, double s);

struct RelationCheck {
    std::string relation;
    double residual;       // max |entry| on the leading (dim-1) block
    double residual_full;  // same over the full matrix (reported only;
                           // the boundary row carries truncation artifacts)
};

struct RelationReport {
    int dim = 0;
    std::vector<RelationCheck> checks;
    double max_residual() const;
};

/// Residuals of [a-,a+]_q = M, [a-,M]_{q^2} = (1-q^2) a-,
/// [M,a+]_{q^2} = (1-q^2) a+, plus [a-,a+]_{q^2} = (1+q) I when alpha = q
/// and [a-,M]_1 = [M,a+]_1 = 0 when alpha = 0. Asserted nowhere; failures
/// are reported, not thrown.
RelationReport verify_relations(const QParams& params, int dim);

/// Exact-rational certification of the same relations in the monomial-basis
/// realization (a+ = Z, a- = D_{alpha,q}, entries rational in alpha, q) for
/// alpha = alpha_num/alpha_den, q = q_num/q_den. True iff every residual
/// entry on the leading block is exactly zero.
bool relations_exact(long long alpha_num, long long alpha_den, long long q_num, long long q_den, int dim);

struct LimitReport {
    double m_deviation;       // max_n |M_diag_n/(1-q^2) - (n+beta)| / (n+beta)
    double jacobi_deviation;  // max_n |omega_n/(4(1-q)) - (n+2b-1)n/4| / ((n+2b-1)n/4)
};

/// q up 1 limit of the alpha = -q^{2 beta} family: compares the scaled
/// M-diagonal against n + beta and the scaled Jacobi coefficients against
/// (n + 2 beta - 1) n / 4, n < dim. Deviations are relative.
LimitReport scaled_limit_check(double beta, double q, int dim);

}  // namespace aqfock
