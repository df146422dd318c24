#include "aqfock/fock1.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace aqfock {

OperatorMatrix creation(const JacobiSequence& J, int dim) {
    if (dim < 1 || J.levels() < dim) throw std::invalid_argument("creation: need omega_1..omega_dim");
    OperatorMatrix a = OperatorMatrix::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) a(n + 1, n) = std::sqrt(J.omega[static_cast<std::size_t>(n)]);
    return a;
}

OperatorMatrix annihilation(const JacobiSequence& J, int dim) {
    if (dim < 1 || J.levels() < dim) throw std::invalid_argument("annihilation: need omega_1..omega_dim");
    OperatorMatrix a = OperatorMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(J.omega[static_cast<std::size_t>(n) - 1]);
    return a;
}

PolyCoeffs jackson(const PolyCoeffs& coeffs, double q) {
    if (coeffs.size() <= 1) return {};
    PolyCoeffs out(coeffs.size() - 1);
    for (std::size_t n = 1; n < coeffs.size(); ++n)
        out[n - 1] = q_number(static_cast<int>(n), q) * coeffs[n];
    return out;
}

PolyCoeffs alpha_jackson(const PolyCoeffs& coeffs, const QParams& params) {
    if (coeffs.size() <= 1) return {};
    PolyCoeffs out(coeffs.size() - 1);
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        const double w = (1.0 + params.alpha * std::pow(params.q, static_cast<int>(n) - 1)) *
                         q_number(static_cast<int>(n), params.q);
        out[n - 1] = w * coeffs[n];
    }
    return out;
}

OperatorMatrix m_matrix(const QParams& params, int dim) {
    if (dim < 1) throw std::invalid_argument("m_matrix: dim must be positive");
    OperatorMatrix m = OperatorMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) m(n, n) = 1.0 + params.alpha * std::pow(params.q, 2 * n);
    return m;
}

OperatorMatrix q_commutator(const OperatorMatrix& A, const OperatorMatrix& B, double s) {
    if (A.rows() != B.rows() || A.cols() != B.cols() || A.rows() != A.cols())
        throw std::invalid_argument("q_commutator: dimension mismatch");
    return A * B - s * B * A;
}

double RelationReport::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
}

namespace {

RelationCheck residual_of(std::string name, const OperatorMatrix& R) {
    const int d = static_cast<int>(R.rows());
    const int lead = d - 1;
    return {std::move(name), R.topLeftCorner(lead, lead).cwiseAbs().maxCoeff(), R.cwiseAbs().maxCoeff()};
}

}  // namespace

RelationReport verify_relations(const QParams& params, int dim) {
    if (dim < 3) throw std::invalid_argument("verify_relations: dim must be >= 3");
    const JacobiSequence J = mp_jacobi(params, dim);
    const OperatorMatrix ap = creation(J, dim);
    const OperatorMatrix am = annihilation(J, dim);
    const OperatorMatrix M = m_matrix(params, dim);
    const double q = params.q, q2 = q * q;

    RelationReport rep;
    rep.dim = dim;
    rep.checks.push_back(residual_of("[a-,a+]_q - M", q_commutator(am, ap, q) - M));
    rep.checks.push_back(residual_of("[a-,M]_q2 - (1-q2)a-", q_commutator(am, M, q2) - (1.0 - q2) * am));
    rep.checks.push_back(residual_of("[M,a+]_q2 - (1-q2)a+", q_commutator(M, ap, q2) - (1.0 - q2) * ap));
    if (params.alpha == params.q) {
        OperatorMatrix I = OperatorMatrix::Identity(dim, dim);
        rep.checks.push_back(residual_of("[a-,a+]_q2 - (1+q)I", q_commutator(am, ap, q2) - (1.0 + q) * I));
    }
    if (params.alpha == 0.0) {
        rep.checks.push_back(residual_of("[a-,M]_1", q_commutator(am, M, 1.0)));
        rep.checks.push_back(residual_of("[M,a+]_1", q_commutator(M, ap, 1.0)));
    }
    return rep;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix zeros(int d) { return RatMatrix(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d))); }

RatMatrix matmul(const RatMatrix& A, const RatMatrix& B) {
    const int d = static_cast<int>(A.size());
    RatMatrix C = zeros(d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == 0) continue;
            for (int j = 0; j < d; ++j)
                C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        }
    return C;
}

bool leading_block_zero(const RatMatrix& R) {
    const int d = static_cast<int>(R.size());
    for (int i = 0; i + 1 < d; ++i)
        for (int j = 0; j + 1 < d; ++j)
            if (R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) return false;
    return true;
}

}  // namespace

bool relations_exact(long long alpha_num, long long alpha_den, long long q_num, long long q_den, int dim) {
    if (dim < 3) throw std::invalid_argument("relations_exact: dim must be >= 3");
    if (alpha_den == 0 || q_den == 0) throw std::invalid_argument("relations_exact: zero denominator");
    const Rational alpha(alpha_num, alpha_den), q(q_num, q_den);

    // Monomial-basis realization: Z has subdiagonal 1, D_{alpha,q} has
    // superdiagonal omega_n = (1 + alpha q^{n-1})[n]_q; similarity-equivalent
    // to the Phi-basis relations with rational entries.
    RatMatrix Z = zeros(dim), D = zeros(dim), M = zeros(dim), I = zeros(dim);
    Rational qn1 = 1, qnum = 0, qpow = 1, q2n = 1;
    for (int n = 0; n < dim; ++n) {
        I[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = 1;
        M[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = 1 + alpha * q2n;
        q2n *= q * q;
    }
    for (int n = 0; n + 1 < dim; ++n) Z[static_cast<std::size_t>(n) + 1][static_cast<std::size_t>(n)] = 1;
    for (int n = 1; n < dim; ++n) {
        qnum += qpow;  // [n]_q
        qpow *= q;
        D[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n)] = (1 + alpha * qn1) * qnum;
        qn1 *= q;
    }

    auto qcomm = [&](const RatMatrix& A, const RatMatrix& B, const Rational& s) {
        RatMatrix AB = matmul(A, B), BA = matmul(B, A);
        for (std::size_t i = 0; i < AB.size(); ++i)
            for (std::size_t j = 0; j < AB.size(); ++j) AB[i][j] -= s * BA[i][j];
        return AB;
    };
    auto minus = [&](RatMatrix A, const RatMatrix& B, const Rational& s) {
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A.size(); ++j) A[i][j] -= s * B[i][j];
        return A;
    };

    const Rational q2 = q * q;
    bool ok = leading_block_zero(minus(qcomm(D, Z, q), M, 1));
    ok = ok && leading_block_zero(minus(qcomm(D, M, q2), D, 1 - q2));
    ok = ok && leading_block_zero(minus(qcomm(M, Z, q2), Z, 1 - q2));
    if (alpha == q) ok = ok && leading_block_zero(minus(qcomm(D, Z, q2), I, 1 + q));
    return ok;
}

LimitReport scaled_limit_check(double beta, double q, int dim) {
    if (!(beta > 0.0)) throw std::invalid_argument("scaled_limit_check: beta must be positive");
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("scaled_limit_check: q must be in (0,1)");
    LimitReport rep{0.0, 0.0};
    for (int n = 0; n < dim; ++n) {
        const double scaled = (1.0 - std::pow(q, 2.0 * beta + 2.0 * n)) / (1.0 - q * q);
        const double target = n + beta;
        rep.m_deviation = std::max(rep.m_deviation, std::abs(scaled - target) / target);
    }
    for (int n = 1; n < dim; ++n) {
        const double omega = (1.0 - std::pow(q, 2.0 * beta + n - 1.0)) * q_number(n, q);
        const double scaled = omega / (4.0 * (1.0 - q));
        const double target = 0.25 * (n + 2.0 * beta - 1.0) * n;
        rep.jacobi_deviation = std::max(rep.jacobi_deviation, std::abs(scaled - target) / target);
    }
    return rep;
}

}  // namespace aqfock
