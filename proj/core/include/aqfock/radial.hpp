#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "aqfock/qcalc.hpp"

// Discrete (signed) radial measure algebra and the constructions
// rho_{alpha,q}, rho_{nu_{alpha,q}}, rho_{nu_{q,q}}, the existence
// classifier, and the t-deformation.

namespace aqfock {

struct RadialAtom {
    double r;  // position, >= 0
    double w;  // signed weight
};

struct TruncationMeta {
    double tol = 0.0;
    int terms = 0;
    double residual = 0.0;  // bound on the dropped tail weight mass
};

/// Finite list of weighted atoms on [0, inf). Canonical form: positions
/// strictly increasing, coincident positions (within 1e-14) merged by
/// summing weights, negligible weights (|w| < 1e-300) dropped. Immutable
/// after construction.
class DiscreteRadialMeasure {
  public:
    DiscreteRadialMeasure() = default;

    static DiscreteRadialMeasure from_atoms(std::vector<RadialAtom> atoms, TruncationMeta meta = {});

    const std::vector<RadialAtom>& atoms() const { return atoms_; }
    const TruncationMeta& truncation() const { return meta_; }
    std::size_t size() const { return atoms_.size(); }

    bool operator==(const DiscreteRadialMeasure& other) const {
        if (atoms_.size() != other.atoms_.size()) return false;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (atoms_[i].r != other.atoms_[i].r || atoms_[i].w != other.atoms_[i].w) return false;
        return true;
    }

  private:
    std::vector<RadialAtom> atoms_;
    TruncationMeta meta_;
};

/// Even moment int r^{2k} dmu = sum_i w_i r_i^{2k}. two_k must be even.
double moment(const DiscreteRadialMeasure& mu, int two_k);

/// Push-forward by x -> t x, t > 0.
DiscreteRadialMeasure dilate(const DiscreteRadialMeasure& mu, double t);

/// Multiplicative (Mellin) convolution: atoms at all products r_i s_j with
/// weights w_i v_j; moments multiply.
DiscreteRadialMeasure mellin_convolve(const DiscreteRadialMeasure& mu, const DiscreteRadialMeasure& nu);

/// True iff every weight >= -tol.
bool is_nonnegative(const DiscreteRadialMeasure& mu, double tol);

/// t-deformation (1 - 1/t) delta_0 + (1/t) mu, t >= 1.
DiscreteRadialMeasure t_deform(const DiscreteRadialMeasure& mu, double t);

enum class Branch { Q_ZERO, Q_POS_ALPHA_LT, ALPHA_EQ_Q, NONE };

const char* to_string(Branch b);

/// Existence verdict for the radial Bargmann representation of nu_{alpha,q}:
/// it exists iff (q >= 0 and alpha <= q) or (alpha = q != 0); branch selects
/// the matching constructor.
struct ExistenceVerdict {
    bool exists;
    Branch branch;
    std::string reason;
};

/// alpha_eq_q_eps widens the alpha == q comparison; the default 0 compares
/// exactly.
ExistenceVerdict classify(const QParams& params, double alpha_eq_q_eps = 0.0);

/// Thrown by radial_measure when no radial representation exists.
struct NonexistenceError : std::domain_error {
    ExistenceVerdict verdict;
    explicit NonexistenceError(ExistenceVerdict v)
        : std::domain_error("no radial Bargmann representation: " + v.reason), verdict(std::move(v)) {}
};

/// Internal accumulation precision for the atom series.
enum class Precision { standard, extended };

/// Signed measure with moments (-alpha;q)_k: atoms at q^{n/2} with weights
/// (-alpha;q)_inf (-alpha)^n/(q;q)_n. Requires q in [0,1); at q = 0 the
/// mass at the origin collapses to (1+alpha) delta_1 - alpha delta_0.
DiscreteRadialMeasure rho_alpha_q(const QParams& params, const TruncationPolicy& trunc = {},
                                  Precision prec = Precision::standard);

/// Signed measure with moments (-alpha;q)_k [k]_q!: for q > 0, atoms at
/// (1-q)^{-1/2} q^{n/2} with weights (-alpha,q;q)_inf q^n/(q;q)_n
/// h_n(-alpha/q | q); for q = 0, -alpha delta_0 + (1+alpha) delta_1.
DiscreteRadialMeasure rho_nu_alpha_q(const QParams& params, const TruncationPolicy& trunc = {},
                                     Precision prec = Precision::standard);

/// Nonnegative measure for alpha = q != 0: atoms at (1-q)^{-1/2} |q|^n with
/// weights (q^2;q^2)_inf q^{2n}/(q^2;q^2)_n; moments (1+q)^k [k]_{q^2}!
/// = (-q;q)_k [k]_q!.
DiscreteRadialMeasure rho_nu_qq(double q, const TruncationPolicy& trunc = {},
                                Precision prec = Precision::standard);

/// The radial Bargmann representation of nu_{alpha,q}, dispatching on the
/// classification branch. Throws NonexistenceError when none exists.
DiscreteRadialMeasure radial_measure(const QParams& params, const TruncationPolicy& trunc = {},
                                     Precision prec = Precision::standard,
                                     double alpha_eq_q_eps = 0.0);

}  // namespace aqfock
