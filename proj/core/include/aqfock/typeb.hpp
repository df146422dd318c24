#pragma once

#include <vector>

#include <Eigen/Dense>

#include "aqfock/qcalc.hpp"

// Brute-force Coxeter group of type B: enumeration of Sigma_n with the
// (l1, l2) length statistics, tensor actions, the (alpha,q)-inner product
// Gram computation, and cross-validation of Fock-space norms and
// commutation relations.

namespace aqfock {

/// Element of Sigma_n: a bijection sigma of {+-1..+-n} with
/// sigma(-k) = -sigma(k), stored through the images of 1..n.
class SignedPermutation {
  public:
    explicit SignedPermutation(std::vector<int> images);
    static SignedPermutation identity(int n);
    /// pi_0 = (1,-1) for i = 0, pi_i = (i, i+1) for i >= 1.
    static SignedPermutation generator(int n, int i);

    int n() const { return static_cast<int>(images_.size()); }
    /// sigma(k) for k in {+-1..+-n}.
    int operator()(int k) const;
    /// (*this) o other.
    SignedPermutation compose(const SignedPermutation& other) const;
    const std::vector<int>& images() const { return images_; }

    bool operator==(const SignedPermutation&) const = default;
    auto operator<=>(const SignedPermutation&) const = default;

  private:
    std::vector<int> images_;
};

struct GroupElement {
    SignedPermutation sigma;
    int l1;                 // pi_0 count in a reduced word
    int l2;                 // pi_{i>=1} count in a reduced word
    std::vector<int> word;  // a reduced word from the BFS (generator indices)
};

struct GroupTable {
    int n = 0;
    std::vector<GroupElement> elements;  // BFS order, identity first

    const GroupElement& find(const SignedPermutation& sigma) const;
};

/// BFS over the generators from the identity; (l1, l2) assigned at first
/// visit. Supports n = 1..5 (2^n n! elements).
GroupTable enumerate_group(int n);

/// Self-adjoint involution on the one-particle space R^d; must satisfy
/// J = J^T and J^2 = I.
using Involution = Eigen::MatrixXd;

void validate_involution(const Involution& J);

/// A simple tensor f_1 (x) ... (x) f_n, each factor in R^d.
using SimpleTensor = std::vector<Eigen::VectorXd>;

/// Dense coordinates of a rank-n tensor over the basis e_{t_1}(x)...(x)e_{t_n},
/// linear index sum_j t_j d^{n-j} (slot 1 most significant).
Eigen::VectorXd basis_tensor(const std::vector<int>& index, int d);

/// Action of sigma on a dense rank-n tensor: pi_0 applies J to slot 1,
/// pi_i swaps slots i, i+1; general sigma applied through its BFS word.
Eigen::VectorXd act(const SignedPermutation& sigma, const Eigen::VectorXd& tensor, int d, const Involution& J);
Eigen::VectorXd act(const SignedPermutation& sigma, const std::vector<int>& index, int d, const Involution& J);

/// Gram matrix of the (alpha,q)-inner product over simple tensors of a
/// common rank n:
///   <f, g>_{alpha,q} = sum_{sigma in Sigma_n} alpha^{l1} q^{l2}
///                      prod_j <f_j, g_{sigma(j)}>,   g_{-k} = J g_k,
/// with the convention 0^0 = 1. Rank is capped at 4.
Eigen::MatrixXd aq_gram(const std::vector<SimpleTensor>& tensors, const QParams& params, const Involution& J);

/// <Omega, G^k Omega> by iterating the chain recursion
///   G f^{(x)n} = f^{(x)(n+1)} + (1 + alpha <f,fbar> q^{n-1}) [n]_q f^{(x)(n-1)}
/// with the preset Jf = f (<f,fbar> = 1). Odd k returns exactly 0; k <= 8.
double vacuum_moment(const QParams& params, int k);

struct CommutationReport {
    double max_residual = 0.0;
    double gram_condition = 0.0;  // worst condition number among the rank Grams
    bool gram_singular = false;
};

/// Builds B+(f) as creation on the tensor basis up to rank+1 (the new factor
/// goes to the end opposite the pi_0-twisted slot, the convention under
/// which the commutation relation closes), B-(f) as its Gram adjoint, and
/// verifies  B-(f)B+(g) - q B+(g)B-(f) = <f,g> I + alpha <fbar,g> q^{2N}
/// on all basis tensors of rank <= rank for f, g canonical basis vectors.
CommutationReport check_commutation(const QParams& params, int d, int rank, const Involution& J);

}  // namespace aqfock
