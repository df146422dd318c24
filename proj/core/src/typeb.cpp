#include "aqfock/typeb.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

namespace aqfock {

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a) - 1])
            throw std::invalid_argument("SignedPermutation: |images| must be a permutation of 1..n");
        seen[static_cast<std::size_t>(a) - 1] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) img[static_cast<std::size_t>(k) - 1] = k;
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::generator(int n, int i) {
    if (i < 0 || i >= n) throw std::out_of_range("SignedPermutation::generator: index outside 0..n-1");
    auto g = identity(n);
    if (i == 0)
        g.images_[0] = -1;
    else
        std::swap(g.images_[static_cast<std::size_t>(i) - 1], g.images_[static_cast<std::size_t>(i)]);
    return g;
}

int SignedPermutation::operator()(int k) const {
    const int a = std::abs(k);
    if (a < 1 || a > n()) throw std::out_of_range("SignedPermutation: argument outside +-1..+-n");
    const int img = images_[static_cast<std::size_t>(a) - 1];
    return k > 0 ? img : -img;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
    if (n() != other.n()) throw std::invalid_argument("SignedPermutation: rank mismatch");
    std::vector<int> img(images_.size());
    for (int k = 1; k <= n(); ++k) img[static_cast<std::size_t>(k) - 1] = (*this)(other(k));
    return SignedPermutation(std::move(img));
}

const GroupElement& GroupTable::find(const SignedPermutation& sigma) const {
    for (const auto& e : elements)
        if (e.sigma == sigma) return e;
    throw std::out_of_range("GroupTable::find: not an element");
}

GroupTable enumerate_group(int n) {
    if (n < 1 || n > 5) throw std::out_of_range("enumerate_group: n must be in 1..5");
    GroupTable table;
    table.n = n;
    std::map<std::vector<int>, int> seen;
    std::deque<int> queue;
    table.elements.push_back({SignedPermutation::identity(n), 0, 0, {}});
    seen.emplace(table.elements[0].sigma.images(), 0);
    queue.push_back(0);
    std::vector<SignedPermutation> gens;
    for (int i = 0; i < n; ++i) gens.push_back(SignedPermutation::generator(n, i));
    while (!queue.empty()) {
        const int idx = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            const GroupElement cur = table.elements[static_cast<std::size_t>(idx)];
            SignedPermutation next = cur.sigma.compose(gens[static_cast<std::size_t>(i)]);
            if (seen.count(next.images())) continue;
            GroupElement e{std::move(next), cur.l1 + (i == 0 ? 1 : 0), cur.l2 + (i == 0 ? 0 : 1), cur.word};
            e.word.push_back(i);
            seen.emplace(e.sigma.images(), static_cast<int>(table.elements.size()));
            queue.push_back(static_cast<int>(table.elements.size()));
            table.elements.push_back(std::move(e));
        }
    }
    return table;
}

void validate_involution(const Involution& J) {
    if (J.rows() != J.cols()) throw std::invalid_argument("Involution: must be square");
    const double asym = (J - J.transpose()).cwiseAbs().maxCoeff();
    const double sq = (J * J - Involution::Identity(J.rows(), J.cols())).cwiseAbs().maxCoeff();
    if (asym > 1e-12 || sq > 1e-12) throw std::invalid_argument("Involution: requires J = J^T and J^2 = I");
}

Eigen::VectorXd basis_tensor(const std::vector<int>& index, int d) {
    long size = 1;
    long lin = 0;
    for (int t : index) {
        if (t < 0 || t >= d) throw std::out_of_range("basis_tensor: index entry outside 0..d-1");
        size *= d;
        lin = lin * d + t;
    }
    Eigen::VectorXd v = Eigen::VectorXd::Zero(size);
    v[lin] = 1.0;
    return v;
}

namespace {

int rank_of(long size, int d) {
    int n = 0;
    long s = 1;
    while (s < size) {
        s *= d;
        ++n;
    }
    if (s != size) throw std::invalid_argument("act: tensor length is not a power of d");
    return n;
}

// Generator action on dense coordinates; slot 1 is the most significant digit.
Eigen::VectorXd apply_generator(int i, const Eigen::VectorXd& v, int n, int d, const Involution& J) {
    const long size = v.size();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(size);
    if (i == 0) {
        // J on slot 1: view as d x d^{n-1}.
        const long block = size / d;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                if (J(a, b) == 0.0) continue;
                out.segment(a * block, block) += J(a, b) * v.segment(b * block, block);
            }
        return out;
    }
    // Swap slots i, i+1 (1-based); slot j has stride d^{n-j}.
    long hi = 1;
    for (int j = 0; j < n - i - 1; ++j) hi *= d;
    const long mid = hi * d;
    for (long idx = 0; idx < size; ++idx) {
        const int di = static_cast<int>((idx / mid) % d);
        const int dj = static_cast<int>((idx / hi) % d);
        const long swapped = idx + (static_cast<long>(dj) - di) * mid + (static_cast<long>(di) - dj) * hi;
        out[swapped] = v[idx];
    }
    return out;
}

}  // namespace

Eigen::VectorXd act(const SignedPermutation& sigma, const Eigen::VectorXd& tensor, int d, const Involution& J) {
    validate_involution(J);
    const int n = rank_of(tensor.size(), d);
    if (n != sigma.n()) throw std::invalid_argument("act: tensor rank does not match sigma");
    // sigma = pi_{i_1} o ... o pi_{i_k}: rightmost letter acts first.
    const GroupTable table = enumerate_group(sigma.n());
    const GroupElement& e = table.find(sigma);
    Eigen::VectorXd v = tensor;
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) v = apply_generator(*it, v, n, d, J);
    return v;
}

Eigen::VectorXd act(const SignedPermutation& sigma, const std::vector<int>& index, int d, const Involution& J) {
    return act(sigma, basis_tensor(index, d), d, J);
}

Eigen::MatrixXd aq_gram(const std::vector<SimpleTensor>& tensors, const QParams& params, const Involution& J) {
    validate_involution(J);
    if (tensors.empty()) return Eigen::MatrixXd::Zero(0, 0);
    const int n = static_cast<int>(tensors[0].size());
    if (n == 0) return Eigen::MatrixXd::Ones(static_cast<long>(tensors.size()), static_cast<long>(tensors.size()));
    if (n > 4) throw std::invalid_argument("aq_gram: rank capped at 4");
    for (const auto& t : tensors)
        if (static_cast<int>(t.size()) != n) throw std::invalid_argument("aq_gram: mixed ranks");

    const GroupTable table = enumerate_group(n);
    // 0^0 = 1 convention: integer powers with p^0 == 1.
    auto ipow = [](double base, int e) {
        double r = 1.0;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };

    const long m = static_cast<long>(tensors.size());
    Eigen::MatrixXd S(m, m);
    for (long a = 0; a < m; ++a) {
        for (long b = 0; b < m; ++b) {
            // Pairings <f_j, g_k> and <f_j, J g_k> for this entry.
            Eigen::MatrixXd P(n, n), PJ(n, n);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    P(j, k) = tensors[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)].dot(
                        tensors[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)]);
                    PJ(j, k) = tensors[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)].dot(
                        J * tensors[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)]);
                }
            long double total = 0.0L;
            for (const auto& e : table.elements) {
                long double prod = ipow(params.alpha, e.l1) * ipow(params.q, e.l2);
                if (prod == 0.0L) continue;
                for (int j = 1; j <= n && prod != 0.0L; ++j) {
                    const int img = e.sigma(j);
                    prod *= img > 0 ? P(j - 1, img - 1) : PJ(j - 1, -img - 1);
                }
                total += prod;
            }
            S(a, b) = static_cast<double>(total);
        }
    }
    return S;
}

double vacuum_moment(const QParams& params, int k) {
    if (k < 0 || k > 8) throw std::invalid_argument("vacuum_moment: k must be in 0..8");
    if (k % 2 == 1) return 0.0;
    std::vector<double> coeff(static_cast<std::size_t>(k) + 2, 0.0);
    coeff[0] = 1.0;
    std::vector<double> next(coeff.size());
    for (int step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int n = 0; n <= k; ++n) {
            const double c = coeff[static_cast<std::size_t>(n)];
            if (c == 0.0) continue;
            next[static_cast<std::size_t>(n) + 1] += c;
            if (n >= 1) {
                const double w = (1.0 + params.alpha * std::pow(params.q, n - 1)) * q_number(n, params.q);
                next[static_cast<std::size_t>(n) - 1] += w * c;
            }
        }
        std::swap(coeff, next);
    }
    return coeff[0];
}

CommutationReport check_commutation(const QParams& params, int d, int rank, const Involution& J) {
    validate_involution(J);
    if (d < 1 || d > 3) throw std::invalid_argument("check_commutation: d must be in 1..3");
    if (rank < 0 || rank > 3) throw std::invalid_argument("check_commutation: rank must be in 0..3");
    if (static_cast<int>(J.rows()) != d) throw std::invalid_argument("check_commutation: involution dimension mismatch");

    // Basis tensors of each rank m <= rank+1, as simple tensors for the Gram
    // and as tuples for the creation bookkeeping.
    std::vector<std::vector<std::vector<int>>> bases(static_cast<std::size_t>(rank) + 2);
    bases[0] = {{}};
    for (int m = 1; m <= rank + 1; ++m)
        for (const auto& t : bases[static_cast<std::size_t>(m) - 1])
            for (int i = 0; i < d; ++i) {
                auto u = t;
                u.push_back(i);
                bases[static_cast<std::size_t>(m)].push_back(std::move(u));
            }

    std::vector<Eigen::MatrixXd> gram(static_cast<std::size_t>(rank) + 2);
    std::vector<Eigen::LDLT<Eigen::MatrixXd>> solver(static_cast<std::size_t>(rank) + 2);
    CommutationReport rep;
    for (int m = 0; m <= rank + 1; ++m) {
        std::vector<SimpleTensor> simple;
        for (const auto& t : bases[static_cast<std::size_t>(m)]) {
            SimpleTensor st;
            for (int i : t) st.push_back(Eigen::VectorXd::Unit(d, i));
            simple.push_back(std::move(st));
        }
        gram[static_cast<std::size_t>(m)] = aq_gram(simple, params, J);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram[static_cast<std::size_t>(m)]);
        const double smax = svd.singularValues()(0);
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        rep.gram_condition = std::max(rep.gram_condition, smax / std::max(smin, 1e-300));
        if (!(smin > 1e-12 * smax)) rep.gram_singular = true;
        solver[static_cast<std::size_t>(m)].compute(gram[static_cast<std::size_t>(m)]);
    }
    if (rep.gram_singular) {
        rep.max_residual = std::numeric_limits<double>::infinity();
        return rep;
    }

    // B+(e_a): rank m -> m+1, appending the new factor at the end opposite
    // the pi_0-twisted slot; with slot 1 most significant this is
    // index -> index*d + a.
    auto bplus = [&](int a, int m) {
        const long rows = static_cast<long>(bases[static_cast<std::size_t>(m) + 1].size());
        const long cols = static_cast<long>(bases[static_cast<std::size_t>(m)].size());
        Eigen::MatrixXd B = Eigen::MatrixXd::Zero(rows, cols);
        for (long col = 0; col < cols; ++col) B(col * d + a, col) = 1.0;
        return B;
    };
    auto bminus = [&](int a, int m) {
        // Adjoint with respect to the (alpha,q)-inner products: rank m+1 -> m.
        return solver[static_cast<std::size_t>(m)]
            .solve(bplus(a, m).transpose() * gram[static_cast<std::size_t>(m) + 1])
            .eval();
    };

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            for (int m = 0; m <= rank; ++m) {
                Eigen::MatrixXd lhs = bminus(a, m) * bplus(b, m);
                if (m > 0) lhs -= params.q * (bplus(b, m - 1) * bminus(a, m - 1));
                const double fg = a == b ? 1.0 : 0.0;
                const double fbar_g = J(b, a);
                const double scalar = fg + params.alpha * fbar_g * std::pow(params.q, 2 * m);
                lhs -= scalar * Eigen::MatrixXd::Identity(lhs.rows(), lhs.cols());
                rep.max_residual = std::max(rep.max_residual, lhs.cwiseAbs().maxCoeff());
            }
        }
    return rep;
}

}  // namespace aqfock
