#pragma once

#include "volpoly/poly.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace volpoly {

struct TooManyParts : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Partition: weakly decreasing vector of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

private:
    std::vector<int> parts_;
};

/// Complete homogeneous symmetric polynomial s_{d,m}: every degree-d monomial
/// in m variables with coefficient 1.
inline SparsePoly complete_homogeneous(int d, std::size_t m) {
    if (d < 0 || m < 1) throw std::invalid_argument("complete_homogeneous: d >= 0, m >= 1");
    SparsePoly f = SparsePoly::zero(m, d);
    for_each_exponent(m, d, [&](const Exponent& e) { f.set_coeff(e, 1); });
    return f;
}

namespace detail {

/// Backtracks over semistandard Young tableaux of shape lambda with entries
/// in {1..m}: rows weakly increase, columns strictly increase.  relabel maps
/// the tableau entry t to the content slot relabel[t-1]; the identity map
/// gives the Schur polynomial, other permutations give the symmetry oracle.
template <typename Fn>
void enumerate_ssyt(const Partition& lambda, std::size_t m, Fn&& emit_content,
                    const std::vector<int>& relabel) {
    const auto& rows = lambda.parts();
    std::vector<std::vector<int>> cell(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) cell[r].assign(static_cast<std::size_t>(rows[r]), 0);
    std::vector<int> content(m, 0);
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows.size()) {
            emit_content(content);
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == cell[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, cell[r][c - 1]);                      // row weakly increasing
        if (r > 0 && c < cell[r - 1].size()) lo = std::max(lo, cell[r - 1][c] + 1);  // column strict
        for (int v = lo; v <= static_cast<int>(m); ++v) {
            cell[r][c] = v;
            ++content[static_cast<std::size_t>(relabel[static_cast<std::size_t>(v - 1)])];
            self(self, nr, nc);
            --content[static_cast<std::size_t>(relabel[static_cast<std::size_t>(v - 1)])];
        }
    };
    if (rows.empty())
        emit_content(content);
    else
        rec(rec, 0, 0);
}

}  // namespace detail

/// Schur polynomial s_lambda(x_1..x_m) = sum_mu K_{lambda,mu} x^mu, with
/// Kostka numbers counted by direct SSYT enumeration.  Guarded at |lambda| <= 12.
inline SparsePoly schur(const Partition& lambda, std::size_t m,
                        const std::vector<int>* entry_relabel = nullptr) {
    if (lambda.rows() > m) throw TooManyParts("schur: more parts than variables");
    if (lambda.weight() > 12) throw std::invalid_argument("schur: |lambda| > 12 guard");
    std::vector<int> relabel(m);
    if (entry_relabel) {
        if (entry_relabel->size() != m) throw DimensionMismatch("schur: relabel length");
        relabel = *entry_relabel;
    } else {
        std::iota(relabel.begin(), relabel.end(), 0);
    }
    SparsePoly f = SparsePoly::zero(m, lambda.weight());
    detail::enumerate_ssyt(lambda, m, [&](const std::vector<int>& content) {
        f.add_term(Exponent(content), 1);
    }, relabel);
    return f;
}

/// s_{d,m}^{(i)} = C(d+m-1, i) * s_{d-i,m} for every 0 <= i <= d.
inline bool verify_ch_derived_identity(int d, std::size_t m) {
    SparsePoly sd = complete_homogeneous(d, m);
    for (int i = 0; i <= d; ++i) {
        SparsePoly lhs = derived(sd, i);
        SparsePoly rhs = scale(complete_homogeneous(d - i, m),
                               Rational(binomial(d + static_cast<long>(m) - 1, i)));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

/// partial_{s_{d,m}} f = N^{-1}(f)(1,...,1) for homogeneous f of degree d.
inline bool verify_ch_evaluation(const SparsePoly& f) {
    SparsePoly op = apply_diffop(complete_homogeneous(f.degree(), f.nvars()), f);
    Rational lhs = op.coeff(Exponent(f.nvars()));
    Rational rhs = evaluate_all_ones(denormalize(f));
    return lhs == rhs;
}

}  // namespace volpoly
