#pragma once

#include "volpoly/poly.hpp"
#include "volpoly/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace volpoly {

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAChain : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ChainTooShort : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Finite strict partial order on {0..n-1}, stored as a transitively closed
/// boolean matrix.  Construction validates irreflexivity and antisymmetry.
class Poset {
public:
    explicit Poset(int n) : n_(n), lt_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        if (n < 0) throw std::invalid_argument("poset size must be >= 0");
    }

    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
        Poset p(n);
        for (auto [i, j] : covers) {
            if (i < 0 || j < 0 || i >= n || j >= n)
                throw std::invalid_argument("cover element out of range");
            if (i == j) throw std::invalid_argument("reflexive cover");
            p.at(i, j) = 1;
        }
        p.close_and_validate();
        return p;
    }

    int size() const { return n_; }
    bool less(int i, int j) const { return at(i, j) != 0; }

    /// Cover relations: i < j with no z strictly between.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> cov;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (!less(i, j)) continue;
                bool is_cover = true;
                for (int z = 0; z < n_ && is_cover; ++z)
                    if (less(i, z) && less(z, j)) is_cover = false;
                if (is_cover) cov.emplace_back(i, j);
            }
        return cov;
    }

    bool is_chain(const std::vector<int>& c) const {
        for (std::size_t m = 0; m < c.size(); ++m) {
            if (c[m] < 0 || c[m] >= n_) return false;
            if (m + 1 < c.size() && !less(c[m], c[m + 1])) return false;
        }
        return true;
    }

    /// P + [ell]: every element of P below every element of a fresh ell-chain.
    Poset ordinal_sum_with_chain(int ell) const {
        if (ell < 0) throw std::invalid_argument("ordinal_sum_with_chain: ell < 0");
        Poset q(n_ + ell);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) q.at(i, j) = at(i, j);
        for (int i = 0; i < n_; ++i)
            for (int t = 0; t < ell; ++t) q.at(i, n_ + t) = 1;
        for (int s = 0; s < ell; ++s)
            for (int t = s + 1; t < ell; ++t) q.at(n_ + s, n_ + t) = 1;
        return q;
    }

    /// All linear extensions, as arrays L with L[element] = position in 1..n.
    /// Backtracks over currently minimal elements in ascending element order.
    std::vector<std::vector<int>> linear_extensions(int guard = 12) const {
        if (n_ > guard) throw TooLarge("linear_extensions: n exceeds guard");
        std::vector<std::vector<int>> out;
        std::vector<int> pos(static_cast<std::size_t>(n_), 0);
        std::vector<int> npred(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (less(i, j)) ++npred[static_cast<std::size_t>(j)];
        auto rec = [&](auto&& self, int step) -> void {
            if (step > n_) {
                out.push_back(pos);
                return;
            }
            for (int x = 0; x < n_; ++x) {
                if (pos[static_cast<std::size_t>(x)] != 0 || npred[static_cast<std::size_t>(x)] != 0)
                    continue;
                pos[static_cast<std::size_t>(x)] = step;
                for (int y = 0; y < n_; ++y)
                    if (less(x, y)) --npred[static_cast<std::size_t>(y)];
                self(self, step + 1);
                for (int y = 0; y < n_; ++y)
                    if (less(x, y)) ++npred[static_cast<std::size_t>(y)];
                pos[static_cast<std::size_t>(x)] = 0;
            }
        };
        rec(rec, 1);
        return out;
    }

private:
    char& at(int i, int j) { return lt_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    char at(int i, int j) const { return lt_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }

    void close_and_validate() {
        for (int z = 0; z < n_; ++z)
            for (int i = 0; i < n_; ++i)
                if (less(i, z))
                    for (int j = 0; j < n_; ++j)
                        if (less(z, j)) at(i, j) = 1;
        for (int i = 0; i < n_; ++i) {
            if (less(i, i)) throw std::invalid_argument("order is not irreflexive");
            for (int j = 0; j < n_; ++j)
                if (i != j && less(i, j) && less(j, i))
                    throw std::invalid_argument("order is not antisymmetric");
        }
    }

    int n_;
    std::vector<char> lt_;
};

/// F(iota): linear extensions by gap vector along a fixed chain.
/// Out-of-support queries return 0.
struct GapTable {
    int k = 0;
    long long total = 0;
    std::map<std::vector<int>, long long> counts;

    long long get(const std::vector<int>& iota) const {
        auto it = counts.find(iota);
        return it == counts.end() ? 0 : it->second;
    }
};

/// N(i_1..i_k): linear extensions by the positions of the chain elements.
struct PositionTable {
    int k = 0;
    long long total = 0;
    std::map<std::vector<int>, long long> counts;

    long long get(const std::vector<int>& pos) const {
        auto it = counts.find(pos);
        return it == counts.end() ? 0 : it->second;
    }
};

inline void require_chain(const Poset& p, const std::vector<int>& chain) {
    if (chain.empty()) throw NotAChain("empty chain");
    if (!p.is_chain(chain)) throw NotAChain("elements do not form a chain in the poset");
}

inline GapTable gap_statistics(const Poset& p, const std::vector<int>& chain,
                               const std::vector<std::vector<int>>& extensions) {
    require_chain(p, chain);
    GapTable t;
    t.k = static_cast<int>(chain.size());
    for (const auto& L : extensions) {
        std::vector<int> iota(chain.size() - 1);
        for (std::size_t m = 0; m + 1 < chain.size(); ++m)
            iota[m] = L[static_cast<std::size_t>(chain[m + 1])] - L[static_cast<std::size_t>(chain[m])];
        ++t.counts[iota];
        ++t.total;
    }
    return t;
}

inline GapTable gap_statistics(const Poset& p, const std::vector<int>& chain, int guard = 12) {
    return gap_statistics(p, chain, p.linear_extensions(guard));
}

inline PositionTable position_statistics(const Poset& p, const std::vector<int>& chain,
                                         const std::vector<std::vector<int>>& extensions) {
    require_chain(p, chain);
    PositionTable t;
    t.k = static_cast<int>(chain.size());
    for (const auto& L : extensions) {
        std::vector<int> pos(chain.size());
        for (std::size_t m = 0; m < chain.size(); ++m)
            pos[m] = L[static_cast<std::size_t>(chain[m])];
        ++t.counts[pos];
        ++t.total;
    }
    return t;
}

inline PositionTable position_statistics(const Poset& p, const std::vector<int>& chain, int guard = 12) {
    return position_statistics(p, chain, p.linear_extensions(guard));
}

/// Kahn-Saks polynomial P_KS in variables (v_1..v_{k-1}, u), u last:
/// coefficient of v^iota u^j is F(iota_1+1, ..., iota_{k-1}+1), homogeneous
/// of degree n-k.
inline SparsePoly kahn_saks_poly(const Poset& p, const std::vector<int>& chain,
                                 const GapTable& gaps) {
    if (chain.size() < 2) throw ChainTooShort("kahn_saks_poly: chain length < 2");
    require_chain(p, chain);
    std::size_t k = chain.size();
    int deg = p.size() - static_cast<int>(k);
    SparsePoly f = SparsePoly::zero(k, deg);
    for (const auto& [iota, count] : gaps.counts) {
        std::vector<int> exp(k, 0);
        long s = 0;
        for (std::size_t m = 0; m + 1 < k; ++m) {
            exp[m] = iota[m] - 1;  // gap 1 contributes exponent 0
            s += iota[m] - 1;
        }
        exp[k - 1] = deg - static_cast<int>(s);  // u exponent
        f.add_term(Exponent(exp), Rational(count));
    }
    return f;
}

inline SparsePoly kahn_saks_poly(const Poset& p, const std::vector<int>& chain, int guard = 12) {
    return kahn_saks_poly(p, chain, gap_statistics(p, chain, guard));
}

/// Stanley polynomial in variables (v_1..v_{k-1}, u_1, u_2): coefficient of
/// v^iota u_1^a u_2^b is N(p_1..p_k) with p_1 = a+1, p_{m+1} = p_m + iota_m + 1
/// and b = n - p_k, so a + |iota| + b = n - k.
inline SparsePoly stanley_poly(const Poset& p, const std::vector<int>& chain,
                               const PositionTable& positions) {
    require_chain(p, chain);
    std::size_t k = chain.size();
    int deg = p.size() - static_cast<int>(k);
    SparsePoly f = SparsePoly::zero(k + 1, deg);
    for (const auto& [pos, count] : positions.counts) {
        std::vector<int> exp(k + 1, 0);
        for (std::size_t m = 0; m + 1 < k; ++m) exp[m] = pos[m + 1] - pos[m] - 1;
        exp[k - 1] = pos[0] - 1;            // u_1 exponent a
        exp[k] = p.size() - pos[k - 1];     // u_2 exponent b
        f.add_term(Exponent(exp), Rational(count));
    }
    return f;
}

inline SparsePoly stanley_poly(const Poset& p, const std::vector<int>& chain, int guard = 12) {
    return stanley_poly(p, chain, position_statistics(p, chain, guard));
}

/// Random poset: pick a random labeling, include each pair (i, j) with i
/// before j in the labeling as a relation with probability edge_prob, then
/// take the transitive closure.
inline Poset random_poset(Rng& rng, int n, double edge_prob) {
    if (n < 1) throw std::invalid_argument("random_poset: n < 1");
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(label[static_cast<std::size_t>(i)],
                  label[static_cast<std::size_t>(rng.uniform(0, i))]);
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.bernoulli(edge_prob)) rels.emplace_back(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
    return Poset::from_covers(n, rels);
}

/// All chains with lengths in [min_len, max_len], lexicographic by elements.
inline std::vector<std::vector<int>> all_chains(const Poset& p, int min_len, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int last) -> void {
        if (static_cast<int>(cur.size()) >= min_len) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int x = 0; x < p.size(); ++x) {
            if (last >= 0 && !p.less(last, x)) continue;
            cur.push_back(x);
            self(self, x);
            cur.pop_back();
        }
    };
    rec(rec, -1);
    return out;
}

inline nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (auto [i, j] : p.covers()) covers.push_back({i, j});
    return {{"n", p.size()}, {"covers", covers}};
}

inline Poset poset_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers"))
        covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return Poset::from_covers(n, covers);
}

}  // namespace volpoly
