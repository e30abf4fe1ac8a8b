#pragma once

#include "volpoly/poly.hpp"
#include "volpoly/poset.hpp"
#include "volpoly/symmetric.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace volpoly {

struct NegativeSamplePoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Outcome of one inequality/identity check.  Theorem-severity failures are
/// implementation bugs; conjecture-severity failures are counterexample
/// candidates and never abort a run.
struct CheckReport {
    struct Witness {
        nlohmann::json indices;
        Rational lhs;
        Rational rhs;
    };

    std::string check;
    nlohmann::json instance;
    bool passed = true;
    std::string severity = "theorem";  // "theorem" | "conjecture"
    std::optional<Witness> witness;
    nlohmann::json details;  // optional extra payload (e.g. factor sequences)

    void fail(nlohmann::json indices, Rational lhs, Rational rhs) {
        if (passed) {
            passed = false;
            witness = Witness{std::move(indices), std::move(lhs), std::move(rhs)};
        }
    }
};

inline nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json j = {{"check", r.check},
                        {"instance", r.instance},
                        {"passed", r.passed},
                        {"severity", r.severity},
                        {"witness", nullptr}};
    if (r.witness) {
        j["witness"] = {{"indices", r.witness->indices},
                        {"lhs", rational_str(r.witness->lhs)},
                        {"rhs", rational_str(r.witness->rhs)}};
    }
    if (!r.details.is_null()) j["details"] = r.details;
    return j;
}

namespace detail {

/// Splits p in variables (v_1..v_k, x_1..x_m) as sum_iota p_iota(x) v^iota.
inline std::map<Exponent, SparsePoly> split_by_leading(const SparsePoly& p, std::size_t k) {
    if (k > p.nvars()) throw DimensionMismatch("split_by_leading: k > nvars");
    std::size_t m = p.nvars() - k;
    std::map<Exponent, SparsePoly> parts;
    for (const auto& [e, c] : p.terms()) {
        Exponent iota(k), xe(m);
        for (std::size_t i = 0; i < k; ++i) iota[i] = e[i];
        for (std::size_t i = 0; i < m; ++i) xe[i] = e[k + i];
        auto it = parts.find(iota);
        if (it == parts.end()) {
            auto deg = p.degree() - static_cast<int>(iota.total());
            it = parts.emplace(iota, SparsePoly::zero(m, deg)).first;
        }
        it->second.add_term(xe, c);
    }
    return parts;
}

/// partial_s|_{x=0} ( p * (u + x_1 + ... + x_m)^a ) for p in (v, x) and s in
/// x alone, returned in the variables (v_1..v_k, u) with u last.
inline SparsePoly masked_diffop(const SparsePoly& p, const SparsePoly& s, std::size_t k) {
    std::size_t m = p.nvars() - k;
    if (s.nvars() != m) throw DimensionMismatch("masked_diffop: s must live in the x block");
    std::size_t total = k + m + 1;  // (v, x, u)
    std::vector<std::size_t> p_map(k + m);
    for (std::size_t i = 0; i < k + m; ++i) p_map[i] = i;
    SparsePoly lifted_p = embed_variables(p, total, p_map);
    SparsePoly lf = SparsePoly::variable(total, k + m);
    for (std::size_t i = 0; i < m; ++i)
        lf = add(lf, SparsePoly::variable(total, k + i));
    SparsePoly prod = mul(lifted_p, power(lf, s.degree()));
    std::vector<std::size_t> s_map(m);
    for (std::size_t i = 0; i < m; ++i) s_map[i] = k + i;
    SparsePoly applied = apply_diffop(embed_variables(s, total, s_map), prod);
    std::vector<std::size_t> kept(k + 1);
    for (std::size_t i = 0; i < k; ++i) kept[i] = i;
    kept[k] = k + m;
    return project_at_zero(applied, kept);
}

inline nlohmann::json exp_json(const Exponent& e) { return nlohmann::json(e.entries()); }

}  // namespace detail

/// Khovanskii-Teissier: c_alpha^2 >= c_{alpha-e_i+e_j} * c_{alpha+e_i-e_j}.
/// Scanned over the support and its one-exchange neighborhood, so absent
/// middle coefficients (c_alpha = 0) are caught too.
inline CheckReport check_kt(const SparsePoly& f) {
    CheckReport r;
    r.check = "kt";
    r.instance = {{"nvars", f.nvars()}, {"degree", f.degree()}};
    std::set<Exponent> candidates;
    for (const auto& [e, c] : f.terms()) {
        candidates.insert(e);
        for (std::size_t i = 0; i < f.nvars(); ++i)
            for (std::size_t j = 0; j < f.nvars(); ++j) {
                if (i == j || e[i] == 0) continue;
                Exponent s = e;
                s[i] -= 1;
                s[j] += 1;
                candidates.insert(s);
            }
    }
    for (const auto& a : candidates) {
        for (std::size_t i = 0; i < f.nvars(); ++i)
            for (std::size_t j = i + 1; j < f.nvars(); ++j) {
                if (a[i] == 0 || a[j] == 0) continue;
                Exponent lo = a, hi = a;
                lo[i] -= 1;
                lo[j] += 1;
                hi[i] += 1;
                hi[j] -= 1;
                Rational lhs = f.coeff(a) * f.coeff(a);
                Rational rhs = f.coeff(lo) * f.coeff(hi);
                if (lhs < rhs)
                    r.fail({{"alpha", detail::exp_json(a)}, {"i", i}, {"j", j}}, rhs, lhs);
            }
    }
    return r;
}

/// Reverse Khovanskii-Teissier with distinguished variable `pivot`:
///   c_{a+b+g} * c_{a+|b+g|e_p} <= C(|b|+|g|, |b|) * c_{a+|g|e_p+b} * c_{a+|b|e_p+g}
/// over all decompositions with |a|+|b|+|g| = deg f, |b| <= budget_beta,
/// |g| <= budget_gamma.
inline CheckReport check_rkt(const SparsePoly& f, std::size_t pivot, int budget_beta = 3,
                             int budget_gamma = 3) {
    if (pivot >= f.nvars()) throw IndexOutOfRange("check_rkt: pivot out of range");
    CheckReport r;
    r.check = "rkt";
    r.instance = {{"nvars", f.nvars()}, {"degree", f.degree()}, {"pivot", pivot}};
    int d = f.degree();
    std::vector<std::vector<Exponent>> by_degree(static_cast<std::size_t>(d) + 1);
    for (int deg = 0; deg <= d; ++deg)
        for_each_exponent(f.nvars(), deg, [&](const Exponent& e) {
            by_degree[static_cast<std::size_t>(deg)].push_back(e);
        });
    for (int nb = 0; nb <= std::min(budget_beta, d); ++nb) {
        for (int ng = 0; ng <= std::min(budget_gamma, d - nb); ++ng) {
            Rational factor{binomial(nb + ng, nb)};
            for (const auto& beta : by_degree[static_cast<std::size_t>(nb)]) {
                for (const auto& gamma : by_degree[static_cast<std::size_t>(ng)]) {
                    for (const auto& alpha : by_degree[static_cast<std::size_t>(d - nb - ng)]) {
                        Exponent abg = alpha + beta + gamma;
                        Exponent a_piv = alpha;
                        a_piv[pivot] += nb + ng;
                        Exponent ab = alpha + beta;
                        ab[pivot] += ng;
                        Exponent ag = alpha + gamma;
                        ag[pivot] += nb;
                        Rational lhs = f.coeff(abg) * f.coeff(a_piv);
                        Rational rhs = factor * f.coeff(ab) * f.coeff(ag);
                        if (lhs > rhs)
                            r.fail({{"alpha", detail::exp_json(alpha)},
                                    {"beta", detail::exp_json(beta)},
                                    {"gamma", detail::exp_json(gamma)},
                                    {"pivot", pivot}},
                                   lhs, rhs);
                    }
                }
            }
        }
    }
    return r;
}

/// rKT across every pivot; relabeling variables preserves the property.
inline CheckReport check_rkt_all_pivots(const SparsePoly& f, int budget_beta = 3,
                                        int budget_gamma = 3) {
    CheckReport r;
    r.check = "rkt";
    r.instance = {{"nvars", f.nvars()}, {"degree", f.degree()}, {"pivot", "all"}};
    for (std::size_t p = 0; p < f.nvars(); ++p) {
        CheckReport one = check_rkt(f, p, budget_beta, budget_gamma);
        if (!one.passed && r.passed) {
            r.passed = false;
            r.witness = one.witness;
        }
    }
    return r;
}

namespace detail {

inline std::vector<int> shifted(const std::vector<int>& v, std::size_t i, int by) {
    std::vector<int> r = v;
    r[i] += by;
    return r;
}

inline std::set<std::vector<int>> af_candidates(const GapTable& F) {
    std::set<std::vector<int>> cand;
    for (const auto& [iota, cnt] : F.counts) {
        cand.insert(iota);
        for (std::size_t i = 0; i < iota.size(); ++i) {
            cand.insert(shifted(iota, i, 1));
            cand.insert(shifted(iota, i, -1));
            for (std::size_t j = 0; j < iota.size(); ++j) {
                if (i == j) continue;
                cand.insert(shifted(shifted(iota, i, 1), j, -1));
            }
        }
    }
    return cand;
}

}  // namespace detail

/// AF-type inequalities for gap statistics:
///   F(iota)^2 >= F(iota-e_i) F(iota+e_i)  and
///   F(iota)^2 >= F(iota-e_i+e_j) F(iota+e_i-e_j).
inline CheckReport check_af_type(const GapTable& F) {
    CheckReport r;
    r.check = "af_type";
    r.instance = {{"k", F.k}, {"extensions", F.total}};
    for (const auto& iota : detail::af_candidates(F)) {
        Integer f2 = Integer(F.get(iota)) * F.get(iota);
        for (std::size_t i = 0; i < iota.size(); ++i) {
            Integer prod = Integer(F.get(detail::shifted(iota, i, -1))) *
                           F.get(detail::shifted(iota, i, 1));
            if (f2 < prod)
                r.fail({{"iota", iota}, {"i", i}}, Rational(prod), Rational(f2));
            for (std::size_t j = 0; j < iota.size(); ++j) {
                if (i == j) continue;
                Integer prod2 =
                    Integer(F.get(detail::shifted(detail::shifted(iota, i, -1), j, 1))) *
                    F.get(detail::shifted(detail::shifted(iota, i, 1), j, -1));
                if (f2 < prod2)
                    r.fail({{"iota", iota}, {"i", i}, {"j", j}}, Rational(prod2), Rational(f2));
            }
        }
    }
    return r;
}

/// Cross-product inequality for gap statistics.  Weak form (a theorem) keeps
/// the binomial factor C(|beta|+|gamma|, |beta|); strong form (the generalized
/// cross-product conjecture) drops it, and failures are counterexample
/// candidates rather than bugs.
inline CheckReport check_cross_product(const GapTable& F, bool strong, int budget_beta = 3,
                                       int budget_gamma = 3) {
    CheckReport r;
    r.check = strong ? "cross_product_strong" : "cross_product_weak";
    r.severity = strong ? "conjecture" : "theorem";
    r.instance = {{"k", F.k}, {"extensions", F.total}};
    std::size_t dims = static_cast<std::size_t>(F.k - 1);
    std::vector<std::vector<int>> deltas;
    for (int deg = 0; deg <= std::max(budget_beta, budget_gamma); ++deg)
        for_each_exponent(dims, deg, [&](const Exponent& e) { deltas.push_back(e.entries()); });
    auto plus = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r = a;
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return r;
    };
    auto total = [](const std::vector<int>& a) {
        int t = 0;
        for (int x : a) t += x;
        return t;
    };
    for (const auto& [alpha, fa] : F.counts) {
        for (const auto& beta : deltas) {
            if (total(beta) > budget_beta) continue;
            for (const auto& gamma : deltas) {
                if (total(gamma) > budget_gamma) continue;
                Integer lhs = Integer(fa) * F.get(plus(plus(alpha, beta), gamma));
                Integer prod = Integer(F.get(plus(alpha, beta))) * F.get(plus(alpha, gamma));
                Integer rhs = strong ? prod : binomial(total(beta) + total(gamma), total(beta)) * prod;
                if (lhs > rhs)
                    r.fail({{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}}, Rational(lhs),
                           Rational(rhs));
            }
        }
    }
    return r;
}

/// Sample grid for the 1-Rayleigh check: {0,1,2}^nvars plus `extra` seeded
/// random rational points in [0,5]^nvars.
inline std::vector<std::vector<Rational>> rayleigh_sample_points(std::size_t nvars, Rng& rng,
                                                                int extra = 20) {
    std::vector<std::vector<Rational>> pts;
    std::vector<int> cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == nvars) {
            pts.emplace_back(cur.begin(), cur.end());
            return;
        }
        for (int v = 0; v <= 2; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    for (int t = 0; t < extra; ++t) pts.push_back(random_nonneg_point(rng, nvars, 5, 4));
    return pts;
}

/// 1-Rayleigh sampling check:
///   d^alpha g * d^{alpha+e_i+e_j} g <= d^{alpha+e_i} g * d^{alpha+e_j} g
/// at each sample point, for every alpha with |alpha| <= deg g - 2 and every
/// pair i <= j.  Samples the orthant; it does not certify it, so failures are
/// conjecture-severity candidates.
inline CheckReport check_rayleigh(const SparsePoly& g,
                                  const std::vector<std::vector<Rational>>& samples) {
    CheckReport r;
    r.check = "rayleigh";
    r.severity = "conjecture";
    r.instance = {{"nvars", g.nvars()}, {"degree", g.degree()}, {"samples", samples.size()}};
    for (const auto& pt : samples) {
        if (pt.size() != g.nvars()) throw DimensionMismatch("check_rayleigh: point length");
        for (const auto& x : pt)
            if (x < 0) throw NegativeSamplePoint("check_rayleigh: negative sample coordinate");
    }
    int d = g.degree();
    // all derivative polynomials up to order d
    std::map<Exponent, SparsePoly> derivs;
    for (int ord = 0; ord <= d; ++ord)
        for_each_exponent(g.nvars(), ord, [&](const Exponent& b) {
            derivs.emplace(b, derivative(g, b));
        });
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& pt = samples[s];
        std::map<Exponent, Rational> val;
        for (const auto& [b, df] : derivs) val.emplace(b, evaluate(df, pt));
        for (const auto& [a, va] : val) {
            if (a.total() > d - 2) continue;
            for (std::size_t i = 0; i < g.nvars(); ++i) {
                for (std::size_t j = i; j < g.nvars(); ++j) {
                    Exponent ai = a, aj = a, aij = a;
                    ai[i] += 1;
                    aj[j] += 1;
                    aij[i] += 1;
                    aij[j] += 1;
                    Rational lhs = va * val.at(aij);
                    Rational rhs = val.at(ai) * val.at(aj);
                    if (lhs > rhs) {
                        nlohmann::json point = nlohmann::json::array();
                        for (const auto& x : pt) point.push_back(rational_str(x));
                        r.fail({{"alpha", detail::exp_json(a)}, {"i", i}, {"j", j}, {"point", point}},
                               lhs, rhs);
                    }
                }
            }
        }
    }
    return r;
}

/// Identity behind the diagonalization argument: for p in (v_1..v_k, x_1..x_m)
/// of degree d and s in x of degree a,
///   partial_s|_{x=0}( p * (u + sum x_i)^a )
///     = sum_iota a!/(d-|iota|)! * partial_{s^(|iota|+a-d)}(p_iota) * v^iota u^{d-|iota|}.
/// The two sides are computed by disjoint code paths and compared exactly.
inline bool verify_technical_derived(const SparsePoly& p, const SparsePoly& s, std::size_t k) {
    int d = p.degree();
    int a = s.degree();
    SparsePoly lhs = detail::masked_diffop(p, s, k);
    SparsePoly rhs = SparsePoly::zero(k + 1, d);
    for (const auto& [iota, p_iota] : detail::split_by_leading(p, k)) {
        int ni = static_cast<int>(iota.total());
        int j = ni + a - d;
        if (j < 0 || j > a)
            throw std::invalid_argument("verify_technical_derived: need a >= d - |iota| on the support");
        SparsePoly sj = derived(s, j);
        Rational scalar = apply_diffop(sj, p_iota).coeff(Exponent(p_iota.nvars()));
        if (scalar == 0) continue;
        std::vector<int> e(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) e[i] = iota[i];
        e[k] = d - ni;
        rhs.add_term(Exponent(e), Rational(factorial(a), factorial(d - ni)) * scalar);
    }
    return lhs == rhs;
}

/// Weighted-truncation identity: with v_n the last variable of p,
///   (1/a!) * partial_{v_n^a}|_{v_n=0}( p * (u + v_n)^a )
///     = sum_{|iota|+b=d} C(a,b) c_{iota,b} v^iota u^b.
inline bool verify_weighted_truncation(const SparsePoly& p, int a) {
    if (p.nvars() < 1) throw DimensionMismatch("verify_weighted_truncation: needs a variable");
    if (a < 0) throw std::invalid_argument("verify_weighted_truncation: a < 0");
    std::size_t n = p.nvars();
    std::size_t total = n + 1;  // (v_1..v_n, u)
    std::vector<std::size_t> id_map(n);
    for (std::size_t i = 0; i < n; ++i) id_map[i] = i;
    SparsePoly prod = mul(embed_variables(p, total, id_map),
                          power(add(SparsePoly::variable(total, n), SparsePoly::variable(total, n - 1)), a));
    Exponent order(total);
    order[n - 1] = a;
    SparsePoly applied = derivative(prod, order);
    std::vector<std::size_t> kept(n);
    for (std::size_t i = 0; i + 1 < n; ++i) kept[i] = i;
    kept[n - 1] = n;  // u replaces v_n
    SparsePoly lhs = scale(project_at_zero(applied, kept), Rational(1, factorial(a)));
    SparsePoly rhs = SparsePoly::zero(n, p.degree());
    for (const auto& [e, c] : p.terms()) {
        int b = e[n - 1];
        Integer w = binomial(a, b);
        if (w != 0) rhs.add_term(e, c * Rational(w));
    }
    return lhs == rhs;
}

/// The q_ell identity: for p in (v_1..v_k, x_1..x_m) of degree d,
///   partial_{s_{d+ell,m}}|_{x=0}( p * (u + sum x_i)^{d+ell} )
///     = sum_iota (d+ell)!/(d-|iota|)! * C(d+ell+m-1, |iota|+ell)
///              * N^{-1}(p_iota)(u..u) * v^iota.
/// Left side below is the closed formula, right side the operational diffop.
inline bool verify_qell_identity(const SparsePoly& p, std::size_t k, int ell) {
    if (ell < 0) throw std::invalid_argument("verify_qell_identity: ell < 0");
    if (k >= p.nvars()) throw DimensionMismatch("verify_qell_identity: needs at least one x variable");
    std::size_t m = p.nvars() - k;
    int d = p.degree();
    SparsePoly closed = SparsePoly::zero(k + 1, d);
    for (const auto& [iota, p_iota] : detail::split_by_leading(p, k)) {
        int ni = static_cast<int>(iota.total());
        Rational nval = evaluate_all_ones(denormalize(p_iota));
        if (nval == 0) continue;
        Rational coeff = Rational(factorial(d + ell), factorial(d - ni)) *
                         Rational(binomial(d + ell + static_cast<long>(m) - 1, ni + ell)) * nval;
        std::vector<int> e(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) e[i] = iota[i];
        e[k] = d - ni;
        closed.add_term(Exponent(e), coeff);
    }
    SparsePoly operational = detail::masked_diffop(p, complete_homogeneous(d + ell, m), k);
    return closed == operational;
}

/// Convergence of the rescaled q_ell toward q_m: for every surviving
/// coefficient the exact ratio
///   q_{ell,m}(v, u/ell) / (ell^{m-1} (d+ell)!)  over  q_m
/// equals prod_{i=|iota|+1}^{d+m-1} (ell+i) / ell^{d+m-1-|iota|}; the check
/// asserts |ratio - 1| <= (d+m)^2/ell for every listed ell >= 4(d+m)^2.
inline CheckReport verify_qell_convergence(const SparsePoly& p, std::size_t k,
                                           const std::vector<long>& ell_values) {
    if (k >= p.nvars()) throw DimensionMismatch("verify_qell_convergence: needs an x variable");
    std::size_t m = p.nvars() - k;
    int d = p.degree();
    CheckReport r;
    r.check = "qell_convergence";
    r.instance = {{"k", k}, {"m", m}, {"degree", d}};
    nlohmann::json ratios = nlohmann::json::array();
    long dm = d + static_cast<long>(m);
    for (const auto& [iota, p_iota] : detail::split_by_leading(p, k)) {
        int ni = static_cast<int>(iota.total());
        Rational nval = evaluate_all_ones(denormalize(p_iota));
        if (nval == 0) continue;  // zero target coefficient, nothing to compare
        Rational target = nval / (Rational(factorial(d - ni)) * Rational(factorial(dm - ni - 1)));
        for (long ell : ell_values) {
            // scaled coefficient of v^iota u^{d-|iota|} in q_{ell,m}(v, u/ell) / (ell^{m-1}(d+ell)!)
            Rational scaled = nval * Rational(binomial(d + ell + static_cast<long>(m) - 1, ni + ell)) /
                              Rational(factorial(d - ni));
            Integer pw = 1;
            for (long t = 0; t < dm - 1 - ni; ++t) pw *= ell;
            scaled /= Rational(pw);
            Rational ratio = scaled / target;
            ratios.push_back({{"iota", detail::exp_json(iota)},
                              {"ell", ell},
                              {"ratio", rational_str(ratio)}});
            if (ell >= 4 * dm * dm) {
                Rational dev = ratio - 1;
                if (dev < 0) dev = -dev;
                if (dev > Rational(dm * dm, ell))
                    r.fail({{"iota", detail::exp_json(iota)}, {"ell", ell}}, ratio,
                           1 + Rational(dm * dm, ell));
            }
        }
    }
    r.details = {{"ratios", ratios}};
    return r;
}

/// The limiting factor from the cross-product argument under P + [ell]:
///   prod_{i=1}^{|beta|} (n+ell-k-|a|-|b|+i) / (n+ell-k-|a|-|b|-|g|+i).
/// Asserted >= 1, decreasing in ell (strictly when |beta|,|gamma| > 0),
/// within 1 + |beta|(|gamma|+1)/ell of 1, while the gap statistics stay
/// invariant under the ordinal sum.
inline CheckReport verify_crossproduct_limit(const Poset& p, const std::vector<int>& chain,
                                             int na, int nb, int ng,
                                             const std::vector<long>& ell_values,
                                             int guard = 12) {
    CheckReport r;
    r.check = "crossproduct_limit";
    int n = p.size();
    int k = static_cast<int>(chain.size());
    if (na < 0 || nb < 0 || ng < 0 || na + nb + ng > n - k)
        throw std::invalid_argument("verify_crossproduct_limit: |alpha|+|beta|+|gamma| must fit in n-k");
    r.instance = {{"n", n}, {"k", k}, {"abs_alpha", na}, {"abs_beta", nb}, {"abs_gamma", ng}};
    auto factor_at = [&](long ell) {
        Rational f = 1;
        for (int i = 1; i <= nb; ++i)
            f *= Rational(n + ell - k - na - nb + i, n + ell - k - na - nb - ng + i);
        return f;
    };
    nlohmann::json seq = nlohmann::json::array();
    Rational prev;
    bool have_prev = false;
    for (long ell : ell_values) {
        Rational f = factor_at(ell);
        seq.push_back({{"ell", ell}, {"factor", rational_str(f)}});
        if (f < 1) r.fail({{"ell", ell}}, f, Rational(1));
        Rational bound = 1 + Rational(static_cast<long>(nb) * (ng + 1), ell);
        if (f > bound) r.fail({{"ell", ell}, {"bound_violated", true}}, f, bound);
        if (have_prev) {
            bool strict = nb > 0 && ng > 0;
            if ((strict && f >= prev) || (!strict && f > prev))
                r.fail({{"ell", ell}, {"not_decreasing", true}}, f, prev);
        }
        prev = f;
        have_prev = true;
    }
    r.details = {{"factors", seq}};
    // F invariance under the ordinal sum (small ell only, enumeration-guarded)
    GapTable base = gap_statistics(p, chain, guard);
    for (int ell = 1; ell <= 3 && n + ell <= guard; ++ell) {
        GapTable aug = gap_statistics(p.ordinal_sum_with_chain(ell), chain, guard);
        if (aug.counts != base.counts || aug.total != base.total)
            r.fail({{"ordinal_ell", ell}, {"gap_table_changed", true}}, Rational(aug.total),
                   Rational(base.total));
    }
    return r;
}

/// Sum identity: summing N over starting offsets recovers F,
///   sum_a N(p_1=a+1, gaps iota_m+1) = F(iota_1+1, ..., iota_{k-1}+1).
inline CheckReport check_ks_sum_identity(const GapTable& F, const PositionTable& N, int n) {
    CheckReport r;
    r.check = "ks_sum_identity";
    r.instance = {{"n", n}, {"k", F.k}};
    std::size_t k = static_cast<std::size_t>(F.k);
    std::map<std::vector<int>, long long> sums;
    for (const auto& [pos, cnt] : N.counts) {
        std::vector<int> iota(k - 1);
        for (std::size_t m = 0; m + 1 < k; ++m) iota[m] = pos[m + 1] - pos[m];
        sums[iota] += cnt;
    }
    std::set<std::vector<int>> keys;
    for (const auto& [iota, c] : sums) keys.insert(iota);
    for (const auto& [iota, c] : F.counts) keys.insert(iota);
    for (const auto& iota : keys) {
        auto it = sums.find(iota);
        long long lhs = it == sums.end() ? 0 : it->second;
        long long rhs = F.get(iota);
        if (lhs != rhs) r.fail({{"iota_plus_one", iota}}, Rational(lhs), Rational(rhs));
    }
    if (F.total != N.total)
        r.fail({{"totals_differ", true}}, Rational(F.total), Rational(N.total));
    return r;
}

/// Kahn-Saks polynomial vs. the u_1 = u_2 = u diagonalization of the Stanley
/// polynomial; both live in (v_1..v_{k-1}, u) after the merge.
inline CheckReport check_ks_diagonalization(const Poset& p, const std::vector<int>& chain,
                                            int guard = 12) {
    CheckReport r;
    r.check = "ks_diagonalization";
    r.instance = {{"n", p.size()}, {"k", chain.size()}};
    auto exts = p.linear_extensions(guard);
    SparsePoly ks = kahn_saks_poly(p, chain, gap_statistics(p, chain, exts));
    SparsePoly st = stanley_poly(p, chain, position_statistics(p, chain, exts));
    SparsePoly diag = diagonalize(st, chain.size() - 1);
    if (!(ks == diag))
        r.fail({{"mismatch", true}}, evaluate_all_ones(ks), evaluate_all_ones(diag));
    return r;
}

}  // namespace volpoly
