#pragma once

#include "volpoly/exponent.hpp"
#include "volpoly/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace volpoly {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct DegreeTooHigh : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NegativeEntry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Matrix = std::vector<std::vector<Rational>>;

/// Homogeneous multivariate polynomial with exact rational coefficients,
/// stored sparsely.  The zero polynomial keeps an explicit degree and
/// variable count so homogeneity stays checkable.
class SparsePoly {
public:
    using TermMap = std::map<Exponent, Rational>;  // lexicographic key order

    SparsePoly() : nvars_(0), degree_(0) {}

    static SparsePoly zero(std::size_t nvars, int degree) {
        SparsePoly p;
        p.nvars_ = nvars;
        p.degree_ = degree;
        return p;
    }

    static SparsePoly monomial(const Exponent& e, Rational coeff = 1) {
        SparsePoly p = zero(e.size(), static_cast<int>(e.total()));
        if (coeff != 0) p.terms_[e] = std::move(coeff);
        return p;
    }

    static SparsePoly constant(std::size_t nvars, Rational value) {
        return monomial(Exponent(nvars), std::move(value));
    }

    static SparsePoly variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw IndexOutOfRange("variable index out of range");
        return monomial(Exponent::unit(nvars, i));
    }

    std::size_t nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set_coeff(const Exponent& e, Rational c) {
        if (e.size() != nvars_) throw DimensionMismatch("set_coeff: exponent length");
        if (e.total() != degree_) throw DimensionMismatch("set_coeff: breaks homogeneity");
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }

    void add_term(const Exponent& e, const Rational& c) {
        if (e.size() != nvars_) throw DimensionMismatch("add_term: exponent length");
        if (e.total() != degree_) throw DimensionMismatch("add_term: breaks homogeneity");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << rational_str(c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << " x" << i;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    std::size_t nvars_;
    int degree_;
    TermMap terms_;
};

inline SparsePoly add(const SparsePoly& f, const SparsePoly& g) {
    if (f.nvars() != g.nvars() || f.degree() != g.degree())
        throw DimensionMismatch("add: nvars or degree differ");
    SparsePoly r = f;
    for (const auto& [e, c] : g.terms()) r.add_term(e, c);
    return r;
}

inline SparsePoly scale(const SparsePoly& f, const Rational& c) {
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree());
    if (c == 0) return r;
    for (const auto& [e, v] : f.terms()) r.set_coeff(e, v * c);
    return r;
}

inline SparsePoly sub(const SparsePoly& f, const SparsePoly& g) {
    return add(f, scale(g, -1));
}

inline SparsePoly mul(const SparsePoly& f, const SparsePoly& g) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("mul: nvars differ");
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree() + g.degree());
    for (const auto& [ea, ca] : f.terms())
        for (const auto& [eb, cb] : g.terms()) r.add_term(ea + eb, ca * cb);
    return r;
}

inline SparsePoly power(const SparsePoly& f, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    SparsePoly r = SparsePoly::constant(f.nvars(), 1);
    for (int i = 0; i < k; ++i) r = mul(r, f);
    return r;
}

/// N: c_alpha -> c_alpha / alpha!
inline SparsePoly normalize(const SparsePoly& f) {
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree());
    for (const auto& [e, c] : f.terms()) r.set_coeff(e, c / Rational(e.fact()));
    return r;
}

/// N^{-1}: c_alpha -> c_alpha * alpha!
inline SparsePoly denormalize(const SparsePoly& f) {
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree());
    for (const auto& [e, c] : f.terms()) r.set_coeff(e, c * Rational(e.fact()));
    return r;
}

/// f(A x') where variable i of f is replaced by sum_j A[i][j] x'_j.
/// A must be non-negative: the substitution is only guaranteed to preserve
/// volume-polynomial positivity for non-negative matrices, and this library
/// refuses to compute the unchecked variant.
inline SparsePoly substitute_linear(const SparsePoly& f, const Matrix& A) {
    if (A.size() != f.nvars()) throw DimensionMismatch("substitute_linear: row count != nvars");
    std::size_t m = A.empty() ? 0 : A[0].size();
    for (const auto& row : A) {
        if (row.size() != m) throw DimensionMismatch("substitute_linear: ragged matrix");
        for (const auto& x : row)
            if (x < 0) throw NegativeEntry("substitute_linear: negative matrix entry");
    }
    // image of each original variable as a linear form in the new variables
    std::vector<SparsePoly> images;
    images.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        SparsePoly li = SparsePoly::zero(m, 1);
        for (std::size_t j = 0; j < m; ++j)
            if (A[i][j] != 0) li.add_term(Exponent::unit(m, j), A[i][j]);
        images.push_back(std::move(li));
    }
    SparsePoly r = SparsePoly::zero(m, f.degree());
    for (const auto& [e, c] : f.terms()) {
        SparsePoly t = SparsePoly::constant(m, c);
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (e[i] > 0) t = mul(t, power(images[i], e[i]));
        r = add(r, t);
    }
    return r;
}

/// Substitutes a single fresh variable u for variables keep..nvars-1;
/// the result has keep+1 variables with u last.
inline SparsePoly diagonalize(const SparsePoly& f, std::size_t keep) {
    if (keep > f.nvars()) throw DimensionMismatch("diagonalize: keep > nvars");
    Matrix A(f.nvars(), std::vector<Rational>(keep + 1, 0));
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (i < keep)
            A[i][i] = 1;
        else
            A[i][keep] = 1;
    }
    return substitute_linear(f, A);
}

inline SparsePoly partial_derivative(const SparsePoly& f, std::size_t i) {
    if (i >= f.nvars()) throw IndexOutOfRange("partial_derivative: index out of range");
    int deg = f.degree() > 0 ? f.degree() - 1 : 0;
    SparsePoly r = SparsePoly::zero(f.nvars(), deg);
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponent d = e;
        d[i] -= 1;
        r.add_term(d, c * e[i]);
    }
    return r;
}

/// partial^alpha f = prod_i (d/dx_i)^{alpha_i} f
inline SparsePoly derivative(const SparsePoly& f, const Exponent& alpha) {
    if (alpha.size() != f.nvars()) throw DimensionMismatch("derivative: exponent length");
    if (alpha.total() > f.degree())
        return SparsePoly::zero(f.nvars(), 0);
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree() - static_cast<int>(alpha.total()));
    for (const auto& [e, c] : f.terms()) {
        Exponent d(f.nvars());
        if (!e.try_subtract(alpha, d)) continue;
        // e! / (e - alpha)!
        Rational fac(e.fact(), d.fact());
        r.add_term(d, c * fac);
    }
    return r;
}

/// partial_s f for a homogeneous polynomial s acting as the differential
/// operator s(d/dx_1, ..., d/dx_n).
inline SparsePoly apply_diffop(const SparsePoly& s, const SparsePoly& f) {
    if (s.nvars() != f.nvars()) throw DimensionMismatch("apply_diffop: nvars differ");
    if (s.degree() > f.degree()) throw DegreeTooHigh("apply_diffop: deg s > deg f");
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree() - s.degree());
    for (const auto& [a, cs] : s.terms()) r = add(r, scale(derivative(f, a), cs));
    return r;
}

/// j-th derived polynomial s^(j): coefficient of u^j in s(x_1+u, ..., x_n+u).
/// For a monomial x^alpha this is sum over beta <= alpha, |beta| = |alpha|-j,
/// of binom(alpha, beta) x^beta; extend by linearity.
inline SparsePoly derived(const SparsePoly& s, int j) {
    if (j < 0 || j > s.degree()) throw IndexOutOfRange("derived: j out of range");
    SparsePoly r = SparsePoly::zero(s.nvars(), s.degree() - j);
    for (const auto& [a, c] : s.terms()) {
        for_each_sub_exponent(a, static_cast<int>(a.total()) - j, [&](const Exponent& b) {
            r.add_term(b, c * Rational(binom(a, b)));
        });
    }
    return r;
}

/// f_{>= gamma}: keeps terms with alpha >= gamma componentwise.
inline SparsePoly truncate_lower(const SparsePoly& f, const Exponent& gamma) {
    if (gamma.size() != f.nvars()) throw DimensionMismatch("truncate_lower: exponent length");
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree());
    for (const auto& [e, c] : f.terms())
        if (dominates(e, gamma)) r.set_coeff(e, c);
    return r;
}

/// f_{<= alpha}: keeps terms with beta <= alpha componentwise.
inline SparsePoly truncate_upper(const SparsePoly& f, const Exponent& alpha) {
    if (alpha.size() != f.nvars()) throw DimensionMismatch("truncate_upper: exponent length");
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree());
    for (const auto& [e, c] : f.terms())
        if (dominates(alpha, e)) r.set_coeff(e, c);
    return r;
}

/// c_beta -> binom(alpha, beta) c_beta.
inline SparsePoly weighted_truncate(const SparsePoly& f, const Exponent& alpha) {
    if (alpha.size() != f.nvars()) throw DimensionMismatch("weighted_truncate: exponent length");
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree());
    for (const auto& [e, c] : f.terms()) {
        Integer w = binom(alpha, e);
        if (w != 0) r.set_coeff(e, c * Rational(w));
    }
    return r;
}

/// int^gamma f = sum alpha!/(alpha+gamma)! c_alpha x^{alpha+gamma}.
/// Internally asserted against the identity int^gamma f = N(x^gamma N^{-1}(f)).
inline SparsePoly antiderivative(const SparsePoly& f, const Exponent& gamma) {
    if (gamma.size() != f.nvars()) throw DimensionMismatch("antiderivative: exponent length");
    SparsePoly r = SparsePoly::zero(f.nvars(), f.degree() + static_cast<int>(gamma.total()));
    for (const auto& [e, c] : f.terms()) {
        Exponent shifted = e + gamma;
        r.set_coeff(shifted, c * Rational(e.fact(), shifted.fact()));
    }
    SparsePoly cross = normalize(mul(SparsePoly::monomial(gamma), denormalize(f)));
    if (!(r == cross))
        throw std::logic_error("antiderivative: N(x^gamma N^{-1}(f)) cross-check failed");
    return r;
}

inline Rational evaluate(const SparsePoly& f, const std::vector<Rational>& point) {
    if (point.size() != f.nvars()) throw DimensionMismatch("evaluate: point length");
    Rational total = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

/// Re-embeds f into a polynomial on new_nvars variables, sending old
/// variable i to var_map[i].
inline SparsePoly embed_variables(const SparsePoly& f, std::size_t new_nvars,
                                  const std::vector<std::size_t>& var_map) {
    if (var_map.size() != f.nvars()) throw DimensionMismatch("embed_variables: map length");
    for (std::size_t t : var_map)
        if (t >= new_nvars) throw IndexOutOfRange("embed_variables: target out of range");
    SparsePoly r = SparsePoly::zero(new_nvars, f.degree());
    for (const auto& [e, c] : f.terms()) {
        Exponent ne(new_nvars);
        for (std::size_t i = 0; i < f.nvars(); ++i) ne[var_map[i]] += e[i];
        r.add_term(ne, c);
    }
    return r;
}

/// Sets every variable outside `kept` to zero and projects onto the kept
/// variables, in the order given.
inline SparsePoly project_at_zero(const SparsePoly& f, const std::vector<std::size_t>& kept) {
    std::vector<bool> is_kept(f.nvars(), false);
    for (std::size_t i : kept) {
        if (i >= f.nvars()) throw IndexOutOfRange("project_at_zero: index out of range");
        is_kept[i] = true;
    }
    SparsePoly r = SparsePoly::zero(kept.size(), f.degree());
    for (const auto& [e, c] : f.terms()) {
        bool survives = true;
        for (std::size_t i = 0; i < f.nvars() && survives; ++i)
            if (!is_kept[i] && e[i] != 0) survives = false;
        if (!survives) continue;
        Exponent ne(kept.size());
        for (std::size_t j = 0; j < kept.size(); ++j) ne[j] = e[kept[j]];
        r.add_term(ne, c);
    }
    return r;
}

inline Rational evaluate_all_ones(const SparsePoly& f) {
    Rational total = 0;
    for (const auto& [e, c] : f.terms()) total += c;
    return total;
}

}  // namespace volpoly
