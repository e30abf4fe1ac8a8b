#pragma once

#include "volpoly/poly.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace volpoly {

/// Seeded deterministic RNG.  Bounded draws avoid std::uniform_int_distribution
/// so the stream is identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform-ish integer in [lo, hi] (modulo draw; bias is irrelevant here).
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool bernoulli(double p) {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p;
    }

    Rng fork() { return Rng(gen_()); }

private:
    std::mt19937_64 gen_;
};

/// Random homogeneous polynomial with small integer coefficients
/// (possibly negative, possibly sparse).
inline SparsePoly random_poly(Rng& rng, std::size_t nvars, int degree, int max_terms = 6,
                              long coeff_lo = -3, long coeff_hi = 5) {
    SparsePoly f = SparsePoly::zero(nvars, degree);
    std::vector<Exponent> all;
    for_each_exponent(nvars, degree, [&](const Exponent& e) { all.push_back(e); });
    int nterms = static_cast<int>(rng.uniform(1, max_terms));
    for (int t = 0; t < nterms; ++t) {
        const Exponent& e = all[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(all.size()) - 1))];
        long c = rng.uniform(coeff_lo, coeff_hi);
        if (c != 0) f.add_term(e, Rational(c));
    }
    return f;
}

/// Random non-negative linear form (not identically zero).
inline SparsePoly random_nonneg_linear(Rng& rng, std::size_t nvars) {
    SparsePoly f = SparsePoly::zero(nvars, 1);
    bool nonzero = false;
    for (std::size_t i = 0; i < nvars; ++i) {
        long c = rng.uniform(0, 3);
        if (c != 0) {
            f.add_term(Exponent::unit(nvars, i), Rational(c));
            nonzero = true;
        }
    }
    if (!nonzero) f.add_term(Exponent::unit(nvars, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(nvars) - 1))), 1);
    return f;
}

/// Random positive multiple of a product of non-negative linear forms.
/// Such polynomials are volume polynomials (substitute the forms into a
/// monomial), so their denormalizations satisfy the Khovanskii-Teissier
/// family of inequalities.  Sums of these are NOT volume polynomials in
/// general and do violate KT.
inline SparsePoly random_product_of_linear_forms(Rng& rng, std::size_t nvars, int degree) {
    SparsePoly prod = SparsePoly::constant(nvars, Rational(rng.uniform(1, 3)));
    for (int j = 0; j < degree; ++j) prod = mul(prod, random_nonneg_linear(rng, nvars));
    return prod;
}

inline std::vector<Rational> random_nonneg_point(Rng& rng, std::size_t nvars, long max_num = 5,
                                                 long max_den = 4) {
    std::vector<Rational> pt(nvars);
    for (auto& x : pt) x = Rational(rng.uniform(0, max_num), rng.uniform(1, max_den));
    return pt;
}

}  // namespace volpoly
