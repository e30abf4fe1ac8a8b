#pragma once

#include "volpoly/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace volpoly {

/// Exponent vector of a monomial: fixed-length vector of non-negative
/// integers.  Ordered lexicographically so that term maps iterate in a
/// canonical order.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
    Exponent(std::initializer_list<int> init) : e_(init) { validate(); }
    explicit Exponent(std::vector<int> v) : e_(std::move(v)) { validate(); }

    static Exponent unit(std::size_t nvars, std::size_t i) {
        Exponent r(nvars);
        r.e_.at(i) = 1;
        return r;
    }

    static Exponent constant(std::size_t nvars, int value) {
        if (value < 0) throw std::invalid_argument("negative exponent");
        Exponent r(nvars);
        for (auto& x : r.e_) x = value;
        return r;
    }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& entries() const { return e_; }

    long total() const {
        long t = 0;
        for (int x : e_) t += x;
        return t;
    }

    /// alpha! = prod_i alpha_i!
    Integer fact() const {
        Integer r = 1;
        for (int x : e_) r *= factorial(x);
        return r;
    }

    /// binom(alpha, beta) = prod_i C(alpha_i, beta_i); 0 when beta !<= alpha.
    friend Integer binom(const Exponent& a, const Exponent& b) {
        if (a.size() != b.size()) throw std::invalid_argument("binom: length mismatch");
        Integer r = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            r *= binomial(a[i], b[i]);
            if (r == 0) return r;
        }
        return r;
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
        Exponent r = a;
        for (std::size_t i = 0; i < b.size(); ++i) r.e_[i] += b[i];
        return r;
    }

    /// Componentwise difference; throws if any entry would go negative.
    friend Exponent operator-(const Exponent& a, const Exponent& b) {
        if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
        Exponent r = a;
        for (std::size_t i = 0; i < b.size(); ++i) {
            r.e_[i] -= b[i];
            if (r.e_[i] < 0) throw std::invalid_argument("exponent difference negative");
        }
        return r;
    }

    /// Componentwise a - b, or nullopt-style failure reported via flag.
    bool try_subtract(const Exponent& b, Exponent& out) const {
        if (size() != b.size()) return false;
        out = *this;
        for (std::size_t i = 0; i < b.size(); ++i) {
            out.e_[i] -= b[i];
            if (out.e_[i] < 0) return false;
        }
        return true;
    }

    /// Componentwise partial order.
    friend bool dominates(const Exponent& a, const Exponent& b) {
        if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] < b[i]) return false;
        return true;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) = default;
    friend auto operator<=>(const Exponent& a, const Exponent& b) {
        return a.e_ <=> b.e_;  // lexicographic
    }

private:
    void validate() const {
        for (int x : e_)
            if (x < 0) throw std::invalid_argument("negative exponent entry");
    }

    std::vector<int> e_;
};

/// Calls fn(alpha) for every alpha in N^nvars with |alpha| = degree,
/// in lexicographic order.
template <typename Fn>
void for_each_exponent(std::size_t nvars, int degree, Fn&& fn) {
    if (nvars == 0) {
        if (degree == 0) fn(Exponent(std::size_t{0}));
        return;
    }
    Exponent cur(nvars);
    auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = rem;
            fn(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, degree);
}

/// Calls fn(beta) for every beta <= alpha componentwise with |beta| = degree.
template <typename Fn>
void for_each_sub_exponent(const Exponent& alpha, int degree, Fn&& fn) {
    std::size_t n = alpha.size();
    Exponent cur(n);
    auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
        if (pos == n) {
            if (rem == 0) fn(cur);
            return;
        }
        int hi = std::min<int>(alpha[pos], rem);
        for (int v = hi; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, degree);
}

}  // namespace volpoly
