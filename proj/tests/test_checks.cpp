#include "volpoly/checks.hpp"
#include "volpoly/io.hpp"
#include "volpoly/random.hpp"

#include <doctest.h>

using namespace volpoly;

namespace {

SparsePoly P(const std::string& text, std::size_t nvars) { return parse_poly_text(text, nvars); }

}  // namespace

TEST_CASE("check_kt") {
    CHECK(check_kt(denormalize(P("x0^2 + 2 x0 x1 + x1^2", 2))).passed);
    CHECK(check_kt(P("x0^5", 2)).passed);
    CheckReport bad = check_kt(P("x0^2 + x1^2", 2));
    CHECK_FALSE(bad.passed);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->indices["alpha"] == nlohmann::json({1, 1}));
    CHECK(bad.witness->lhs == 1);
    CHECK(bad.witness->rhs == 0);
    CHECK(bad.severity == "theorem");
}

TEST_CASE("check_rkt") {
    SparsePoly f = denormalize(P("x0^2 + 2 x0 x1 + x1^2", 2));  // 2x0^2 + 4x0x1 + 2x1^2
    // the alpha=0, beta=gamma=e_2 instance: 4 = c_{(0,2)} c_{(2,0)} <= C(2,1) c_{(1,1)}^2 = 32
    CHECK(f.coeff(Exponent{0, 2}) * f.coeff(Exponent{2, 0}) <=
          Rational(2) * f.coeff(Exponent{1, 1}) * f.coeff(Exponent{1, 1}));
    CHECK(check_rkt(f, 0).passed);
    CHECK(check_rkt_all_pivots(f).passed);
    CHECK_THROWS_AS(check_rkt(f, 2), IndexOutOfRange);
    // beta = 0 degenerates to equality; a single monomial passes everything
    CHECK(check_rkt(P("7 x0^3 x1", 2), 1).passed);
}

TEST_CASE("KT and rKT hold on denormalized products of non-negative linear forms") {
    Rng rng(41);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
        int d = static_cast<int>(rng.uniform(2, 4));
        SparsePoly g = random_product_of_linear_forms(rng, n, d);
        SparsePoly f = denormalize(g);
        CHECK(check_kt(f).passed);
        CHECK(check_rkt_all_pivots(f).passed);
        // squares stay in the family
        CHECK(check_kt(denormalize(mul(g, g))).passed);
    }
}

TEST_CASE("rKT on a Kahn-Saks polynomial") {
    Rng rng(43);
    Poset p = random_poset(rng, 7, 0.35);
    auto chains = all_chains(p, 2, 3);
    REQUIRE(!chains.empty());
    SparsePoly ks = kahn_saks_poly(p, chains.front());
    CHECK(check_rkt_all_pivots(ks).passed);
}

TEST_CASE("check_af_type") {
    Poset example = Poset::from_covers(3, {{0, 1}});
    GapTable F = gap_statistics(example, {0, 1});
    CHECK(check_af_type(F).passed);  // 2^2 >= F(0) F(2) = 0
    Poset chain4 = Poset::from_covers(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(check_af_type(gap_statistics(chain4, {0, 2})).passed);
    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        Poset p = random_poset(rng, 8, 0.3);
        auto exts = p.linear_extensions();
        for (const auto& chain : all_chains(p, 3, 3))
            CHECK(check_af_type(gap_statistics(p, chain, exts)).passed);
    }
}

TEST_CASE("check_cross_product") {
    Poset p = Poset::from_covers(4, {{0, 1}});  // chain x0<x1 plus two free elements
    GapTable F = gap_statistics(p, {0, 1});
    CHECK(check_cross_product(F, false).passed);
    CheckReport strong = check_cross_product(F, true);
    CHECK(strong.severity == "conjecture");
    Rng rng(53);
    for (int t = 0; t < 10; ++t) {
        Poset q = random_poset(rng, 7, 0.3);
        auto exts = q.linear_extensions();
        for (const auto& chain : all_chains(q, 2, 3))
            CHECK(check_cross_product(gap_statistics(q, chain, exts), false).passed);
    }
}

TEST_CASE("check_rayleigh") {
    SparsePoly g = P("x0 + 2 x1", 2);  // normalized Kahn-Saks of the 3-element example
    Rng rng(59);
    auto pts = rayleigh_sample_points(2, rng, 5);
    CheckReport r = check_rayleigh(g, pts);
    CHECK(r.passed);
    CHECK(r.severity == "conjecture");
    // |alpha| = deg g: all high-order derivatives vanish
    CHECK(check_rayleigh(SparsePoly::constant(2, 3), pts).passed);
    CHECK_THROWS_AS(check_rayleigh(g, {{Rational(-1), Rational(0)}}), NegativeSamplePoint);
}

TEST_CASE("technical derived identity, monomial oracle") {
    // p = x^beta v^iota, s = x^alpha: the masked diffop must equal
    // a!/(d-|iota|)! * beta! * binom(alpha, beta) * v^iota u^{d-|iota|}
    Exponent beta{1, 2}, alpha{2, 3}, iota{1, 0, 2};
    std::size_t k = 3, m = 2;
    Exponent pe{1, 0, 2, 1, 2};  // (iota, beta)
    SparsePoly p = SparsePoly::monomial(pe, Rational(5, 2));
    SparsePoly s = SparsePoly::monomial(alpha);
    int d = p.degree();
    int a = s.degree();
    SparsePoly lhs = detail::masked_diffop(p, s, k);
    Rational expect = Rational(5, 2) * Rational(factorial(a), factorial(d - iota.total())) *
                      Rational(beta.fact()) * Rational(binom(alpha, beta));
    Exponent out{1, 0, 2, static_cast<int>(d - iota.total())};
    CHECK(lhs == SparsePoly::monomial(out, expect));
    CHECK(verify_technical_derived(p, s, k));
    (void)m;
}

TEST_CASE("technical derived identity") {
    Rng rng(61);
    // p a polynomial in v only: reduces to the binomial expansion
    SparsePoly pv = embed_variables(P("2 x0^2 + 3 x0 x1", 2), 3, {0, 1});
    CHECK(verify_technical_derived(pv, P("x0^3", 1), 2));
    for (int t = 0; t < 40; ++t) {
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
        int d = static_cast<int>(rng.uniform(1, 4));
        int a = d + static_cast<int>(rng.uniform(0, 3));
        SparsePoly p = random_poly(rng, k + m, d);
        SparsePoly s = random_poly(rng, m, a);
        CHECK(verify_technical_derived(p, s, k));
    }
    // a < d - |iota| on the support is a precondition violation
    SparsePoly p2 = SparsePoly::monomial(Exponent{0, 3}, 1);  // d = 3, |iota| = 0
    CHECK_THROWS(verify_technical_derived(p2, P("x0", 1), 1));
}

TEST_CASE("weighted truncation identity") {
    CHECK(verify_weighted_truncation(P("x0^3", 1), 5));   // v_n^d with a >= d
    CHECK(verify_weighted_truncation(P("x0^3", 1), 2));   // and with a < d
    CHECK(verify_weighted_truncation(P("x0^2 + x0 x1", 3), 4));  // independent of v_n
    Rng rng(67);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        int d = static_cast<int>(rng.uniform(0, 4));
        CHECK(verify_weighted_truncation(random_poly(rng, n, d), static_cast<int>(rng.uniform(0, 6))));
    }
}

TEST_CASE("qell identity") {
    CHECK(verify_qell_identity(P("x0^2 x1", 2), 1, 0));  // p = v_1^{d-1} x_1, ell = 0, m = 1
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
        int d = static_cast<int>(rng.uniform(1, 4));
        int ell = static_cast<int>(rng.uniform(0, 4));
        CHECK(verify_qell_identity(random_poly(rng, k + m, d), k, ell));
    }
}

TEST_CASE("qell convergence") {
    SparsePoly p = P("x0^2 x1 + 2 x0 x1^2", 3);  // k = 2, m = 1, d = 3
    CheckReport r = verify_qell_convergence(p, 2, {100, 1000});
    CHECK(r.passed);
    // the ratio route through the binomial coefficients must match the
    // product formula prod_{i=|iota|+1}^{d+m-1} (ell+i) / ell^{d+m-1-|iota|}
    int d = 3;
    long m = 1;
    for (const auto& entry : r.details["ratios"]) {
        long ell = entry["ell"].get<long>();
        std::vector<int> iota = entry["iota"].get<std::vector<int>>();
        long ni = 0;
        for (int x : iota) ni += x;
        Rational expect = 1;
        for (long i = ni + 1; i <= d + m - 1; ++i) expect *= Rational(ell + i, ell);
        CHECK(parse_rational(entry["ratio"].get<std::string>()) == expect);
    }
}

TEST_CASE("crossproduct limit factor") {
    Poset p = Poset::from_covers(6, {{0, 1}, {1, 2}});
    std::vector<int> chain = {0, 1, 2};
    // |beta| = 0: factor is identically 1
    CheckReport r0 = verify_crossproduct_limit(p, chain, 1, 0, 1, {1, 5, 25});
    CHECK(r0.passed);
    for (const auto& e : r0.details["factors"]) CHECK(e["factor"].get<std::string>() == "1");
    // |beta| = |gamma| = 1: factor (n+ell-k-|a|) / (n+ell-k-|a|-1), strictly decreasing
    CheckReport r1 = verify_crossproduct_limit(p, chain, 1, 1, 1, {1, 5, 25, 125});
    CHECK(r1.passed);
    int n = 6, k = 3, na = 1;
    for (const auto& e : r1.details["factors"]) {
        long ell = e["ell"].get<long>();
        CHECK(parse_rational(e["factor"].get<std::string>()) ==
              Rational(n + ell - k - na, n + ell - k - na - 1));
    }
    CHECK_THROWS(verify_crossproduct_limit(p, chain, 3, 1, 1, {1}));
}

TEST_CASE("report JSON shape") {
    CheckReport bad = check_kt(P("x0^2 + x1^2", 2));
    auto j = report_to_json(bad);
    CHECK(j["check"] == "kt");
    CHECK(j["passed"] == false);
    CHECK(j["severity"] == "theorem");
    CHECK(j["witness"]["lhs"] == "1");
    CHECK(j["witness"]["rhs"] == "0");
    CheckReport ok = check_kt(P("x0^2", 1));
    CHECK(report_to_json(ok)["witness"].is_null());
}
