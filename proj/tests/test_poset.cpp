#include "volpoly/poset.hpp"
#include "volpoly/checks.hpp"
#include "volpoly/io.hpp"

#include <doctest.h>

using namespace volpoly;

namespace {

SparsePoly P(const std::string& text, std::size_t nvars) { return parse_poly_text(text, nvars); }

// x0 < x1 with a free element 2: three linear extensions
Poset example3() { return Poset::from_covers(3, {{0, 1}}); }

}  // namespace

TEST_CASE("poset construction validates the order axioms") {
    CHECK_THROWS(Poset::from_covers(2, {{0, 1}, {1, 0}}));  // cycle
    CHECK_THROWS(Poset::from_covers(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK_THROWS(Poset::from_covers(2, {{0, 0}}));
    Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));  // closure
}

TEST_CASE("linear extension counts") {
    CHECK(Poset::from_covers(2, {}).linear_extensions().size() == 2);
    CHECK(Poset::from_covers(3, {{0, 1}, {1, 2}}).linear_extensions().size() == 1);
    CHECK(example3().linear_extensions().size() == 3);
    CHECK(Poset::from_covers(4, {}).linear_extensions().size() == 24);
    CHECK_THROWS_AS(Poset::from_covers(13, {}).linear_extensions(), TooLarge);
}

TEST_CASE("gap statistics") {
    GapTable F = gap_statistics(example3(), {0, 1});
    CHECK(F.get({1}) == 2);
    CHECK(F.get({2}) == 1);
    CHECK(F.get({3}) == 0);
    CHECK(F.get({0}) == 0);
    CHECK(F.total == 3);
    // full chain of a total order
    Poset chain3 = Poset::from_covers(3, {{0, 1}, {1, 2}});
    GapTable G = gap_statistics(chain3, {0, 1, 2});
    CHECK(G.get({1, 1}) == 1);
    CHECK(G.counts.size() == 1);
    CHECK_THROWS_AS(gap_statistics(example3(), {1, 0}), NotAChain);
}

TEST_CASE("position statistics") {
    PositionTable N = position_statistics(example3(), {0, 1});
    CHECK(N.get({1, 2}) == 1);
    CHECK(N.get({1, 3}) == 1);
    CHECK(N.get({2, 3}) == 1);
    CHECK(N.total == 3);
    Poset chain3 = Poset::from_covers(3, {{0, 1}, {1, 2}});
    PositionTable M = position_statistics(chain3, {0, 1, 2});
    CHECK(M.get({1, 2, 3}) == 1);
    CHECK(M.counts.size() == 1);
}

TEST_CASE("kahn_saks_poly") {
    // variables (v_1..v_{k-1}, u) with u last: 2u + v1
    CHECK(kahn_saks_poly(example3(), {0, 1}) == P("x0 + 2 x1", 2));
    Poset chain3 = Poset::from_covers(3, {{0, 1}, {1, 2}});
    SparsePoly full = kahn_saks_poly(chain3, {0, 1, 2});
    CHECK(full.degree() == 0);
    CHECK(full == SparsePoly::constant(3, 1));
    CHECK_THROWS_AS(kahn_saks_poly(example3(), {0}), ChainTooShort);
    CHECK_THROWS_AS(kahn_saks_poly(Poset::from_covers(2, {}), {0, 1}), NotAChain);
}

TEST_CASE("stanley_poly") {
    // variables (v_1..v_{k-1}, u_1, u_2): v1 + u1 + u2
    CHECK(stanley_poly(example3(), {0, 1}) == P("x0 + x1 + x2", 3));
    Poset chain3 = Poset::from_covers(3, {{0, 1}, {1, 2}});
    CHECK(stanley_poly(chain3, {0, 1, 2}) == SparsePoly::constant(4, 1));
    CHECK(evaluate_all_ones(stanley_poly(example3(), {0, 1})) == 3);
}

TEST_CASE("ordinal sum with a chain") {
    Poset p = example3();
    Poset q = p.ordinal_sum_with_chain(0);
    CHECK(q.size() == 3);
    Poset r = Poset::from_covers(2, {}).ordinal_sum_with_chain(1);
    CHECK(r.size() == 3);
    CHECK(r.less(0, 2));
    CHECK(r.less(1, 2));
    CHECK_FALSE(r.less(0, 1));
    // |E(P + [ell])| = |E(P)| and gap statistics are invariant
    for (int ell = 1; ell <= 4; ++ell) {
        Poset s = p.ordinal_sum_with_chain(ell);
        CHECK(s.linear_extensions().size() == 3);
        CHECK(gap_statistics(s, {0, 1}).counts == gap_statistics(p, {0, 1}).counts);
    }
}

TEST_CASE("sum identity and diagonalization on random posets") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        Poset p = random_poset(rng, static_cast<int>(rng.uniform(3, 7)), 0.4);
        auto exts = p.linear_extensions();
        for (const auto& chain : all_chains(p, 2, 3)) {
            GapTable F = gap_statistics(p, chain, exts);
            PositionTable N = position_statistics(p, chain, exts);
            CHECK(F.total == static_cast<long long>(exts.size()));
            CHECK(N.total == F.total);
            CHECK(check_ks_sum_identity(F, N, p.size()).passed);
            CHECK(check_ks_diagonalization(p, chain).passed);
        }
    }
}

TEST_CASE("random poset generator edge cases") {
    Rng rng(37);
    Poset anti = random_poset(rng, 5, 0.0);
    CHECK(anti.covers().empty());
    Poset total = random_poset(rng, 5, 1.0);
    CHECK(total.linear_extensions().size() == 1);
    int relations = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (total.less(i, j)) ++relations;
    CHECK(relations == 10);
}
