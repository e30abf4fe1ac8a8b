#include "volpoly/symmetric.hpp"
#include "volpoly/checks.hpp"
#include "volpoly/io.hpp"
#include "volpoly/random.hpp"

#include <doctest.h>

#include <algorithm>

using namespace volpoly;

namespace {

SparsePoly P(const std::string& text, std::size_t nvars) { return parse_poly_text(text, nvars); }

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (!cur.empty()) out.emplace_back(cur);
        for (int part = std::min(rem, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, max_weight, max_weight);
    // enumerate by weight: rec above allows partial weights already
    return out;
}

}  // namespace

TEST_CASE("complete_homogeneous") {
    CHECK(complete_homogeneous(2, 2) == P("x0^2 + x0 x1 + x1^2", 2));
    CHECK(complete_homogeneous(0, 3) == SparsePoly::constant(3, 1));
    CHECK(complete_homogeneous(1, 4) == P("x0 + x1 + x2 + x3", 4));
}

TEST_CASE("schur examples") {
    CHECK(schur(Partition{1}, 2) == P("x0 + x1", 2));
    CHECK(schur(Partition{2}, 2) == complete_homogeneous(2, 2));
    CHECK(schur(Partition{1, 1}, 2) == P("x0 x1", 2));
    CHECK_THROWS_AS(schur(Partition{1, 1, 1}, 2), TooManyParts);
}

TEST_CASE("schur of a one-row shape is complete homogeneous") {
    for (int d = 1; d <= 5; ++d)
        for (std::size_t m = 1; m <= 4; ++m)
            CHECK(schur(Partition{std::vector<int>{d}}, m) == complete_homogeneous(d, m));
}

TEST_CASE("schur symmetry and Kostka positivity") {
    for (const auto& lambda : partitions_up_to(6)) {
        for (std::size_t m = lambda.rows(); m <= 4; ++m) {
            SparsePoly s = schur(lambda, m);
            for (const auto& [e, c] : s.terms()) {
                CHECK(denominator(c) == 1);
                CHECK(c > 0);
            }
            // symmetry under all permutations of variables
            std::vector<int> perm(m);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                SparsePoly permuted = SparsePoly::zero(m, s.degree());
                for (const auto& [e, c] : s.terms()) {
                    Exponent pe(m);
                    for (std::size_t i = 0; i < m; ++i)
                        pe[static_cast<std::size_t>(perm[i])] = e[i];
                    permuted.add_term(pe, c);
                }
                CHECK(permuted == s);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("SSYT enumeration agrees with its entry-relabeled rerun") {
    std::vector<int> perm = {2, 0, 1};
    for (const auto& lambda : partitions_up_to(5)) {
        if (lambda.rows() > 3) continue;
        CHECK(schur(lambda, 3, &perm) == schur(lambda, 3));
    }
}

TEST_CASE("derived complete homogeneous identity") {
    for (int d = 0; d <= 6; ++d)
        for (std::size_t m = 1; m <= 6; ++m) CHECK(verify_ch_derived_identity(d, m));
    // spot value: s_{2,2}^{(1)} = 3 s_{1,2}
    CHECK(derived(complete_homogeneous(2, 2), 1) == P("3 x0 + 3 x1", 2));
}

TEST_CASE("complete homogeneous diffop evaluates the denormalization at ones") {
    CHECK(verify_ch_evaluation(P("x0^2", 2)));
    CHECK(verify_ch_evaluation(P("x0 x1", 2)));
    CHECK(verify_ch_evaluation(SparsePoly::zero(3, 2)));
    Rng rng(29);
    for (int t = 0; t < 30; ++t) {
        SparsePoly f = random_poly(rng, static_cast<std::size_t>(rng.uniform(1, 4)),
                                   static_cast<int>(rng.uniform(0, 5)));
        CHECK(verify_ch_evaluation(f));
    }
}

TEST_CASE("Schur polynomials satisfy Khovanskii-Teissier") {
    for (const auto& lambda : partitions_up_to(6)) {
        for (std::size_t m = lambda.rows(); m <= 4; ++m) {
            CHECK(check_kt(schur(lambda, m)).passed);
        }
    }
}
