#pragma once

#include "volpoly/poly.hpp"

#include <json.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace volpoly {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical polynomial JSON:
/// {"nvars": n, "degree": d,
///  "terms": [{"exp": [..], "num": "<decimal>", "den": "<decimal>"}]}
/// Terms come out sorted lexicographically by exp; den > 0, gcd(num, den) = 1.
inline nlohmann::json poly_to_json(const SparsePoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back({{"exp", e.entries()},
                         {"num", numerator(c).str()},
                         {"den", denominator(c).str()}});
    }
    return {{"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", terms}};
}

inline SparsePoly poly_from_json(const nlohmann::json& j) {
    try {
        SparsePoly f = SparsePoly::zero(j.at("nvars").get<std::size_t>(),
                                        j.at("degree").get<int>());
        for (const auto& t : j.at("terms")) {
            Exponent e(t.at("exp").get<std::vector<int>>());
            Rational c(Integer(t.at("num").get<std::string>()),
                       Integer(t.at("den").get<std::string>()));
            f.add_term(e, c);
        }
        return f;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("polynomial JSON: ") + ex.what());
    }
}

/// Plain-text polynomial format: terms like "3/2 * x0^2 x1" joined by "+"
/// (a unicode minus or '-' starts a negated term).
inline SparsePoly parse_poly_text(const std::string& text, std::size_t nvars) {
    struct Term {
        Rational coeff;
        Exponent exp;
    };
    std::vector<Term> parsed;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    int sign = 1;
    bool expect_term = true;
    int degree = -1;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (!expect_term) {
            if (text[i] == '+') {
                sign = 1;
                ++i;
            } else if (text[i] == '-') {
                sign = -1;
                ++i;
            } else if (text.compare(i, 3, "\xe2\x88\x92") == 0) {  // U+2212
                sign = -1;
                i += 3;
            } else {
                throw ParseError("expected '+' or '-' at offset " + std::to_string(i));
            }
            expect_term = true;
            continue;
        }
        // optional leading sign on the very first term
        if (text[i] == '-') {
            sign = -sign;
            ++i;
            skip_ws();
        }
        Rational coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
                ++i;
            coeff = parse_rational(text.substr(start, i - start));
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        Exponent e(nvars);
        bool saw_var = false;
        while (i < text.size() && text[i] == 'x') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("variable index expected at offset " + std::to_string(i));
            std::size_t var = std::stoul(text.substr(start, i - start));
            if (var >= nvars) throw ParseError("variable x" + std::to_string(var) + " out of range");
            int pw = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (start == i) throw ParseError("exponent expected at offset " + std::to_string(i));
                pw = std::stoi(text.substr(start, i - start));
            }
            e[var] += pw;
            saw_var = true;
            skip_ws();
        }
        if (!saw_coeff && !saw_var)
            throw ParseError("empty term at offset " + std::to_string(i));
        if (degree < 0)
            degree = static_cast<int>(e.total());
        else if (e.total() != degree)
            throw ParseError("non-homogeneous input: term degrees differ");
        parsed.push_back({sign * coeff, e});
        sign = 1;
        expect_term = false;
    }
    if (parsed.empty()) throw ParseError("empty polynomial text");
    SparsePoly f = SparsePoly::zero(nvars, degree);
    for (const auto& t : parsed) f.add_term(t.exp, t.coeff);
    return f;
}

}  // namespace volpoly
