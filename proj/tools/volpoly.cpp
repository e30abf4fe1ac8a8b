// Command-line driver: generate poset corpora, run inequality/identity check
// suites, and emit deterministic JSON-lines reports.
//
// Exit codes: 0 = all theorem-severity checks passed, 2 = theorem violation,
// 3 = usage or IO error.  Conjecture-severity candidates are reported but do
// not affect the exit code.

#include "volpoly/checks.hpp"
#include "volpoly/io.hpp"
#include "volpoly/poset.hpp"
#include "volpoly/random.hpp"
#include "volpoly/symmetric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace volpoly;
using nlohmann::json;

struct RunConfig {
    std::uint64_t seed = 0;
    int trials = 20;
    int poset_size_max = 8;
    int chain_len_max = 4;
    int le_guard = 12;
    int budget_beta = 3;
    int budget_gamma = 3;
    double edge_prob = 0.3;
    std::string out;
};

struct Emitter {
    std::ostream* os = &std::cout;
    std::ofstream file;
    long long checks = 0;
    long long theorem_failures = 0;
    long long conjecture_candidates = 0;

    int open(const std::string& path) {
        if (path.empty() || path == "-") return 0;
        file.open(path);
        if (!file) {
            std::cerr << "error: cannot open output file " << path << "\n";
            return 3;
        }
        os = &file;
        return 0;
    }

    void emit(const CheckReport& r) {
        ++checks;
        if (!r.passed) {
            if (r.severity == "theorem")
                ++theorem_failures;
            else
                ++conjecture_candidates;
        }
        (*os) << report_to_json(r).dump() << "\n";
    }

    int finish() {
        json summary = {{"summary", true},
                        {"checks", checks},
                        {"theorem_failures", theorem_failures},
                        {"conjecture_candidates", conjecture_candidates}};
        (*os) << summary.dump() << "\n";
        return theorem_failures > 0 ? 2 : 0;
    }
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

json chain_json(const std::vector<int>& chain) { return json(chain); }

void run_poset_checks(const Poset& p, const std::vector<int>& chain, const RunConfig& cfg,
                      Rng& rng, Emitter& em, const json& instance_base) {
    auto exts = p.linear_extensions(cfg.le_guard);
    GapTable F = gap_statistics(p, chain, exts);
    PositionTable N = position_statistics(p, chain, exts);

    auto tag = [&](CheckReport r) {
        for (auto it = instance_base.begin(); it != instance_base.end(); ++it)
            r.instance[it.key()] = it.value();
        r.instance["chain"] = chain_json(chain);
        return r;
    };

    em.emit(tag(check_ks_sum_identity(F, N, p.size())));
    em.emit(tag(check_af_type(F)));
    em.emit(tag(check_cross_product(F, /*strong=*/false, cfg.budget_beta, cfg.budget_gamma)));
    em.emit(tag(check_cross_product(F, /*strong=*/true, cfg.budget_beta, cfg.budget_gamma)));

    if (chain.size() < 2) {
        CheckReport skipped;
        skipped.check = "kahn_saks";
        skipped.details = {{"skipped", "chain length < 2"}};
        em.emit(tag(skipped));
        return;
    }

    SparsePoly ks = kahn_saks_poly(p, chain, F);
    {
        CheckReport built = tag(check_ks_diagonalization(p, chain, cfg.le_guard));
        built.details = {{"kahn_saks", ks.str()}};
        em.emit(built);
    }
    em.emit(tag(check_kt(ks)));
    Rng sample_rng = rng.fork();
    auto pts = rayleigh_sample_points(ks.nvars(), sample_rng);
    em.emit(tag(check_rayleigh(normalize(ks), pts)));
}

int cmd_gen_poset(const RunConfig& cfg, int n, double edge_prob) {
    Emitter em;
    if (int rc = em.open(cfg.out)) return rc;
    Rng rng(cfg.seed);
    Poset p = random_poset(rng, n, edge_prob);
    (*em.os) << poset_to_json(p).dump() << "\n";
    return 0;
}

int cmd_check_poset(const RunConfig& cfg, const std::string& poset_path,
                    const std::string& chain_str) {
    json pj;
    try {
        if (poset_path == "-") {
            std::cin >> pj;
        } else {
            std::ifstream in(poset_path);
            if (!in) {
                std::cerr << "error: cannot open poset file " << poset_path << "\n";
                return 3;
            }
            in >> pj;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: malformed poset JSON: " << ex.what() << "\n";
        return 3;
    }
    Emitter em;
    if (int rc = em.open(cfg.out)) return rc;
    try {
        Poset p = poset_from_json(pj);
        std::vector<int> chain = parse_int_list(chain_str);
        Rng rng(cfg.seed);
        run_poset_checks(p, chain, cfg, rng, em, {{"poset", poset_to_json(p)}});
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return em.finish();
}

int cmd_check_schur(const RunConfig& cfg, const std::string& lambda_str, int m) {
    Emitter em;
    if (int rc = em.open(cfg.out)) return rc;
    try {
        Partition lambda(parse_int_list(lambda_str));
        SparsePoly s = schur(lambda, static_cast<std::size_t>(m));
        json inst = {{"lambda", lambda.parts()}, {"m", m}};
        CheckReport kt = check_kt(s);
        kt.instance = inst;
        em.emit(kt);
        CheckReport rkt = check_rkt_all_pivots(s, cfg.budget_beta, cfg.budget_gamma);
        rkt.instance = inst;
        em.emit(rkt);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return em.finish();
}

int cmd_verify_identities(const RunConfig& cfg) {
    Emitter em;
    if (int rc = em.open(cfg.out)) return rc;
    Rng rng(cfg.seed);
    for (int t = 0; t < cfg.trials; ++t) {
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
        int d = static_cast<int>(rng.uniform(1, 4));
        int a = d + static_cast<int>(rng.uniform(0, 3));
        int ell = static_cast<int>(rng.uniform(0, 4));
        SparsePoly p = random_poly(rng, k + m, d);
        SparsePoly s = random_poly(rng, m, a);
        json inst = {{"trial", t}, {"k", k}, {"m", m}, {"d", d}, {"a", a}, {"ell", ell}};

        CheckReport tech;
        tech.check = "technical_derived";
        tech.instance = inst;
        tech.passed = verify_technical_derived(p, s, k);
        em.emit(tech);

        CheckReport wt;
        wt.check = "weighted_truncation";
        wt.instance = inst;
        wt.passed = verify_weighted_truncation(random_poly(rng, k + m, d), a);
        em.emit(wt);

        CheckReport qell;
        qell.check = "qell_identity";
        qell.instance = inst;
        qell.passed = verify_qell_identity(p, k, ell);
        em.emit(qell);

        // integral/derivative and normalization round-trips
        SparsePoly f = random_poly(rng, k + m, d);
        Exponent gamma(k + m);
        for (std::size_t i = 0; i < k + m; ++i) gamma[i] = static_cast<int>(rng.uniform(0, 2));
        for (std::size_t i = 0; gamma.total() > d; i = (i + 1) % (k + m))
            if (gamma[i] > 0) --gamma[i];
        CheckReport ops;
        ops.check = "operator_identities";
        ops.instance = inst;
        ops.passed = denormalize(normalize(f)) == f &&
                     antiderivative(derivative(f, gamma), gamma) == truncate_lower(f, gamma) &&
                     antiderivative(f, gamma) ==
                         normalize(mul(SparsePoly::monomial(gamma), denormalize(f)));
        em.emit(ops);
    }
    for (int d = 0; d <= 4 && em.theorem_failures == 0; ++d)
        for (std::size_t m = 1; m <= 4; ++m) {
            CheckReport ch;
            ch.check = "ch_derived_identity";
            ch.instance = {{"d", d}, {"m", m}};
            ch.passed = verify_ch_derived_identity(d, m);
            em.emit(ch);
        }
    return em.finish();
}

int cmd_fuzz(const RunConfig& cfg) {
    Emitter em;
    if (int rc = em.open(cfg.out)) return rc;
    Rng rng(cfg.seed);
    for (int t = 0; t < cfg.trials; ++t) {
        Rng trial_rng = rng.fork();
        int n = static_cast<int>(trial_rng.uniform(3, cfg.poset_size_max));
        Poset p = random_poset(trial_rng, n, cfg.edge_prob);
        json base = {{"trial", t}, {"poset", poset_to_json(p)}};
        for (const auto& chain : all_chains(p, 2, cfg.chain_len_max)) {
            try {
                run_poset_checks(p, chain, cfg, trial_rng, em, base);
            } catch (const std::exception& ex) {
                std::cerr << "error: trial " << t << ": " << ex.what() << "\n";
                return 3;
            }
        }
    }
    return em.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of denormalized volume polynomials: poset and Schur "
                 "inequality checking"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options after the subcommand name
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "RNG seed")->envname("VOLPOLY_SEED");
    app.add_option("--out", cfg.out, "Output file (default stdout)");
    app.add_option("--max-n", cfg.le_guard, "Linear-extension enumeration guard");
    app.add_option("--budget-beta", cfg.budget_beta, "|beta| budget for rKT/cross-product");
    app.add_option("--budget-gamma", cfg.budget_gamma, "|gamma| budget for rKT/cross-product");

    int gen_n = 5;
    double gen_prob = 0.3;
    auto* gen = app.add_subcommand("gen-poset", "Generate a random poset as JSON");
    gen->add_option("--n", gen_n, "Number of elements")->check(CLI::PositiveNumber);
    gen->add_option("--edge-prob", gen_prob, "Relation probability")->check(CLI::Range(0.0, 1.0));

    std::string poset_path, chain_str;
    auto* chk = app.add_subcommand("check-poset", "Run the check suite on one poset and chain");
    chk->add_option("--poset", poset_path, "Poset JSON file ('-' for stdin)")->required();
    chk->add_option("--chain", chain_str, "Chain elements, e.g. 0,2,5")->required();

    auto* ver = app.add_subcommand("verify-identities", "Verify algebraic identities on random instances");
    ver->add_option("--trials", cfg.trials, "Number of random instances");

    std::string lambda_str;
    int schur_m = 3;
    auto* sch = app.add_subcommand("check-schur", "Run KT/rKT on a Schur polynomial");
    sch->add_option("--lambda", lambda_str, "Partition, e.g. 3,2,1")->required();
    sch->add_option("--m", schur_m, "Number of variables")->check(CLI::PositiveNumber);

    auto* fz = app.add_subcommand("fuzz", "Random poset corpus loop over all chains");
    fz->add_option("--trials", cfg.trials, "Number of random posets");
    fz->add_option("--n", cfg.poset_size_max, "Maximum poset size");
    fz->add_option("--edge-prob", cfg.edge_prob, "Relation probability")->check(CLI::Range(0.0, 1.0));
    fz->add_option("--max-chain", cfg.chain_len_max, "Maximum chain length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (gen->parsed()) return cmd_gen_poset(cfg, gen_n, gen_prob);
        if (chk->parsed()) return cmd_check_poset(cfg, poset_path, chain_str);
        if (ver->parsed()) return cmd_verify_identities(cfg);
        if (sch->parsed()) return cmd_check_schur(cfg, lambda_str, schur_m);
        if (fz->parsed()) return cmd_fuzz(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return 3;
}
