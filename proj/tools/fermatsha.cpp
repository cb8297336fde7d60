// Command-line front end: classification, scans, Bernoulli queries, theorem
// reports, verifiers, and the lambda-module lab.
//
// Exit codes: 0 success, 1 verification failure (counterexample found),
// 2 usage error, 3 internal assertion or I/O failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include <fermatsha/cache.hpp>
#include <fermatsha/lambda_modules.hpp>
#include <fermatsha/scan.hpp>
#include <fermatsha/selmer.hpp>
#include <fermatsha/verify.hpp>

namespace {

using namespace fermatsha;

BernoulliTable table_for(int64_t p, const std::string& cache_flag) {
    return cache_load_or_build(OddPrime(p), resolve_cache_path(cache_flag)).table;
}

int run_classify(int64_t p, int64_t a, int64_t b, bool json) {
    const OddPrime prime(p);
    const QuotientTriple t = make_triple(prime, a, b);
    const ReductionResult red = reduction_type(t);
    if (json) {
        nlohmann::json o;
        o["p"] = p;
        o["a"] = t.a();
        o["b"] = t.b();
        o["c"] = t.c();
        o["reduction"] = to_string(red.type);
        o["witness"] = red.witness;
        std::cout << o.dump() << "\n";
    } else {
        std::cout << to_string(red.type) << " (witness " << red.witness << ")\n";
    }
    return 0;
}

int run_scan(int64_t p, bool orbits, const std::string& out_path,
             const std::string& format, int jobs, const std::string& cache_flag) {
    const OddPrime prime(p);
    const BernoulliTable table = table_for(p, cache_flag);
    const std::vector<ScanRow> rows = scan_prime(prime, table, orbits, jobs);

    std::ostringstream buf;
    if (format == "json")
        write_scan_json(rows, buf);
    else
        write_scan_csv(rows, buf);

    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << buf.str();
        if (!out) throw InternalError("scan: cannot write " + out_path);
    }
    return 0;
}

int run_bernoulli(int64_t p, std::optional<int64_t> k, const std::string& cache_flag) {
    const BernoulliTable table = table_for(p, cache_flag);
    if (k) {
        if (*k < 2 || *k > p - 3 || *k % 2 != 0)
            throw InvalidDimension("bernoulli: --k must be even and in [2, p-3]");
        std::cout << "B_" << *k << " ≡ " << table.at(*k) << " (mod " << p << ")\n";
        return 0;
    }
    for (int64_t i = 2; i <= p - 3; i += 2)
        std::cout << "B_" << i << " ≡ " << table.at(i) << " (mod " << p << ")\n";
    if (table.is_regular) {
        std::cout << "regular: yes\n";
    } else {
        std::cout << "regular: no, irregular indices:";
        for (int64_t i : table.irregular_indices) std::cout << ' ' << i;
        std::cout << "\n";
    }
    return 0;
}

int run_regular(int64_t lo, int64_t hi, const std::string& cache_flag) {
    for (int64_t p : primes_up_to(hi)) {
        if (p < std::max<int64_t>(lo, 5)) continue;
        const BernoulliTable table = table_for(p, cache_flag);
        if (table.is_regular) {
            std::cout << "p=" << p << " regular\n";
        } else {
            std::cout << "p=" << p << " irregular:";
            for (size_t i = 0; i < table.irregular_indices.size(); ++i)
                std::cout << (i ? "," : " ") << table.irregular_indices[i];
            std::cout << "\n";
        }
    }
    return 0;
}

void print_report_body(const TheoremReport& rep) {
    std::cout << "triple: p=" << rep.p << " a=" << rep.a << " b=" << rep.b
              << " c=" << rep.c << "\n";
    std::cout << "reduction: " << to_string(rep.reduction) << " (witness "
              << rep.witness << ")\n";
    std::cout << "regular: " << (rep.regular ? "yes" : "no") << "\n";
    std::cout << "gamma: " << rep.gamma << "\n";
    std::cout << "old: " << to_string(rep.verdict_old) << "\n";
    std::cout << "free: " << to_string(rep.verdict_free) << "\n";
    std::cout << "nontrivial: " << to_string(rep.verdict_nontrivial) << "\n";
    if (rep.selmer_dim) std::cout << "selmer_dim: " << *rep.selmer_dim << "\n";
    if (rep.rank_bound) std::cout << "rank_bound: " << *rep.rank_bound << "\n";
}

int run_theorems(int64_t p, int64_t a, int64_t b, bool rank_positive,
                 const std::string& cache_flag) {
    const OddPrime prime(p);
    const QuotientTriple t = make_triple(prime, a, b);
    const BernoulliTable table = table_for(p, cache_flag);
    TheoremReport rep = evaluate_theorems(t, table);

    if (rank_positive) {
        rep.external_facts_used.push_back(
            "Mordell-Weil rank of J(" + std::to_string(rep.a) + "," +
            std::to_string(rep.b) + "," + std::to_string(rep.c) +
            ") over Q is positive (externally supplied)");
        if (rep.verdict_free == Verdict::Holds &&
            rep.verdict_nontrivial == Verdict::Holds && rep.selmer_dim &&
            *rep.selmer_dim == 3) {
            // dim S = 3 = rank + dim Sha[lambda], dim Sha[lambda] >= 2, rank >= 1
            rep.conclusions.push_back("Mordell-Weil rank = 1");
            rep.conclusions.push_back("dim Ш[λ] = 2");
            rep.conclusions.push_back("Ш[λ³] free of rank 2 over Z[ζ]/(λ³)");
            rep.conclusions.push_back("Ш[p^∞] ≅ (Z[ζ]/(λ³))^2");
            rep.rank_bound = 1;
        }
    }

    print_report_body(rep);
    if (!rep.conclusions.empty()) {
        std::cout << "conclusions:\n";
        for (const auto& c : rep.conclusions) std::cout << "  " << c << "\n";
    }
    if (!rep.external_facts_used.empty()) {
        std::cout << "external facts used:\n";
        for (const auto& f : rep.external_facts_used) std::cout << "  " << f << "\n";
    }
    return 0;
}

int run_hurwitz_klein(bool rank_positive) {
    const TheoremReport rep = hurwitz_klein_report(rank_positive);
    std::cout << "Hurwitz-Klein quotient: p=19 (a,b,c)=(7,1,-8)\n";
    if (!rep.external_facts_used.empty()) {
        std::cout << "external facts used:\n";
        for (const auto& f : rep.external_facts_used) std::cout << "  " << f << "\n";
    }
    for (const auto& line : rep.chain) std::cout << line << "\n";
    return 0;
}

int print_outcomes(const std::vector<VerificationOutcome>& outcomes) {
    bool all_passed = true;
    for (const auto& out : outcomes) {
        if (out.passed) {
            std::cout << out.name << ": PASS (trials=" << out.trials << ")\n";
            continue;
        }
        all_passed = false;
        std::cout << out.name << ": FAIL (trials=" << out.trials
                  << ", failures=" << out.failures.size() << ")\n";
        const size_t shown = std::min<size_t>(out.failures.size(), 10);
        for (size_t i = 0; i < shown; ++i)
            std::cout << "  counterexample: " << out.failures[i] << "\n";
        if (shown < out.failures.size())
            std::cout << "  ... " << (out.failures.size() - shown) << " more\n";
    }
    return all_passed ? 0 : 1;
}

int run_verify(const std::string& name, std::optional<int64_t> pmax_flag,
               uint64_t seed, int64_t trials, bool extended,
               const std::string& cache_flag) {
    std::vector<VerificationOutcome> outcomes;
    if (name == "schur") {
        const int64_t pmax = pmax_flag.value_or(19);
        for (int64_t p : primes_up_to(pmax)) {
            if (p < 5) continue;
            const OddPrime prime(p);
            const int half = static_cast<int>((p - 1) / 2);
            for (int n : {3, std::min(half, 9)}) {
                if (n < 3 || p <= n) continue;
                auto out = verify_schur_identity(n, prime, trials, seed);
                out.name += " n=" + std::to_string(n) + " p=" + std::to_string(p);
                outcomes.push_back(std::move(out));
                if (n == std::min(half, 9)) break;  // avoid duplicate when equal to 3
            }
        }
    } else if (name == "bk") {
        const int64_t pmax = pmax_flag.value_or(23);
        for (int64_t p : {7, 11, 19, 23}) {
            if (p > pmax) continue;
            const OddPrime prime(p);
            const BernoulliTable table = table_for(p, cache_flag);
            VerificationOutcome agg;
            agg.name = "bk_lemma p=" + std::to_string(p);
            for (const QuotientTriple& t : enumerate_triples(prime, false)) {
                auto one = verify_bk_lemma(t, table);
                agg.trials += one.trials;
                for (auto& f : one.failures) agg.record(std::move(f));
            }
            outcomes.push_back(std::move(agg));
        }
    } else if (name == "vandiver") {
        const int64_t pmax = pmax_flag.value_or(101);
        for (int64_t p : primes_up_to(pmax)) {
            if (p < 7) continue;
            const OddPrime prime(p);
            auto out = verify_vandiver(prime, table_for(p, cache_flag));
            out.name += " p=" + std::to_string(p);
            outcomes.push_back(std::move(out));
        }
    } else if (name == "tame-nonsimple") {
        const int64_t pmax = pmax_flag.value_or(extended ? 10000 : 1000);
        outcomes.push_back(verify_tame_nonsimple(pmax, false));
    } else if (name == "b-half") {
        const int64_t pmax = pmax_flag.value_or(extended ? 10000 : 1000);
        outcomes.push_back(verify_b_half(pmax));
    } else {
        throw InvalidDimension("verify: unknown verifier '" + name +
                               "' (schur, bk, vandiver, tame-nonsimple, b-half)");
    }
    return print_outcomes(outcomes);
}

int run_modules_deduce(const std::string& path, int part_cap, int dim_cap) {
    std::ifstream in(path);
    if (!in) throw InvalidDimension("modules deduce: cannot open " + path);
    const auto constraints = parse_constraints(in);
    const auto partitions = deduce_partitions(constraints, part_cap, dim_cap);
    for (const LambdaPartition& parts : partitions) {
        std::cout << '(';
        for (size_t i = 0; i < parts.parts.size(); ++i)
            std::cout << (i ? "," : "") << parts.parts[i];
        std::cout << ")\n";
    }
    return 0;
}

int run_modules_pairing_test(const std::string& parts_str, int64_t p,
                             int64_t trials, uint64_t seed, int mmax) {
    LambdaPartition parts;
    {
        std::istringstream ps(parts_str);
        std::string tok;
        while (std::getline(ps, tok, ',')) parts.parts.push_back(std::stoi(tok));
        std::sort(parts.parts.begin(), parts.parts.end(), std::greater<>());
    }
    const PairedLambdaModule base = hyperbolic_pairing(parts, p);
    const CompatiblePerturber perturber(base);
    SplitMix64 rng(seed);

    VerificationOutcome out;
    out.name = "pairing parts=" + parts_str + " p=" + std::to_string(p);
    for (int64_t trial = 0; trial <= trials; ++trial) {
        // trial 0 is the unperturbed hyperbolic module
        const PairedLambdaModule mod = trial == 0 ? base : perturber.perturb(rng);
        for (int m = 1; m <= mmax; ++m) {
            ++out.trials;
            if (!verify_annihilator(mod, m))
                out.record("trial=" + std::to_string(trial) +
                           " check=annihilator m=" + std::to_string(m));
            for (int n = 1; n <= mmax; ++n)
                if (!verify_perfect_restriction(mod, m, n))
                    out.record("trial=" + std::to_string(trial) +
                               " check=perfect m=" + std::to_string(m) +
                               " n=" + std::to_string(n));
        }
    }
    return print_outcomes({out});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fermatsha: arithmetic of Fermat curve quotients y^p = x^a (1-x)^b"};
    app.require_subcommand(1);

    int exit_code = 0;

    // classify
    int64_t cl_p = 0, cl_a = 0, cl_b = 0;
    bool cl_json = false;
    auto* classify = app.add_subcommand("classify", "reduction type of one quotient");
    classify->add_option("--p", cl_p, "prime p >= 5")->required();
    classify->add_option("--a", cl_a, "exponent a")->required();
    classify->add_option("--b", cl_b, "exponent b")->required();
    classify->add_flag("--json", cl_json, "JSON output");
    classify->callback([&] { exit_code = run_classify(cl_p, cl_a, cl_b, cl_json); });

    // scan
    int64_t sc_p = 0;
    bool sc_orbits = false;
    std::string sc_out, sc_format = "csv", sc_cache;
    int sc_jobs = static_cast<int>(std::thread::hardware_concurrency());
    auto* scan = app.add_subcommand("scan", "classify every triple at one prime");
    scan->add_option("--p", sc_p, "prime p >= 5")->required();
    scan->add_flag("--orbits", sc_orbits, "one representative per isomorphism orbit");
    scan->add_option("--out", sc_out, "output file (default stdout)");
    scan->add_option("--format", sc_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--jobs", sc_jobs, "worker threads");
    scan->add_option("--cache", sc_cache, "Bernoulli cache file");
    scan->callback([&] {
        exit_code = run_scan(sc_p, sc_orbits, sc_out, sc_format, sc_jobs, sc_cache);
    });

    // bernoulli
    int64_t be_p = 0;
    std::optional<int64_t> be_k;
    std::string be_cache;
    auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers mod p");
    bern->add_option("--p", be_p, "prime p >= 5")->required();
    int64_t be_k_raw = -1;
    auto* be_k_opt = bern->add_option("--k", be_k_raw, "single even index k");
    bern->add_option("--cache", be_cache, "Bernoulli cache file");
    bern->callback([&] {
        if (be_k_opt->count()) be_k = be_k_raw;
        exit_code = run_bernoulli(be_p, be_k, be_cache);
    });

    // regular
    std::vector<int64_t> re_range;
    std::string re_cache;
    auto* regular = app.add_subcommand("regular", "regularity scan over a prime range");
    regular->add_option("--range", re_range, "LO HI")->expected(2)->required();
    regular->add_option("--cache", re_cache, "Bernoulli cache file");
    regular->callback([&] {
        exit_code = run_regular(re_range[0], re_range[1], re_cache);
    });

    // theorems
    int64_t th_p = 0, th_a = 0, th_b = 0;
    bool th_rank = false;
    std::string th_cache;
    auto* theorems = app.add_subcommand("theorems", "theorem verdicts for one triple");
    theorems->add_option("--p", th_p, "prime p >= 5")->required();
    theorems->add_option("--a", th_a, "exponent a")->required();
    theorems->add_option("--b", th_b, "exponent b")->required();
    theorems->add_flag("--rank-positive", th_rank,
                       "assume the Mordell-Weil rank is positive (external fact)");
    theorems->add_option("--cache", th_cache, "Bernoulli cache file");
    theorems->callback([&] {
        exit_code = run_theorems(th_p, th_a, th_b, th_rank, th_cache);
    });

    // report-hurwitz-klein
    bool hk_rank = true;
    auto* hk = app.add_subcommand("report-hurwitz-klein",
                                  "full deduction chain for p=19, (7,1,-8)");
    hk->add_flag("--rank-positive,!--no-rank-positive", hk_rank,
                 "use the external positive-rank fact (default on)");
    hk->callback([&] { exit_code = run_hurwitz_klein(hk_rank); });

    // verify
    std::string ve_name, ve_cache;
    std::optional<int64_t> ve_pmax;
    int64_t ve_pmax_raw = 0, ve_trials = 500;
    uint64_t ve_seed = 0;
    bool ve_extended = false;
    auto* verify = app.add_subcommand("verify", "run one identity verifier");
    verify->add_option("name", ve_name, "schur | bk | vandiver | tame-nonsimple | b-half")
        ->required();
    auto* ve_pmax_opt = verify->add_option("--pmax", ve_pmax_raw, "prime sweep bound");
    verify->add_option("--seed", ve_seed, "RNG seed for sampled verifiers");
    verify->add_option("--trials", ve_trials, "sample budget per instance");
    verify->add_flag("--extended", ve_extended,
                     "extended sweep to 10^4 (tame-nonsimple, b-half)");
    verify->add_option("--cache", ve_cache, "Bernoulli cache file");
    verify->callback([&] {
        if (ve_pmax_opt->count()) ve_pmax = ve_pmax_raw;
        exit_code = run_verify(ve_name, ve_pmax, ve_seed, ve_trials, ve_extended,
                               ve_cache);
    });

    // modules
    auto* modules = app.add_subcommand("modules", "finite lambda-module lab");
    modules->require_subcommand(1);

    std::string md_constraints;
    int md_part_cap = 4, md_dim_cap = 8;
    auto* deduce = modules->add_subcommand("deduce",
                                           "partitions satisfying a constraint file");
    deduce->add_option("--constraints", md_constraints, "constraint file")->required();
    deduce->add_option("--part-cap", md_part_cap, "max part length");
    deduce->add_option("--dim-cap", md_dim_cap, "max total dimension");
    deduce->callback([&] {
        exit_code = run_modules_deduce(md_constraints, md_part_cap, md_dim_cap);
    });

    std::string mp_parts;
    int64_t mp_p = 19, mp_trials = 100;
    uint64_t mp_seed = 0;
    int mp_mmax = 4;
    auto* ptest = modules->add_subcommand("pairing-test",
                                          "pairing lemmas on one partition");
    ptest->add_option("--parts", mp_parts, "partition, e.g. 3,3")->required();
    ptest->add_option("--p", mp_p, "odd prime >= 3");
    ptest->add_option("--trials", mp_trials, "random compatible pairings to draw");
    ptest->add_option("--seed", mp_seed, "RNG seed");
    ptest->add_option("--mmax", mp_mmax, "check all m, n up to this bound");
    ptest->callback([&] {
        exit_code = run_modules_pairing_test(mp_parts, mp_p, mp_trials, mp_seed, mp_mmax);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
