// Acceptance suite: each criterion prints one [PASS]/[FAIL] line and the
// binary exits with the number of failed criteria.
//
//   acceptance <path-to-fermatsha-cli> [criterion-number]

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <fermatsha/cache.hpp>
#include <fermatsha/lambda_modules.hpp>
#include <fermatsha/scan.hpp>
#include <fermatsha/selmer.hpp>
#include <fermatsha/verify.hpp>

using namespace fermatsha;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool ordered_find(const std::string& haystack, const std::vector<std::string>& needles,
                  std::string& detail) {
    size_t pos = 0;
    for (const std::string& needle : needles) {
        const size_t found = haystack.find(needle, pos);
        if (found == std::string::npos) {
            detail = "missing (in order): '" + needle + "'";
            return false;
        }
        pos = found + needle.size();
    }
    return true;
}

// ---- criterion bodies ------------------------------------------------------

bool criterion_1_flagship(std::string& detail) {
    const RunResult r = run_cli("report-hurwitz-klein");
    if (r.exit_code != 0) {
        detail = "exit code " + std::to_string(r.exit_code);
        return false;
    }
    return ordered_find(r.output,
                        {
                            "non-simple: yes (r=7)",
                            "tame",
                            "p=19 regular: yes",
                            "gamma(7,1,-8) = 15 ≠ 0 (mod 19)",
                            "Selmer dimension: 3",
                            "Mordell-Weil rank = 1",
                            "dim Ш[λ] = 2",
                            "Ш[p^∞] ≅ (Z[ζ]/(λ³))^2",
                        },
                        detail);
}

bool criterion_2_selmer(std::string& detail) {
    const OddPrime p19(19), p23(23);
    const BernoulliTable t19 = bernoulli_table(p19), t23 = bernoulli_table(p23);
    if (selmer_lambda_dim(p19, t19, ReductionType::Tame) != 3) {
        detail = "selmer_lambda_dim(19, tame) != 3";
        return false;
    }
    if (selmer_lambda_dim(p23, t23, ReductionType::Tame) != 4) {
        detail = "selmer_lambda_dim(23, tame) != 4";
        return false;
    }
    for (const auto& [prime, table] : {std::pair{&p19, &t19}, {&p23, &t23}}) {
        for (const ScanRow& row : scan_prime(*prime, *table, false, 4)) {
            if (row.reduction == "wild split") continue;
            if (!row.rank_bound || *row.rank_bound > 2) {
                detail = "rank bound > 2 at p=" + std::to_string(row.p) +
                         " a=" + std::to_string(row.a) + " b=" + std::to_string(row.b);
                return false;
            }
        }
    }
    return true;
}

bool criterion_3_vandiver(std::string& detail) {
    int64_t triples = 0;
    for (int64_t p : primes_up_to(101)) {
        if (p < 7) continue;
        const OddPrime prime(p);
        const VerificationOutcome out = verify_vandiver(prime, bernoulli_table(prime));
        triples += out.trials;
        if (!out.passed) {
            detail = out.failures.front();
            return false;
        }
    }
    detail = std::to_string(triples) + " triples";
    return true;
}

bool criterion_4_bk(std::string& detail) {
    int64_t checked = 0, failed = 0;
    std::string first;
    for (int64_t p : {7, 11, 19, 23}) {
        const OddPrime prime(p);
        const BernoulliTable table = bernoulli_table(prime);
        for (const QuotientTriple& t : enumerate_triples(prime, false)) {
            const VerificationOutcome out = verify_bk_lemma(t, table);
            ++checked;
            if (!out.passed) {
                ++failed;
                if (first.empty()) first = out.failures.front();
            }
        }
    }
    if (failed) {
        detail = std::to_string(failed) + "/" + std::to_string(checked) +
                 " triples disagree; first: " + first;
        return false;
    }
    detail = std::to_string(checked) + " triples";
    return true;
}

bool criterion_5_tame_nonsimple(std::string& detail) {
    const VerificationOutcome out = verify_tame_nonsimple(10000, false);
    detail = std::to_string(out.trials) + " roots";
    if (!out.passed) detail = out.failures.front();
    return out.passed;
}

bool criterion_6_bernoulli(std::string& detail) {
    for (int64_t p : primes_up_to(101)) {
        if (p < 5) continue;
        const OddPrime prime(p);
        const BernoulliTable table = bernoulli_table(prime);
        for (int64_t k = 2; k <= std::min<int64_t>(p - 3, 60); k += 2) {
            if (table.at(k) != reduce_mod(bernoulli_exact(static_cast<int>(k)), prime)) {
                detail = "table/exact mismatch at p=" + std::to_string(p) +
                         " k=" + std::to_string(k);
                return false;
            }
        }
    }
    if (bernoulli_table(OddPrime(37)).irregular_indices != std::vector<int64_t>{32}) {
        detail = "37 must be irregular exactly at 32";
        return false;
    }
    for (int64_t p : {59, 67}) {
        if (bernoulli_table(OddPrime(p)).is_regular) {
            detail = std::to_string(p) + " must be irregular";
            return false;
        }
    }
    for (int64_t p : {19, 23}) {
        if (!bernoulli_table(OddPrime(p)).is_regular) {
            detail = std::to_string(p) + " must be regular";
            return false;
        }
    }
    return true;
}

bool criterion_7_lambda_lab(std::string& detail) {
    const std::vector<LambdaPartition> partitions = deduce_partitions({}, 8, 8);
    const std::array<int64_t, 3> primes = {3, 5, 19};

    // closed form vs matrices, exhaustive
    for (const LambdaPartition& parts : partitions)
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
                const FpMatrix lam = realize_module(parts, 5);
                const int via_matrices = lam.pow(m).kernel_basis().rank() -
                                         (lam.pow(n) * lam.pow(n + m).kernel_basis()).rank();
                if (quotient_dim(parts, m, n) != via_matrices) {
                    detail = "quotient_dim mismatch";
                    return false;
                }
            }

    // pairing lemmas on hyperbolic modules and 100 seeded perturbations each
    struct Job {
        const LambdaPartition* parts;
        int64_t p;
    };
    std::vector<Job> jobs;
    for (const LambdaPartition& parts : partitions)
        for (int64_t p : primes) jobs.push_back({&parts, p});

    std::mutex mu;
    std::vector<std::string> failures;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            const Job& job = jobs[i];
            const PairedLambdaModule base = hyperbolic_pairing(*job.parts, job.p);
            const CompatiblePerturber perturber(base);
            SplitMix64 rng(0x5eed0000 + i);
            for (int trial = 0; trial <= 100; ++trial) {
                const PairedLambdaModule mod =
                    trial == 0 ? base : perturber.perturb(rng);
                for (int m = 1; m <= 4; ++m) {
                    if (!verify_annihilator(mod, m)) {
                        std::scoped_lock lk(mu);
                        failures.push_back("annihilator p=" + std::to_string(job.p));
                    }
                    for (int n = 1; n <= 4; ++n)
                        if (!verify_perfect_restriction(mod, m, n)) {
                            std::scoped_lock lk(mu);
                            failures.push_back("perfect p=" + std::to_string(job.p));
                        }
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    if (!failures.empty()) {
        std::sort(failures.begin(), failures.end());
        detail = failures.front() + " (+" + std::to_string(failures.size() - 1) + ")";
        return false;
    }
    detail = std::to_string(jobs.size()) + " modules x 101 pairings";
    return true;
}

bool criterion_8_deduction(std::string& detail) {
    {
        std::ifstream in(std::string(FERMATSHA_DATA_DIR) + "/constraints/free-structure.txt");
        if (!in) {
            detail = "missing free-structure.txt";
            return false;
        }
        const auto result = deduce_partitions(parse_constraints(in), 3, 8);
        if (result.empty()) {
            detail = "free-structure set came back empty";
            return false;
        }
        for (const LambdaPartition& parts : result)
            for (int e : parts.parts)
                if (e != 3) {
                    detail = "free-structure admits a part != 3";
                    return false;
                }
    }
    {
        std::ifstream in(std::string(FERMATSHA_DATA_DIR) + "/constraints/exact-structure.txt");
        if (!in) {
            detail = "missing exact-structure.txt";
            return false;
        }
        const auto result = deduce_partitions(parse_constraints(in), 4, 8);
        if (result.size() != 1 || result[0].parts != std::vector<int>{3, 3}) {
            detail = "exact-structure set is not exactly {(3,3)}";
            return false;
        }
    }
    return true;
}

bool criterion_9_b_half(std::string& detail) {
    const VerificationOutcome out = verify_b_half(10000);
    detail = std::to_string(out.trials) + " primes";
    if (!out.passed) detail = out.failures.front();
    return out.passed;
}

bool criterion_10_determinism(std::string& detail) {
    const std::string scan_cmd = "scan --p 101 --jobs 4 --cache " +
                                 (std::filesystem::temp_directory_path() /
                                  "fermatsha-acceptance.cache")
                                     .string();
    const RunResult s1 = run_cli(scan_cmd);
    const RunResult s2 = run_cli(scan_cmd);
    const RunResult s3 = run_cli("scan --p 101 --jobs 1 --cache " +
                                 (std::filesystem::temp_directory_path() /
                                  "fermatsha-acceptance.cache")
                                     .string());
    if (s1.exit_code != 0 || s1.output != s2.output || s1.output != s3.output) {
        detail = "parallel scans differ";
        return false;
    }
    const std::string verify_cmd = "verify schur --pmax 19 --trials 200 --seed 42";
    const RunResult v1 = run_cli(verify_cmd);
    const RunResult v2 = run_cli(verify_cmd);
    if (v1.exit_code != 0 || v1.output != v2.output) {
        detail = "seeded verifier runs differ";
        return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* summary;
    std::function<bool(std::string&)> body;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "flagship p=19 (7,1,-8) deduction chain", criterion_1_flagship},
        {2, "Selmer dimensions and rank bounds at p=19, 23", criterion_2_selmer},
        {3, "Vandiver congruences, every triple, 7 <= p <= 101", criterion_3_vandiver},
        {4, "b_k solve equals the gamma formula at p in {7,11,19,23}", criterion_4_bk},
        {5, "tame/non-simple congruence mod p^2 up to 10^4", criterion_5_tame_nonsimple},
        {6, "Bernoulli recurrence vs exact oracle; (ir)regularity", criterion_6_bernoulli},
        {7, "pairing lemmas on all partitions dim <= 8, p in {3,5,19}", criterion_7_lambda_lab},
        {8, "structure deduction singleton results", criterion_8_deduction},
        {9, "B_(p+1)/2 nonzero for p ≡ 3 mod 4 up to 10^4", criterion_9_b_half},
        {10, "byte-identical parallel scans and seeded verifiers", criterion_10_determinism},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-fermatsha-cli> [criterion]\n");
        return 64;
    }
    g_cli = argv[1];
    const int only = argc >= 3 ? std::atoi(argv[2]) : 0;

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.summary, secs, detail.empty() ? "" : " — ", detail.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
