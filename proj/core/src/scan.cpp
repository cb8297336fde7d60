#include "fermatsha/scan.hpp"

#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

namespace fermatsha {

ScanRow make_scan_row(const QuotientTriple& t, const BernoulliTable& table) {
    const TheoremReport rep = evaluate_theorems(t, table);
    ScanRow row;
    row.p = rep.p;
    row.a = rep.a;
    row.b = rep.b;
    row.c = rep.c;
    row.reduction = to_string(rep.reduction);
    row.gamma = rep.gamma;
    row.nonsimple = is_nonsimple(t).nonsimple;
    row.old_verdict = to_string(rep.verdict_old);
    row.free_verdict = to_string(rep.verdict_free);
    row.nontrivial_verdict = to_string(rep.verdict_nontrivial);
    row.selmer_dim = rep.selmer_dim;
    row.rank_bound = rep.rank_bound;
    return row;
}

std::vector<ScanRow> scan_prime(const OddPrime& p, const BernoulliTable& table,
                                bool up_to_isomorphism, int jobs) {
    const std::vector<QuotientTriple> triples = enumerate_triples(p, up_to_isomorphism);
    std::vector<ScanRow> rows(triples.size());

    const size_t n = triples.size();
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) rows[i] = make_scan_row(triples[i], table);
        return rows;
    }

    // index-sliced workers writing into a preallocated vector: the merge
    // order is fixed by the enumeration, not by scheduling
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = static_cast<size_t>(w); i < n; i += static_cast<size_t>(workers))
                rows[i] = make_scan_row(triples[i], table);
        });
    }
    for (auto& th : pool) th.join();
    return rows;
}

namespace {

std::string opt_to_string(const std::optional<int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
    out << "p,a,b,c,reduction,gamma,nonsimple,old,free,nontrivial,selmer_dim,"
           "rank_bound\n";
    for (const ScanRow& r : rows) {
        out << r.p << ',' << r.a << ',' << r.b << ',' << r.c << ',' << r.reduction
            << ',' << r.gamma << ',' << (r.nonsimple ? "true" : "false") << ','
            << r.old_verdict << ',' << r.free_verdict << ',' << r.nontrivial_verdict
            << ',' << opt_to_string(r.selmer_dim) << ','
            << opt_to_string(r.rank_bound) << '\n';
    }
}

void write_scan_json(const std::vector<ScanRow>& rows, std::ostream& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ScanRow& r : rows) {
        nlohmann::json o;
        o["p"] = r.p;
        o["a"] = r.a;
        o["b"] = r.b;
        o["c"] = r.c;
        o["reduction"] = r.reduction;
        o["gamma"] = r.gamma;
        o["nonsimple"] = r.nonsimple;
        o["old"] = r.old_verdict;
        o["free"] = r.free_verdict;
        o["nontrivial"] = r.nontrivial_verdict;
        if (r.selmer_dim) o["selmer_dim"] = *r.selmer_dim;
        else o["selmer_dim"] = nullptr;
        if (r.rank_bound) o["rank_bound"] = *r.rank_bound;
        else o["rank_bound"] = nullptr;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

std::vector<ScanRow> read_scan_json(std::istream& in) {
    nlohmann::json arr = nlohmann::json::parse(in);
    std::vector<ScanRow> rows;
    rows.reserve(arr.size());
    for (const auto& o : arr) {
        ScanRow r;
        r.p = o.at("p").get<int64_t>();
        r.a = o.at("a").get<int64_t>();
        r.b = o.at("b").get<int64_t>();
        r.c = o.at("c").get<int64_t>();
        r.reduction = o.at("reduction").get<std::string>();
        r.gamma = o.at("gamma").get<int64_t>();
        r.nonsimple = o.at("nonsimple").get<bool>();
        r.old_verdict = o.at("old").get<std::string>();
        r.free_verdict = o.at("free").get<std::string>();
        r.nontrivial_verdict = o.at("nontrivial").get<std::string>();
        if (!o.at("selmer_dim").is_null()) r.selmer_dim = o.at("selmer_dim").get<int64_t>();
        if (!o.at("rank_bound").is_null()) r.rank_bound = o.at("rank_bound").get<int64_t>();
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace fermatsha
