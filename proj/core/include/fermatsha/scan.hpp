#ifndef FERMATSHA_SCAN_HPP
#define FERMATSHA_SCAN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fermatsha/selmer.hpp"

namespace fermatsha {

// Scan orchestration and serialized reports. Output is byte-identical for
// identical inputs regardless of worker count.

struct ScanRow {
    int64_t p = 0, a = 0, b = 0, c = 0;
    std::string reduction;  // "tame" / "wild split" / "wild non-split"
    int64_t gamma = 0;
    bool nonsimple = false;
    std::string old_verdict, free_verdict, nontrivial_verdict;
    std::optional<int64_t> selmer_dim;
    std::optional<int64_t> rank_bound;

    bool operator==(const ScanRow&) const = default;
};

ScanRow make_scan_row(const QuotientTriple& t, const BernoulliTable& table);

// All rows for one prime, sorted by (a, b). jobs <= 1 runs serially.
std::vector<ScanRow> scan_prime(const OddPrime& p, const BernoulliTable& table,
                                bool up_to_isomorphism, int jobs);

// CSV with the fixed header
//   p,a,b,c,reduction,gamma,nonsimple,old,free,nontrivial,selmer_dim,rank_bound
// Missing optionals serialize as empty fields.
void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out);

// JSON array of objects with the same field names.
void write_scan_json(const std::vector<ScanRow>& rows, std::ostream& out);
std::vector<ScanRow> read_scan_json(std::istream& in);

}  // namespace fermatsha

#endif
