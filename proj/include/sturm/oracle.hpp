// Brute-force ground truth for maximal repetitions. Deliberately naive
// (period-by-period scanning) so it shares no machinery with the
// level-based enumeration it validates.

#ifndef STURM_ORACLE_HPP
#define STURM_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "sturm/words.hpp"

namespace sturm {

// A maximal periodic factor: w[start..end] has minimal period `period`,
// exponent >= 2, and cannot be extended either way keeping that period.
// Positions are 1-based.
struct Run {
    std::int64_t start = 0;
    std::int64_t end = 0;
    std::int64_t period = 0;

    std::int64_t length() const { return end - start + 1; }
    auto operator<=>(const Run&) const = default;
};

// The run written as g^k e with e a proper prefix of g.
struct NormalizedRun {
    Word g;
    std::int64_t k = 0;
    Word e;
    std::int64_t start = 0;

    bool operator==(const NormalizedRun&) const = default;
};

// Exact set of runs of w, sorted by (start, period). O(|w|^2); intended
// for |w| up to ~10^5.
std::vector<Run> find_runs(const Word& w);

NormalizedRun normalize(const Run& r, const Word& w);

// (r, m) with r primitive and r^m = w, m maximal.
std::pair<Word, std::int64_t> primitive_root(const Word& w);

// max k over normalized runs; 1 when w has no run.
std::int64_t integer_index(const Word& w);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
};

// max (length/period) over runs as an exact rational; 1/1 when no run.
Rational fractional_index(const Word& w);

// Smallest period of w (not necessarily dividing |w|).
std::int64_t minimal_period(const Word& w);

}  // namespace sturm

#endif  // STURM_ORACLE_HPP
