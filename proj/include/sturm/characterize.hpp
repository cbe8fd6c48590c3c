// Level-by-level characterization of runs: detection of runs at the
// level where they first appear, reflection of runs through subsequent
// morphism levels, full linear-time enumeration, counting recurrences
// and the closed-form integer index.

#ifndef STURM_CHARACTERIZE_HPP
#define STURM_CHARACTERIZE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sturm/oracle.hpp"
#include "sturm/words.hpp"

namespace sturm {

// The five shapes a run can take at its original level.
enum class RunForm { I, II, III, IV, V };

const char* to_string(RunForm f);

struct OriginalRun {
    std::int64_t level = 0;
    RunForm form = RunForm::I;
    Word g;
    std::int64_t k = 0;
    Word e2;
    // Second period occurrence (forms II-V) or gap start (form I),
    // 1-based in S_level.
    std::int64_t anchor = 0;
    // Canonical maximal interval in S_level.
    Run interval;
};

// Runs original in S_i (1 <= i <= n): period-a runs for every long
// enough a-gap of S_i, plus the square families triggered by the
// b a^m b a^n b and bab patterns of S_{i-1}. The word start acts as a
// b-boundary for pattern purposes.
std::vector<OriginalRun> original_runs(const DefiningSequence& pi, std::int64_t level,
                                       std::int64_t max_len = kDefaultMaxWordLen);

// Original-run detection on a standalone level factor. The parameter
// pair is inferred from the interior a-gap lengths; the word edges act
// as block boundaries of the surrounding word.
struct FactorOriginalRun {
    RunForm form = RunForm::I;
    NormalizedRun run;
    std::int64_t second_occurrence = 0;  // start of the second period occurrence
};

std::vector<FactorOriginalRun> original_runs_in_factor(const Word& x);

// Reflection of a run of S_i into S_{i+1} = alpha_pair(S_i):
// period becomes the morphism image, extensions grow by a^pmin b on the
// left and a^pmin on the right, and the result is re-maximalized
// against the next level. Throws if r is not a run of s_i.
NormalizedRun reflect_once(const NormalizedRun& r, const Word& s_i, const ParamPair& pair);

struct ReflectedRun {
    OriginalRun base;
    std::int64_t target_level = 0;
    Word g;
    std::int64_t k = 0;
    Word e1;
    Word e2;
    Run interval;  // canonical interval in S_target
};

ReflectedRun reflect_to_top(const OriginalRun& r, const DefiningSequence& pi,
                            std::int64_t max_len = kDefaultMaxWordLen);

// Complete run set of S_n via per-level detection plus reflection,
// linear in |S_n| plus output size. Must agree exactly with
// find_runs(generate(pi)).
std::vector<Run> enumerate_runs(const DefiningSequence& pi,
                                std::int64_t max_len = kDefaultMaxWordLen);

// Counting-only variant for large words: no run storage beyond the
// working batch, returns the number of runs of S_n.
std::int64_t enumerate_runs_count(const DefiningSequence& pi,
                                  std::int64_t max_len = kDefaultMaxWordLen);

// Distinct-period and interior-run counts relative to a seed word, via
// the closed recurrences. `sum_to_n` selects the variant whose sum in
// the period recurrence runs to n instead of n-1.
struct DistinctCounts {
    std::int64_t periods = 0;        // |G|
    std::int64_t interior_runs = 0;  // |R'|
};

DistinctCounts count_distinct(const DefiningSequence& applied, const DistinctCounts& base,
                              bool sum_to_n = false);

// Oracle-side counterparts for reconciliation: distinct normalized
// periods and runs occurring as proper infixes.
DistinctCounts oracle_distinct_counts(const Word& w);

// Closed-form integer index of S_n from the defining sequence alone.
std::int64_t integer_index_formula(const DefiningSequence& pi);

}  // namespace sturm

#endif  // STURM_CHARACTERIZE_HPP
