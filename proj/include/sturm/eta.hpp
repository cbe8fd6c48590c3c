// Nested arithmetic expressions mirroring the block structure of a
// level: the expression's value is the word length, its magnitudes spell
// out the letters, and its terms index the repetitions born per level.

#ifndef STURM_ETA_HPP
#define STURM_ETA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sturm/words.hpp"

namespace sturm {

// A sum of terms. A term is a magnitude (a-gap length, or 1 for a
// letter b), or a coefficient multiplying a shared parenthesized sum.
// Expansions of equal blocks share nodes, so the tree is an O(n) DAG.
struct EtaNode {
    struct Term {
        std::int64_t value = 0;
        bool is_one = false;
        std::shared_ptr<const EtaNode> group;  // set iff this is a coefficient term
    };

    std::vector<Term> terms;
    std::int64_t value = 0;  // cached arithmetic value
};

struct EtaExpr {
    std::shared_ptr<const EtaNode> root;
    DefiningSequence pi;
};

// The base expression is p_1 + 1 for S_1 = a^{p_1} b; each further pair
// expands every magnitude into a block group. Throws on an empty or
// invalid sequence, or when the value would overflow.
EtaExpr build_eta(const DefiningSequence& pi);

// Arithmetic value = |generate(pi)|.
std::int64_t eval_eta(const EtaExpr& e);

// Letter of the generated word at 1-based position j, by descending the
// cumulative magnitudes; never materializes the word.
char letter_at(const EtaExpr& e, std::int64_t j);

// Every parenthesized sum carries exactly one top-level 1-term.
bool check_one_term_rule(const EtaExpr& e);

// Number of repetition originations indexed by the expression's
// magnitude terms (one per long-enough gap, a family per block
// adjacency, plus the per-level suffix repetitions). An inventory, not
// an exact run count: clipping at the word edges can shed a handful.
std::int64_t count_run_occurrences(const EtaExpr& e);

// Rendering with coefficients, parentheses and + signs.
std::string to_text(const EtaExpr& e);

}  // namespace sturm

#endif  // STURM_ETA_HPP
