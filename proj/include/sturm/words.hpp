// Binary alphabet, defining sequences and the alpha-morphisms that
// generate finite Sturmian words level by level.

#ifndef STURM_WORDS_HPP
#define STURM_WORDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sturm {

// Words are ASCII strings over {'a','b'}. Positions in every public
// report are 1-based; internal indexing is the usual 0-based one.
using Word = std::string;

inline constexpr char kA = 'a';
inline constexpr char kB = 'b';

// Default cap on generated word length. Levels at least double, so the
// guard turns runaway sequences into a defined failure.
inline constexpr std::int64_t kDefaultMaxWordLen = 10'000'000;

class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// One morphism level: a -> a^p b, b -> a^p' b with p,p' >= 1, |p-p'| = 1.
struct ParamPair {
    std::int64_t p = 1;
    std::int64_t p_prime = 2;

    std::int64_t p_min() const { return p < p_prime ? p : p_prime; }
    std::int64_t p_max() const { return p_min() + 1; }
    bool valid() const { return p >= 1 && p_prime >= 1 && (p - p_prime == 1 || p_prime - p == 1); }
    bool operator==(const ParamPair&) const = default;
};

using DefiningSequence = std::vector<ParamPair>;

// Parses "p,p';p,p';..." (whitespace ignored). Throws std::invalid_argument
// naming the offending 1-based pair index on malformed or invalid input.
DefiningSequence parse_defining_sequence(const std::string& text);

std::string to_string(const DefiningSequence& pi);

// Image of w under a -> a^p b, b -> a^p' b.
Word apply_morphism(const ParamPair& pair, const Word& w,
                    std::int64_t max_len = kDefaultMaxWordLen);

std::int64_t morphism_image_length(const ParamPair& pair, const Word& w);

// Inverse on a block-complete word (a concatenation of full blocks).
// Throws std::invalid_argument if w is not block-complete for the pair.
Word inverse_morphism(const ParamPair& pair, const Word& w);

// All levels S_1..S_n of alpha_pi(a); S_0 = "a" is implicit.
struct Levels {
    std::vector<Word> words;  // words[i] is S_{i+1}

    const Word& top() const { return words.back(); }
};

Levels generate_levels(const DefiningSequence& pi,
                       std::int64_t max_len = kDefaultMaxWordLen);

// Just S_n.
Word generate(const DefiningSequence& pi,
              std::int64_t max_len = kDefaultMaxWordLen);

// Quadratic balance test: every pair of equal-length factors has
// b-counts differing by at most 1. Test/verify utility, not a fast path.
bool is_balanced(const Word& w);

// Decomposition of a level factor into a partial prefix, tagged full
// blocks and a partial suffix.
struct Block {
    Word letters;
    bool is_long = false;
};

struct BlockDecomposition {
    Word prefix_partial;
    std::vector<Block> blocks;
    Word suffix_partial;

    Word reassemble() const;
};

// Requires every interior a-gap of w to have length p or p'; throws
// std::invalid_argument otherwise.
BlockDecomposition block_decompose(const ParamPair& pair, const Word& w);

// w[i+1..|w|] w[1..i] for 1 <= i <= |w|-1 (1-based i).
Word circular_shift(const Word& w, std::int64_t i);

// Reads the word-length guard override from STURM_MAX_WORD_LEN, falling
// back to the default.
std::int64_t word_length_guard_from_env();

}  // namespace sturm

#endif  // STURM_WORDS_HPP
