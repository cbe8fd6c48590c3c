#include "sturm/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace sturm {

namespace {

std::int64_t parse_int(const std::string& tok, std::size_t pair_index) {
    std::int64_t value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || tok.empty()) {
        throw std::invalid_argument("pair " + std::to_string(pair_index) +
                                    ": malformed integer '" + tok + "'");
    }
    return value;
}

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
    }
    return out;
}

}  // namespace

DefiningSequence parse_defining_sequence(const std::string& text) {
    const std::string clean = strip_ws(text);
    if (clean.empty()) throw std::invalid_argument("empty defining sequence");

    DefiningSequence pi;
    std::size_t pos = 0;
    std::size_t index = 1;
    while (pos <= clean.size()) {
        std::size_t semi = clean.find(';', pos);
        const std::string item =
            clean.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::size_t comma = item.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("pair " + std::to_string(index) +
                                        ": expected \"p,p'\", got '" + item + "'");
        }
        ParamPair pair;
        pair.p = parse_int(item.substr(0, comma), index);
        pair.p_prime = parse_int(item.substr(comma + 1), index);
        if (pair.p < 1 || pair.p_prime < 1) {
            throw std::invalid_argument("pair " + std::to_string(index) +
                                        ": parameters must be >= 1");
        }
        if (!pair.valid()) {
            throw std::invalid_argument("pair " + std::to_string(index) +
                                        ": |p - p'| != 1");
        }
        pi.push_back(pair);
        ++index;
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return pi;
}

std::string to_string(const DefiningSequence& pi) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (i) os << ';';
        os << pi[i].p << ',' << pi[i].p_prime;
    }
    return os.str();
}

std::int64_t morphism_image_length(const ParamPair& pair, const Word& w) {
    std::int64_t nb = static_cast<std::int64_t>(std::count(w.begin(), w.end(), kB));
    std::int64_t na = static_cast<std::int64_t>(w.size()) - nb;
    return na * (pair.p + 1) + nb * (pair.p_prime + 1);
}

Word apply_morphism(const ParamPair& pair, const Word& w, std::int64_t max_len) {
    const std::int64_t out_len = morphism_image_length(pair, w);
    if (out_len > max_len) {
        throw GuardExceeded("morphism image length " + std::to_string(out_len) +
                            " exceeds guard " + std::to_string(max_len));
    }
    Word out;
    out.reserve(static_cast<std::size_t>(out_len));
    for (char c : w) {
        const std::int64_t gap = (c == kA) ? pair.p : pair.p_prime;
        out.append(static_cast<std::size_t>(gap), kA);
        out.push_back(kB);
    }
    return out;
}

Word inverse_morphism(const ParamPair& pair, const Word& w) {
    Word out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t gap = 0;
        while (i < w.size() && w[i] == kA) {
            ++i;
            ++gap;
        }
        if (i == w.size()) {
            throw std::invalid_argument("not block-complete: trailing a-gap without b");
        }
        ++i;  // the b terminator
        if (static_cast<std::int64_t>(gap) == pair.p) {
            out.push_back(kA);
        } else if (static_cast<std::int64_t>(gap) == pair.p_prime) {
            out.push_back(kB);
        } else {
            throw std::invalid_argument("not block-complete: a-gap of length " +
                                        std::to_string(gap) + " at position " +
                                        std::to_string(i - gap));
        }
    }
    return out;
}

Levels generate_levels(const DefiningSequence& pi, std::int64_t max_len) {
    if (pi.empty()) throw std::invalid_argument("empty defining sequence");
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (!pi[i].valid()) {
            throw std::invalid_argument("pair " + std::to_string(i + 1) + " is invalid");
        }
    }
    // Projected |S_n|; lengths at least double per level.
    {
        std::int64_t na = 1, nb = 0;
        for (const ParamPair& pair : pi) {
            if (na > max_len || nb > max_len) {
                throw GuardExceeded("projected length exceeds guard " + std::to_string(max_len));
            }
            const std::int64_t na2 = na * pair.p + nb * pair.p_prime;
            const std::int64_t nb2 = na + nb;
            na = na2;
            nb = nb2;
            if (na + nb > max_len) {
                throw GuardExceeded("projected length " + std::to_string(na + nb) +
                                    " exceeds guard " + std::to_string(max_len));
            }
        }
    }
    Levels levels;
    levels.words.reserve(pi.size());
    Word cur = "a";
    for (const ParamPair& pair : pi) {
        cur = apply_morphism(pair, cur, max_len);
        levels.words.push_back(cur);
    }
    return levels;
}

Word generate(const DefiningSequence& pi, std::int64_t max_len) {
    return std::move(generate_levels(pi, max_len).words.back());
}

bool is_balanced(const Word& w) {
    const std::int64_t n = static_cast<std::int64_t>(w.size());
    std::vector<std::int32_t> pb(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 0; i < n; ++i) {
        pb[static_cast<std::size_t>(i + 1)] =
            pb[static_cast<std::size_t>(i)] + (w[static_cast<std::size_t>(i)] == kB ? 1 : 0);
    }
    for (std::int64_t len = 1; len <= n; ++len) {
        std::int32_t lo = std::numeric_limits<std::int32_t>::max();
        std::int32_t hi = std::numeric_limits<std::int32_t>::min();
        for (std::int64_t i = 0; i + len <= n; ++i) {
            const std::int32_t c = pb[static_cast<std::size_t>(i + len)] - pb[static_cast<std::size_t>(i)];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

Word BlockDecomposition::reassemble() const {
    Word out = prefix_partial;
    for (const Block& b : blocks) out += b.letters;
    out += suffix_partial;
    return out;
}

BlockDecomposition block_decompose(const ParamPair& pair, const Word& w) {
    BlockDecomposition dec;
    const std::int64_t pmin = pair.p_min();
    const std::int64_t pmax = pair.p_max();

    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t gap = 0;
        while (i < w.size() && w[i] == kA) {
            ++i;
            ++gap;
        }
        const std::int64_t g = static_cast<std::int64_t>(gap);
        if (i == w.size()) {
            // trailing partial block: a proper prefix of a full block
            if (g > pmax) {
                throw std::invalid_argument("trailing a-gap of length " + std::to_string(gap) +
                                            " is not a factor of a full block");
            }
            dec.suffix_partial = Word(gap, kA);
            break;
        }
        ++i;  // b
        if (g == pmin || g == pmax) {
            dec.blocks.push_back(Block{Word(gap, kA) + kB, g == pmax});
        } else if (first && g < pmin) {
            // leading partial block: proper suffix a^g b of a full block
            dec.prefix_partial = Word(gap, kA) + kB;
        } else {
            throw std::invalid_argument("interior a-gap of length " + std::to_string(gap) +
                                        " not in {" + std::to_string(pair.p) + "," +
                                        std::to_string(pair.p_prime) + "}");
        }
        first = false;
    }
    return dec;
}

Word circular_shift(const Word& w, std::int64_t i) {
    const std::int64_t n = static_cast<std::int64_t>(w.size());
    if (i < 1 || i > n - 1) {
        throw std::invalid_argument("circular shift offset " + std::to_string(i) +
                                    " out of range for length " + std::to_string(n));
    }
    return w.substr(static_cast<std::size_t>(i)) + w.substr(0, static_cast<std::size_t>(i));
}

std::int64_t word_length_guard_from_env() {
    if (const char* env = std::getenv("STURM_MAX_WORD_LEN")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxWordLen;
}

}  // namespace sturm
