#include "sturm/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace sturm {

namespace {

// Border array over an arbitrary factor w[off..off+len).
std::vector<std::int32_t> border_array(const Word& w, std::size_t off, std::size_t len) {
    std::vector<std::int32_t> b(len + 1, 0);
    std::int32_t k = 0;
    for (std::size_t i = 1; i < len; ++i) {
        while (k > 0 && w[off + i] != w[off + static_cast<std::size_t>(k)]) {
            k = b[static_cast<std::size_t>(k)];
        }
        if (w[off + i] == w[off + static_cast<std::size_t>(k)]) ++k;
        b[i + 1] = k;
    }
    return b;
}

bool is_primitive_factor(const Word& w, std::size_t off, std::size_t len) {
    const auto b = border_array(w, off, len);
    const std::size_t per = len - static_cast<std::size_t>(b[len]);
    return per == len || len % per != 0;
}

}  // namespace

std::int64_t minimal_period(const Word& w) {
    const auto b = border_array(w, 0, w.size());
    return static_cast<std::int64_t>(w.size()) - b[w.size()];
}

std::vector<Run> find_runs(const Word& w) {
    const std::int64_t n = static_cast<std::int64_t>(w.size());
    std::vector<Run> runs;
    for (std::int64_t p = 1; 2 * p <= n; ++p) {
        std::int64_t i = 0;
        while (i + p < n) {
            if (w[static_cast<std::size_t>(i)] != w[static_cast<std::size_t>(i + p)]) {
                ++i;
                continue;
            }
            std::int64_t j = i;
            while (j + p < n && w[static_cast<std::size_t>(j)] == w[static_cast<std::size_t>(j + p)]) {
                ++j;
            }
            // matches at i..j-1, factor w[i..j-1+p] has period p
            const std::int64_t len = (j - i) + p;
            if (len >= 2 * p &&
                is_primitive_factor(w, static_cast<std::size_t>(i), static_cast<std::size_t>(p))) {
                runs.push_back(Run{i + 1, i + len, p});
            }
            i = j + 1;
        }
    }
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
        if (a.start != b.start) return a.start < b.start;
        return a.period < b.period;
    });
    return runs;
}

NormalizedRun normalize(const Run& r, const Word& w) {
    NormalizedRun out;
    out.start = r.start;
    out.g = w.substr(static_cast<std::size_t>(r.start - 1), static_cast<std::size_t>(r.period));
    out.k = r.length() / r.period;
    out.e = w.substr(static_cast<std::size_t>(r.start - 1 + out.k * r.period),
                     static_cast<std::size_t>(r.length() - out.k * r.period));
    return out;
}

std::pair<Word, std::int64_t> primitive_root(const Word& w) {
    if (w.empty()) throw std::invalid_argument("primitive_root of empty word");
    const std::size_t n = w.size();
    const auto b = border_array(w, 0, n);
    const std::size_t per = n - static_cast<std::size_t>(b[n]);
    if (n % per == 0) {
        return {w.substr(0, per), static_cast<std::int64_t>(n / per)};
    }
    return {w, 1};
}

std::int64_t integer_index(const Word& w) {
    std::int64_t best = 1;
    for (const Run& r : find_runs(w)) {
        best = std::max(best, r.length() / r.period);
    }
    return best;
}

Rational fractional_index(const Word& w) {
    Rational best{1, 1};
    for (const Run& r : find_runs(w)) {
        // compare r.length()/r.period against best
        if (r.length() * best.den > best.num * r.period) {
            const std::int64_t g = std::gcd(r.length(), r.period);
            best = Rational{r.length() / g, r.period / g};
        }
    }
    return best;
}

}  // namespace sturm
