#include "sturm/characterize.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sturm {
namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using u16 = std::uint16_t;

// A periodic interval carried across levels. Letter counts instead of
// endpoints keep the reflection step a pure local computation; the
// period is shared through a per-level side table.
struct Iv {
    u32 s = 0;  // 1-based start
    u32 len = 0;
    u32 ib = 0;  // number of b's in the interval
    u16 pid = 0;
};

struct Per {
    u64 pa = 0, pb = 0;  // letter counts of the period

    u64 q() const { return pa + pb; }
};

// Pattern occurrences in the previous level that spawn runs in the
// current one. `key` is the prefix length whose image length M must be
// known before the seed can be placed.
enum class RecType { kBab, kTrio, kSuffix };

struct Rec {
    i64 key = 0;
    RecType type = RecType::kBab;
    i64 m = 0, nn = 0;
    i64 M = 0;  // filled by the sweep
};

// Maximal q-periodic interval around [lo..hi]; false when the survivor
// is shorter than q+1 (no chance of ever reaching exponent 2).
bool canonicalize(const Word& w, i64 lo, i64 hi, i64 q, i64& out_lo, i64& out_hi) {
    const i64 n = static_cast<i64>(w.size());
    lo = std::max<i64>(lo, 1);
    hi = std::min<i64>(hi, n);
    if (hi - lo + 1 < q) return false;
    while (lo > 1 && w[lo - 2] == w[lo - 2 + q]) --lo;
    while (hi < n && w[hi] == w[hi - q]) ++hi;
    if (hi - lo + 1 < q + 1) return false;
    out_lo = lo;
    out_hi = hi;
    return true;
}

i64 count_b(const Word& w, i64 lo, i64 hi) {
    return std::count(w.begin() + (lo - 1), w.begin() + hi, kB);
}

// 1-based positions of b in w, with a virtual b at position 0: the word
// start behaves like a block boundary for pattern scanning.
std::vector<i64> b_positions_with_virtual(const Word& w) {
    std::vector<i64> bs{0};
    for (i64 x = 0; x < static_cast<i64>(w.size()); ++x)
        if (w[x] == kB) bs.push_back(x + 1);
    return bs;
}

// Pattern records of prev in ascending key order.
std::vector<Rec> collect_records(const Word& prev) {
    std::vector<Rec> recs;
    const std::vector<i64> bs = b_positions_with_virtual(prev);
    for (std::size_t k = 1; k < bs.size(); ++k) {
        const i64 t1 = bs[k - 1], t2 = bs[k];
        if (t2 - t1 - 1 == 1) recs.push_back({t1, RecType::kBab, 0, 0, 0});
        if (k + 1 < bs.size()) {
            const i64 t3 = bs[k + 1];
            const i64 m = t2 - t1 - 1, nn = t3 - t2 - 1;
            if (m >= 1 && nn >= 1) recs.push_back({t2 - 1, RecType::kTrio, m, nn, 0});
        }
    }
    if (!prev.empty() && prev.back() == kB)
        recs.push_back({static_cast<i64>(prev.size()) - 1, RecType::kSuffix, 0, 0, 0});
    assert(std::is_sorted(recs.begin(), recs.end(),
                          [](const Rec& a, const Rec& b) { return a.key < b.key; }));
    return recs;
}

void check_sequence(const DefiningSequence& pi, i64 max_len) {
    u64 na = 1, nb = 0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (!pi[i].valid())
            throw std::invalid_argument("invalid parameter pair at index " +
                                        std::to_string(i + 1));
        const u64 na2 = na * pi[i].p + nb * pi[i].p_prime;
        const u64 nb2 = na + nb;
        na = na2;
        nb = nb2;
        if (na + nb > static_cast<u64>(max_len))
            throw GuardExceeded("level " + std::to_string(i + 1) + " exceeds max length " +
                                std::to_string(max_len));
    }
}

// Level-by-level enumeration: detect the runs born at each level from
// the a-gaps of the level and the b-patterns of its predecessor, and
// push everything already found through the morphism by interval
// arithmetic. Sink receives each run of S_n exactly once, unordered.
template <typename EmitFn>
void enumerate_core(const DefiningSequence& pi, i64 max_len, EmitFn&& sink) {
    check_sequence(pi, max_len);
    if (pi.empty()) return;  // S_0 = "a" has no run
    const i64 n = static_cast<i64>(pi.size());

    std::vector<Iv> batch;
    std::vector<Per> pers;
    std::set<std::array<i64, 3>> boundary;  // runs touching position 1 or |S_n|

    Word prev;
    Word cur = "a";

    for (i64 lvl = 1; lvl <= n; ++lvl) {
        const ParamPair pair = pi[lvl - 1];
        const i64 p = pair.p, pp = pair.p_prime, pmin = pair.p_min(), pmax = pair.p_max();
        prev.swap(cur);
        cur = apply_morphism(pair, prev, max_len);
        const i64 plen = static_cast<i64>(prev.size());
        const i64 clen = static_cast<i64>(cur.size());
        const bool last = (lvl == n);

        // Periods of carried intervals become their images; the map is
        // injective (determinant p - p' = +-1), so pids are stable.
        for (Per& pe : pers) pe = {pe.pa * p + pe.pb * pp, pe.pa + pe.pb};

        // One pass over prev computing image lengths of its prefixes,
        // serving both the carried intervals (sorted by start) and the
        // pattern records (sorted by key).
        std::vector<Rec> recs = collect_records(prev);
        {
            std::size_t bi = 0, ri = 0;
            i64 cum = 0;  // image length of prev[1..x]
            for (i64 x = 0; x <= plen; ++x) {
                for (; bi < batch.size() && static_cast<i64>(batch[bi].s) - 1 == x; ++bi) {
                    Iv& iv = batch[bi];
                    const i64 len = iv.len, ib = iv.ib, ia = len - ib;
                    const i64 e = iv.s + len - 1;
                    const bool at_l = (iv.s == 1), at_r = (e == plen);
                    const i64 s2 = at_l ? 1 : cum - pmin;
                    const i64 ib2 = len + (at_l ? 0 : 1);
                    const i64 ia2 = ia * p + ib * pp + (at_l ? 0 : pmin) + (at_r ? 0 : pmin);
                    assert(s2 >= 1 && s2 + ia2 + ib2 - 1 <= clen);
                    iv.s = static_cast<u32>(s2);
                    iv.len = static_cast<u32>(ia2 + ib2);
                    iv.ib = static_cast<u32>(ib2);
                }
                for (; ri < recs.size() && recs[ri].key == x; ++ri) recs[ri].M = cum;
                if (x < plen) cum += (prev[x] == kA ? p + 1 : pp + 1);
            }
        }

        std::vector<Iv> seeds;
        std::map<std::pair<u64, u64>, u16> pid_of;
        if (!last)
            for (std::size_t j = 0; j < pers.size(); ++j)
                pid_of[{pers[j].pa, pers[j].pb}] = static_cast<u16>(j);

        auto emit_run = [&](i64 lo, i64 hi, i64 q) {
            if (hi - lo + 1 < 2 * q) return;
            if (lo == 1 || hi == clen)
                boundary.insert({lo, hi, q});
            else
                sink(lo, hi, q);
        };

        // A new seed is kept from exponent (q+1)/q on: one reflection
        // closes a one-letter deficit, so near-squares must be carried.
        auto add_seed = [&](i64 lo0, i64 hi0, i64 q, u64 pa, u64 pb) {
            i64 lo, hi;
            if (!canonicalize(cur, lo0, hi0, q, lo, hi)) return;
            if (last) {
                emit_run(lo, hi, q);
                return;
            }
            auto [it, fresh] = pid_of.try_emplace({pa, pb}, static_cast<u16>(pers.size()));
            if (fresh) {
                if (pers.size() >= 65535) throw std::length_error("period table overflow");
                pers.push_back({pa, pb});
            }
            seeds.push_back({static_cast<u32>(lo), static_cast<u32>(hi - lo + 1),
                             static_cast<u32>(count_b(cur, lo, hi)), it->second});
        };

        // Period-a runs: every a-gap of length >= 2, including the
        // leading one. These are born maximal.
        {
            i64 prev_b = 0;
            for (i64 x = 0; x < clen; ++x) {
                if (cur[x] != kB) continue;
                const i64 gap = (x + 1) - prev_b - 1;
                if (gap >= 2) add_seed(prev_b + 1, prev_b + gap, 1, 1, 0);
                prev_b = x + 1;
            }
        }

        // Pattern-driven squares. Centers sit at the image of the
        // pattern's middle letter; candidates are clipped to the word
        // and grown to their maximal interval.
        for (const Rec& r : recs) {
            switch (r.type) {
                case RecType::kBab: {
                    // b a b: one square around the image of the a.
                    const i64 q = (p < pp) ? pmin + 1 : pmin + 2;
                    const i64 c = (p < pp) ? r.M + 1 : r.M + 2;
                    const u64 pa = (p < pp) ? pmin : pmin + 1;
                    add_seed(c - q, c + q - 1, q, pa, 1);
                    break;
                }
                case RecType::kTrio: {
                    // b a^m b a^n b: a family of squares around the
                    // image of the middle b.
                    const i64 jcap = std::min(r.m, r.nn);
                    if (p > pp) {
                        for (i64 j = 0; j < jcap; ++j) {
                            const i64 q = (pmin + 1) + j * (pmax + 1);
                            add_seed(r.M + 1 - q, r.M + q, q,
                                     static_cast<u64>(pmin + j * pmax), static_cast<u64>(1 + j));
                        }
                    } else {
                        for (i64 j = 1; j <= jcap; ++j) {
                            const i64 q = j * (pmin + 1) + 1;
                            add_seed(r.M + 2 - q, r.M + q + 1, q,
                                     static_cast<u64>(j * pmin + 1), static_cast<u64>(j));
                        }
                    }
                    break;
                }
                case RecType::kSuffix: {
                    // The final b of prev seeds the suffix repetition of
                    // the current level: its image block preceded by the
                    // a^pmin tail of the block before it.
                    const i64 q = pp + 1;
                    add_seed(r.M - pmin, clen, q, static_cast<u64>(pp), 1);
                    break;
                }
            }
        }

        if (last) {
            // Carried intervals are now intervals of S_n. The extension
            // scan is a safety net; arithmetic should land them maximal.
            for (const Iv& iv : batch) {
                const Per& pe = pers[iv.pid];
                const i64 q = static_cast<i64>(pe.q());
                i64 lo, hi;
                if (canonicalize(cur, iv.s, iv.s + iv.len - 1, q, lo, hi)) emit_run(lo, hi, q);
            }
        } else {
            std::sort(seeds.begin(), seeds.end(),
                      [](const Iv& a, const Iv& b) { return a.s < b.s; });
            const std::size_t mid = batch.size();
            batch.insert(batch.end(), seeds.begin(), seeds.end());
            std::inplace_merge(batch.begin(), batch.begin() + mid, batch.end(),
                               [](const Iv& a, const Iv& b) { return a.s < b.s; });
        }
    }

    for (const auto& r : boundary) sink(r[0], r[1], r[2]);
}

// Image length of w[1..len] under pair.
i64 prefix_image_length(const ParamPair& pair, const Word& w, i64 len) {
    i64 cum = 0;
    for (i64 x = 0; x < len; ++x) cum += (w[x] == kA ? pair.p : pair.p_prime) + 1;
    return cum;
}

bool is_periodic(const Word& w, i64 lo, i64 hi, i64 q) {
    for (i64 x = lo; x + q <= hi; ++x)
        if (w[x - 1] != w[x - 1 + q]) return false;
    return true;
}

// Shared by original_runs and the factor variant: validated canonical
// run around a claimed square.
bool settle_candidate(const Word& w, i64 center, i64 q, Run& out) {
    i64 lo, hi;
    if (!canonicalize(w, center - q, center + q - 1, q, lo, hi)) return false;
    if (hi - lo + 1 < 2 * q) return false;
    if (!is_periodic(w, lo, hi, q)) return false;
    if (minimal_period(w.substr(lo - 1, hi - lo + 1)) != q) return false;
    out = {lo, hi, q};
    return true;
}

}  // namespace

const char* to_string(RunForm f) {
    switch (f) {
        case RunForm::I: return "I";
        case RunForm::II: return "II";
        case RunForm::III: return "III";
        case RunForm::IV: return "IV";
        case RunForm::V: return "V";
    }
    return "?";
}

std::vector<OriginalRun> original_runs(const DefiningSequence& pi, i64 level, i64 max_len) {
    if (level < 1 || level > static_cast<i64>(pi.size()))
        throw std::invalid_argument("level out of range");
    const Levels levels = generate_levels(pi, max_len);
    const Word s0 = "a";
    const Word& prev = level == 1 ? s0 : levels.words[level - 2];
    const Word& cur = levels.words[level - 1];
    const ParamPair pair = pi[level - 1];
    const i64 p = pair.p, pp = pair.p_prime, pmin = pair.p_min(), pmax = pair.p_max();

    std::vector<OriginalRun> out;
    auto push = [&](RunForm form, i64 center, i64 q) {
        Run r;
        if (!settle_candidate(cur, center, q, r)) return;
        const NormalizedRun nr = normalize(r, cur);
        out.push_back({level, form, nr.g, nr.k, nr.e, center, r});
    };

    {
        i64 prev_b = 0;
        for (i64 x = 0; x < static_cast<i64>(cur.size()); ++x) {
            if (cur[x] != kB) continue;
            const i64 gap = (x + 1) - prev_b - 1;
            if (gap >= 2)
                out.push_back({level, RunForm::I, "a", gap, "", prev_b + 1,
                               {prev_b + 1, prev_b + gap, 1}});
            prev_b = x + 1;
        }
    }

    for (const Rec& rec : collect_records(prev)) {
        if (rec.type == RecType::kSuffix) continue;  // not an original form
        const i64 M = prefix_image_length(pair, prev, rec.key);
        if (rec.type == RecType::kBab) {
            if (p < pp)
                push(RunForm::IV, M + 1, pmin + 1);
            else
                push(RunForm::V, M + 2, pmin + 2);
        } else if (p > pp) {
            for (i64 j = 0; j < std::min(rec.m, rec.nn); ++j)
                push(RunForm::II, M + 1, (pmin + 1) + j * (pmax + 1));
        } else {
            for (i64 j = 1; j <= std::min(rec.m, rec.nn); ++j)
                push(RunForm::III, M + 2, j * (pmin + 1) + 1);
        }
    }

    std::sort(out.begin(), out.end(), [](const OriginalRun& a, const OriginalRun& b) {
        return std::tie(a.interval.start, a.interval.period) <
               std::tie(b.interval.start, b.interval.period);
    });
    return out;
}

std::vector<FactorOriginalRun> original_runs_in_factor(const Word& x) {
    const i64 n = static_cast<i64>(x.size());
    // Interior a-gaps determine the parameter pair: the repeating block
    // length is the one occurring twice in a row.
    std::vector<i64> bpos;
    for (i64 t = 0; t < n; ++t)
        if (x[t] == kB) bpos.push_back(t + 1);
    if (bpos.size() < 2) return {};

    std::vector<i64> gaps;  // interior gaps, between consecutive b's
    for (std::size_t k = 1; k < bpos.size(); ++k) gaps.push_back(bpos[k] - bpos[k - 1] - 1);
    const i64 gmin = *std::min_element(gaps.begin(), gaps.end());
    const i64 gmax = *std::max_element(gaps.begin(), gaps.end());
    if (gmin < 1 || gmax - gmin > 1)
        throw std::invalid_argument("not a factor of a morphism level");

    i64 repeating = -1;
    for (std::size_t k = 1; k < gaps.size(); ++k)
        if (gaps[k] == gaps[k - 1]) {
            if (repeating != -1 && repeating != gaps[k])
                throw std::invalid_argument("not a factor of a morphism level");
            repeating = gaps[k];
        }
    if (gmax == gmin || repeating == -1)
        throw std::invalid_argument("block structure is ambiguous");
    const i64 p = repeating, pp = gmax + gmin - repeating;
    const i64 pmin = std::min(p, pp), pmax = pmin + 1;

    // Token sequence of the inverse image: full blocks classified as
    // repeating or not, plus boundary tokens. A partial leading block
    // (or bare b) and the word ends all act as non-repeating boundaries.
    struct Tok {
        bool is_b = false;   // non-repeating block or boundary
        i64 start = 0;       // block start in x; 0 for virtual tokens
    };
    std::vector<Tok> toks;
    const i64 lead = bpos[0] - 1;
    if (lead > pmax) throw std::invalid_argument("not a factor of a morphism level");
    toks.push_back({true, 0});  // boundary: virtual b, or the partial leading block
    for (std::size_t k = 0; k < bpos.size(); ++k) {
        const i64 gap = (k == 0) ? lead : gaps[k - 1];
        if (k == 0 && lead < pmin) continue;  // partial, folded into the boundary token
        toks.push_back({gap != p, bpos[k] - gap});
    }
    toks.push_back({true, 0});  // end boundary

    std::vector<FactorOriginalRun> out;
    auto push = [&](RunForm form, i64 center, i64 q) {
        Run r;
        if (!settle_candidate(x, center, q, r)) return;
        out.push_back({form, normalize(r, x), center});
    };

    std::vector<std::size_t> bidx;
    for (std::size_t t = 0; t < toks.size(); ++t)
        if (toks[t].is_b) bidx.push_back(t);
    for (std::size_t k = 0; k + 1 < bidx.size(); ++k) {
        const i64 m = static_cast<i64>(bidx[k + 1] - bidx[k]) - 1;
        // b a b in the inverse image: one R block between boundaries.
        if (m == 1) {
            const i64 rstart = toks[bidx[k] + 1].start;
            if (p < pp)
                push(RunForm::IV, rstart, pmin + 1);
            else
                push(RunForm::V, rstart + 1, pmin + 2);
        }
        if (k + 2 >= bidx.size()) continue;
        const i64 nn = static_cast<i64>(bidx[k + 2] - bidx[k + 1]) - 1;
        const Tok& mid = toks[bidx[k + 1]];
        if (m < 1 || nn < 1 || mid.start == 0) continue;  // middle must be a real block
        if (p > pp)
            for (i64 j = 0; j < std::min(m, nn); ++j)
                push(RunForm::II, mid.start, (pmin + 1) + j * (pmax + 1));
        else
            for (i64 j = 1; j <= std::min(m, nn); ++j)
                push(RunForm::III, mid.start + 1, j * (pmin + 1) + 1);
    }

    {
        i64 prev_b = 0;
        for (const i64 b : bpos) {
            const i64 gap = b - prev_b - 1;
            if (gap >= 2) out.push_back({RunForm::I,
                                         normalize({prev_b + 1, prev_b + gap, 1}, x),
                                         prev_b + 2});
            prev_b = b;
        }
        const i64 tail = n - (bpos.empty() ? 0 : bpos.back());
        if (tail >= 2)
            out.push_back({RunForm::I, normalize({n - tail + 1, n, 1}, x), n - tail + 2});
    }

    std::sort(out.begin(), out.end(), [](const FactorOriginalRun& a, const FactorOriginalRun& b) {
        return std::tie(a.run.start, a.run.g) < std::tie(b.run.start, b.run.g);
    });
    return out;
}

namespace {

Run reflect_interval(const Run& r, const Word& low, const Word& high, const ParamPair& pair) {
    const i64 a_img = pair.p + 1, b_img = pair.p_prime + 1;
    i64 ms = 0;
    for (i64 x = 0; x < r.start - 1; ++x) ms += (low[x] == kA ? a_img : b_img);
    i64 me = ms;
    i64 qi = 0;
    for (i64 x = r.start - 1; x < r.end; ++x) {
        const i64 w = (low[x] == kA ? a_img : b_img);
        me += w;
        if (x < r.start - 1 + r.period) qi += w;
    }
    i64 lo, hi;
    if (!canonicalize(high, ms + 1, me, qi, lo, hi))
        throw std::logic_error("reflection lost periodicity");
    return {lo, hi, qi};
}

}  // namespace

NormalizedRun reflect_once(const NormalizedRun& r, const Word& s_i, const ParamPair& pair) {
    const i64 q = static_cast<i64>(r.g.size());
    const i64 len = r.k * q + static_cast<i64>(r.e.size());
    const i64 lo = r.start, hi = lo + len - 1;
    if (!pair.valid()) throw std::invalid_argument("invalid parameter pair");
    if (lo < 1 || hi > static_cast<i64>(s_i.size()) || r.k < 2 ||
        s_i.compare(lo - 1, q, r.g) != 0 || !is_periodic(s_i, lo, hi, q) ||
        (lo > 1 && s_i[lo - 2] == s_i[lo - 2 + q]) ||
        (hi < static_cast<i64>(s_i.size()) && s_i[hi] == s_i[hi - q]))
        throw std::invalid_argument("not a run of the given word");
    const Word next = apply_morphism(pair, s_i, std::numeric_limits<i64>::max() / 4);
    return normalize(reflect_interval({lo, hi, q}, s_i, next, pair), next);
}

ReflectedRun reflect_to_top(const OriginalRun& r, const DefiningSequence& pi, i64 max_len) {
    const i64 n = static_cast<i64>(pi.size());
    if (r.level < 1 || r.level > n) throw std::invalid_argument("level out of range");
    const Levels levels = generate_levels(pi, max_len);
    Run cur = r.interval;
    i64 anchor = r.anchor;
    for (i64 i = r.level; i < n; ++i) {
        const Word& low = levels.words[i - 1];
        const Word& high = levels.words[i];
        anchor = prefix_image_length(pi[i], low, anchor - 1) + 1;
        cur = reflect_interval(cur, low, high, pi[i]);
    }
    const Word& top = levels.words[n - 1];
    // Align occurrences of the period chain to the image of the anchor
    // (the second occurrence); whatever sticks out on the left is e1.
    const i64 f =
        cur.start + (((anchor - cur.start) % cur.period) + cur.period) % cur.period;
    const i64 k = (cur.end - f + 1) / cur.period;
    ReflectedRun out;
    out.base = r;
    out.target_level = n;
    out.g = top.substr(f - 1, cur.period);
    out.k = k;
    out.e1 = top.substr(cur.start - 1, f - cur.start);
    out.e2 = top.substr(f - 1 + k * cur.period, cur.end - (f + k * cur.period) + 1);
    out.interval = cur;
    return out;
}

std::vector<Run> enumerate_runs(const DefiningSequence& pi, i64 max_len) {
    std::vector<Run> out;
    enumerate_core(pi, max_len, [&](i64 s, i64 e, i64 q) { out.push_back({s, e, q}); });
    std::sort(out.begin(), out.end(), [](const Run& a, const Run& b) {
        return std::tie(a.start, a.period) < std::tie(b.start, b.period);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t enumerate_runs_count(const DefiningSequence& pi, i64 max_len) {
    i64 count = 0;
    enumerate_core(pi, max_len, [&](i64, i64, i64) { ++count; });
    return count;
}

DistinctCounts count_distinct(const DefiningSequence& applied, const DistinctCounts& base,
                              bool sum_to_n) {
    const i64 n = static_cast<i64>(applied.size());
    if (n == 0) return base;
    i64 sum = 0;
    for (i64 i = 1; i <= (sum_to_n ? n : n - 1); ++i) sum += applied[i - 1].p;
    const i64 g = base.periods + n + sum;
    const i64 k = (applied.back().p_min() == 1) ? 1 : 0;
    return {g, g + n - k};
}

DistinctCounts oracle_distinct_counts(const Word& w) {
    // G = distinct normalized periods; R' = distinct normalized triples
    // with at least one occurrence clear of both word boundaries.
    const std::vector<Run> rs = find_runs(w);
    std::set<Word> periods;
    std::set<std::tuple<Word, i64, Word>> interior;
    for (const Run& r : rs) {
        const NormalizedRun nr = normalize(r, w);
        periods.insert(nr.g);
        if (r.start >= 2 && r.end <= static_cast<i64>(w.size()) - 1)
            interior.insert({nr.g, nr.k, nr.e});
    }
    return {static_cast<i64>(periods.size()), static_cast<i64>(interior.size())};
}

std::int64_t integer_index_formula(const DefiningSequence& pi) {
    // The index of S_n is attained by a run that starts life as a block of
    // a's (an inter-b gap) at some level i and is then carried upward.  A gap
    // of size v is a run of order v at its own level.  One application of the
    // morphism extends it on the left past the preceding b and raises the
    // order to v+1 -- but only when there is a b on the left at all, i.e. the
    // gap must be interior.  The leading gap of a level has no left context
    // and its order never grows.  A second application raises the order once
    // more, to v+2, exactly when the next pair has p' > p (the b-image then
    // supplies a full extra period on the left); after that the order is
    // stable.  So each level contributes a handful of candidates and the
    // index is their maximum.
    //
    // Occurrence bookkeeping: the gaps of S_i are the images of the letters
    // of S_{i-1} (a -> gap p_i, b -> gap p'_i).  The leading gap is always
    // p_i.  An interior gap of size p_i needs a non-leading a in S_{i-1},
    // which exists for i-1 >= 2 always and for i-1 == 1 iff p_1 >= 2.  A gap
    // of size p'_i needs a b in S_{i-1}, i.e. i >= 2, and is always interior.
    const i64 n = static_cast<i64>(pi.size());
    i64 best = 1;
    for (i64 i = 1; i <= n; ++i) {
        const bool interior_a = (i >= 3) || (i == 2 && pi[0].p >= 2);
        struct Gap { i64 value; bool interior; };
        std::array<Gap, 2> gaps{{{pi[i - 1].p, interior_a},
                                 {pi[i - 1].p_prime, true}}};
        const int count = (i >= 2) ? 2 : 1;
        for (int gi = 0; gi < count; ++gi) {
            const auto [v, interior] = gaps[static_cast<std::size_t>(gi)];
            if (v < 2) continue;
            i64 cand = v;
            if (interior && i <= n - 1) {
                ++cand;
                if (i <= n - 2 && pi[i].p_prime > pi[i].p) ++cand;
            }
            best = std::max(best, cand);
        }
    }
    return best;
}

}  // namespace sturm
