#include "sturm/eta.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace sturm {
namespace {

using i64 = std::int64_t;

i64 checked_mul_add(i64 a, i64 b, i64 c) {
    const __int128 v = static_cast<__int128>(a) * b + c;
    if (v > std::numeric_limits<i64>::max()) throw std::overflow_error("eta value overflow");
    return static_cast<i64>(v);
}

}  // namespace

EtaExpr build_eta(const DefiningSequence& pi) {
    const i64 n = static_cast<i64>(pi.size());
    if (n < 1) throw std::invalid_argument("empty defining sequence");
    for (std::size_t i = 0; i < pi.size(); ++i)
        if (!pi[i].valid())
            throw std::invalid_argument("invalid parameter pair at index " + std::to_string(i + 1));

    // Bottom-up: block(j) is the expansion of a^{p_j} b through the
    // remaining levels, block_p(j) the same for the primed gap. The
    // 1-term of a block expands inline (a b becomes a^{p'} b), which is
    // what keeps exactly one 1-term per parenthesis level.
    std::shared_ptr<const EtaNode> block, block_p;
    for (i64 j = n; j >= 1; --j) {
        const i64 p = pi[j - 1].p, pp = pi[j - 1].p_prime;
        auto make = [&](i64 gap) {
            auto node = std::make_shared<EtaNode>();
            if (j == n) {
                node->terms.push_back({gap, false, nullptr});
                node->terms.push_back({1, true, nullptr});
                node->value = gap + 1;
            } else {
                node->terms.push_back({gap, false, block});
                node->terms.insert(node->terms.end(), block_p->terms.begin(),
                                   block_p->terms.end());
                node->value = checked_mul_add(gap, block->value, block_p->value);
            }
            return node;
        };
        auto nb = make(p);
        auto nbp = make(pp);
        block = std::move(nb);
        block_p = std::move(nbp);
    }
    return {block, pi};
}

std::int64_t eval_eta(const EtaExpr& e) {
    if (!e.root) throw std::invalid_argument("empty expression");
    return e.root->value;
}

char letter_at(const EtaExpr& e, std::int64_t j) {
    if (!e.root || j < 1 || j > e.root->value) throw std::out_of_range("position out of range");
    const EtaNode* node = e.root.get();
    for (;;) {
        const EtaNode* next = nullptr;
        for (const auto& t : node->terms) {
            const i64 span = t.group ? t.value * t.group->value : t.value;
            if (j > span) {
                j -= span;
                continue;
            }
            if (t.is_one) return kB;
            if (!t.group) return kA;
            j = (j - 1) % t.group->value + 1;
            next = t.group.get();
            break;
        }
        if (!next) throw std::logic_error("inconsistent eta expression");
        node = next;
    }
}

bool check_one_term_rule(const EtaExpr& e) {
    std::set<const EtaNode*> seen;
    auto visit = [&](auto&& self, const EtaNode* node) -> bool {
        if (!seen.insert(node).second) return true;
        int ones = 0;
        for (const auto& t : node->terms) {
            if (t.is_one) ++ones;
            if (t.group && !self(self, t.group.get())) return false;
        }
        return ones == 1;
    };
    return e.root && visit(visit, e.root.get());
}

std::int64_t count_run_occurrences(const EtaExpr& e) {
    // The per-level inventory the expression's P-terms stand for: a
    // magnitude >= 2 is a period-a repetition where it sits; a magnitude
    // of 1 spells bab one level down; every block adjacency b a^m b a^n b
    // yields min(m,n) squares one level down; and each level's closing
    // block repeats against the tail of its predecessor.
    const DefiningSequence& pi = e.pi;
    const i64 n = static_cast<i64>(pi.size());
    std::vector<i64> na{1}, nb{0};  // letter counts of S_0..S_{n-1}
    for (i64 i = 1; i < n; ++i) {
        na.push_back(na[i - 1] * pi[i - 1].p + nb[i - 1] * pi[i - 1].p_prime);
        nb.push_back(na[i - 1] + nb[i - 1]);
    }

    i64 total = 0;
    for (i64 i = 1; i <= n; ++i) {
        if (pi[i - 1].p >= 2) total += na[i - 1];
        if (pi[i - 1].p_prime >= 2) total += nb[i - 1];
        if (i >= 2) {
            const ParamPair& prev = pi[i - 2];
            // bab patterns: gaps of length 1 one level down.
            if (prev.p == 1) total += na[i - 2];
            if (prev.p_prime == 1) total += nb[i - 2];
            // b a^m b a^n b: one pattern per adjacent letter pair, each
            // contributing min(m,n); adjacent long-long pairs add 1 over
            // the pmin floor and only a-letters can neighbour themselves.
            const i64 len = na[i - 2] + nb[i - 2];
            total += prev.p_min() * (len - 1);
            if (prev.p > prev.p_prime && i - 2 >= 1) total += na[i - 2] - nb[i - 2];
            // Suffix repetition of level i; it falls short of exponent 2
            // at the last level when the short block repeats.
            if (i < n || pi[i - 1].p > pi[i - 1].p_prime) total += 1;
        }
    }
    return total;
}

std::string to_text(const EtaExpr& e) {
    std::string out;
    auto render = [&](auto&& self, const EtaNode* node) -> void {
        bool first = true;
        for (const auto& t : node->terms) {
            if (!first) out += '+';
            first = false;
            out += std::to_string(t.value);
            if (t.group) {
                out += '(';
                self(self, t.group.get());
                out += ')';
            }
        }
    };
    if (e.root) render(render, e.root.get());
    return out;
}

}  // namespace sturm
