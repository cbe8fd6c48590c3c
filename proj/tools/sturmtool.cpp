// Command-line front end: generate levels, list or count runs, evaluate
// the index formulas, inspect the nested expression, and cross-check the
// fast enumeration against the quadratic scanner.
//
// Exit codes: 0 success, 1 verification mismatch, 2 bad usage or input,
// 3 word-length guard tripped.

#include <cstdint>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sturm/characterize.hpp"
#include "sturm/eta.hpp"
#include "sturm/oracle.hpp"
#include "sturm/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

sturm::DefiningSequence random_sequence(std::mt19937& rng, std::int64_t max_p,
                                        std::int64_t max_len) {
    std::uniform_int_distribution<std::int64_t> np(1, max_p);
    std::uniform_int_distribution<int> coin(0, 1);
    sturm::DefiningSequence pi;
    std::int64_t na = 1, nb = 0;
    for (;;) {
        const std::int64_t p = np(rng);
        const std::int64_t pp = (p == 1 || coin(rng) == 0) ? p + 1 : p - 1;
        const std::int64_t na2 = na * p + nb * pp, nb2 = na + nb;
        if (na2 + nb2 > max_len) break;
        pi.push_back({p, pp});
        na = na2;
        nb = nb2;
    }
    return pi;
}

int run_verify(const std::string& pi_text, std::int64_t random_count, std::int64_t max_p,
               std::uint32_t seed, std::int64_t max_len) {
    std::vector<sturm::DefiningSequence> batch;
    if (!pi_text.empty()) {
        batch.push_back(sturm::parse_defining_sequence(pi_text));
    } else {
        std::mt19937 rng(seed);
        while (static_cast<std::int64_t>(batch.size()) < random_count) {
            sturm::DefiningSequence pi = random_sequence(rng, max_p, max_len);
            if (!pi.empty()) batch.push_back(std::move(pi));
        }
    }
    int mismatches = 0;
    for (const sturm::DefiningSequence& pi : batch) {
        const sturm::Word w = sturm::generate(pi, max_len);
        const std::vector<sturm::Run> fast = sturm::enumerate_runs(pi, max_len);
        const std::vector<sturm::Run> slow = sturm::find_runs(w);
        const bool ok = fast == slow;
        if (!ok) ++mismatches;
        std::cout << (ok ? "ok      " : "MISMATCH") << "  len=" << w.size()
                  << "  runs=" << fast.size() << "  pi=" << sturm::to_string(pi) << '\n';
    }
    std::cout << batch.size() << " sequence(s), " << mismatches << " mismatch(es)\n";
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Sturmian words: generation, runs, indexes"};
    app.require_subcommand(1);

    std::string pi_text;
    std::int64_t max_len = sturm::word_length_guard_from_env();
    std::int64_t random_count = 0, max_p = 3;
    std::uint32_t seed = 1;
    std::int64_t at = 0;
    bool count_only = false, all_levels = false, show_text = false;

    auto add_pi = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--pi", pi_text, "defining sequence, e.g. \"2,1;2,1\"");
        if (required) opt->required();
        sub->add_option("--max-len", max_len, "word length guard");
    };

    CLI::App* cmd_generate = app.add_subcommand("generate", "print the generated word");
    add_pi(cmd_generate, true);
    cmd_generate->add_flag("--levels", all_levels, "print every level, one per line");

    CLI::App* cmd_runs = app.add_subcommand("runs", "list runs as start end period");
    add_pi(cmd_runs, true);
    cmd_runs->add_flag("--count", count_only, "print only the number of runs");

    CLI::App* cmd_index = app.add_subcommand("index", "integer index from the closed formula");
    add_pi(cmd_index, true);

    CLI::App* cmd_count = app.add_subcommand("count", "run count via the fast enumeration");
    add_pi(cmd_count, true);

    CLI::App* cmd_eta = app.add_subcommand("eta", "evaluate the nested expression");
    add_pi(cmd_eta, true);
    cmd_eta->add_flag("--text", show_text, "also print the rendered expression");
    cmd_eta->add_option("--at", at, "print the letter at this 1-based position");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "fast enumeration vs. quadratic scanner");
    add_pi(cmd_verify, false);
    cmd_verify->add_option("--random", random_count, "number of random sequences");
    cmd_verify->add_option("--max-p", max_p, "largest p drawn for random pairs");
    cmd_verify->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_generate) {
            const sturm::DefiningSequence pi = sturm::parse_defining_sequence(pi_text);
            if (all_levels) {
                for (const sturm::Word& w : sturm::generate_levels(pi, max_len).words)
                    std::cout << w << '\n';
            } else {
                std::cout << sturm::generate(pi, max_len) << '\n';
            }
        } else if (*cmd_runs) {
            const sturm::DefiningSequence pi = sturm::parse_defining_sequence(pi_text);
            if (count_only) {
                std::cout << sturm::enumerate_runs_count(pi, max_len) << '\n';
            } else {
                for (const sturm::Run& r : sturm::enumerate_runs(pi, max_len))
                    std::cout << r.start << ' ' << r.end << ' ' << r.period << '\n';
            }
        } else if (*cmd_index) {
            const sturm::DefiningSequence pi = sturm::parse_defining_sequence(pi_text);
            std::cout << sturm::integer_index_formula(pi) << '\n';
        } else if (*cmd_count) {
            const sturm::DefiningSequence pi = sturm::parse_defining_sequence(pi_text);
            std::cout << sturm::enumerate_runs_count(pi, max_len) << '\n';
        } else if (*cmd_eta) {
            const sturm::DefiningSequence pi = sturm::parse_defining_sequence(pi_text);
            const sturm::EtaExpr e = sturm::build_eta(pi);
            std::cout << "value " << sturm::eval_eta(e) << '\n';
            if (show_text) std::cout << sturm::to_text(e) << '\n';
            if (at > 0) std::cout << sturm::letter_at(e, at) << '\n';
        } else if (*cmd_verify) {
            return run_verify(pi_text, random_count, max_p, seed, max_len);
        }
    } catch (const sturm::GuardExceeded& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
