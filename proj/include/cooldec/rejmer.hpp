#pragma once

// Rejmer's greedy construction of golden seeds of every length. After each
// step the string s_1..s_j is balanced (|sum| <= 1) and range-multiplicative.
//
// Step j: when j-1 is even the sum is 0 and nothing can break balance, so a
// composite j takes its forced multiplicative sign and a prime j takes -1.
// When j-1 is odd, j is even and s_j is forced; if the sum lands on +-2 the
// repair scans primes downward from j to just above j/2 for one whose sign
// equals the surplus and switches it, changing the sum by -+2. A prime above
// j/2 has no other multiple within 1..j, so the switch cannot disturb
// multiplicativity. If no prime qualifies the run halts (never observed; the
// paper conjectures it cannot happen).
//
// Composite signs are recomputed from the current prime signs at step time,
// so earlier switches propagate. Switched primes may themselves be switched
// back later; only positions <= j/2 are guaranteed stable at step j.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cooldec/common.hpp"
#include "cooldec/sieve.hpp"

namespace cooldec {

struct RejmerSwitch {
    std::int64_t step = 0;
    std::int64_t prime = 0;
    std::int8_t old_sign = 0;
};

struct RejmerRun {
    std::vector<std::int8_t> signs; // index 0 unused; signs[1..steps()]
    std::vector<RejmerSwitch> switches;
    bool halted = false;
    std::int64_t halt_step = 0; // the step that could not be repaired

    std::int64_t steps() const { return static_cast<std::int64_t>(signs.size()) - 1; }
};

using RejmerObserver = std::function<void(std::int64_t step, const std::vector<std::int8_t>& signs)>;

inline RejmerRun rejmer_run(std::int64_t steps, const RejmerObserver& observer = {}) {
    if (steps < 2) throw std::invalid_argument("rejmer_run: need at least 2 steps");
    auto spf = spf_sieve(steps);
    auto primes = primes_up_to(steps);

    RejmerRun run;
    run.signs.assign(static_cast<std::size_t>(steps) + 1, 0);
    run.signs[1] = 1;
    run.signs[2] = -1;
    std::int64_t sum = 0;
    if (observer) {
        observer(1, run.signs);
        observer(2, run.signs);
    }

    // index of the largest prime <= j, maintained incrementally
    std::size_t top = 0;
    while (top + 1 < primes.size() && primes[top + 1] <= 2) ++top;

    auto sign_from_primes = [&](std::int64_t n) {
        int s = 1;
        while (n > 1) {
            std::int64_t p = spf[n];
            s *= run.signs[p];
            n /= p;
        }
        return s;
    };

    for (std::int64_t j = 3; j <= steps; ++j) {
        while (top + 1 < primes.size() && primes[top + 1] <= j) ++top;
        const bool is_prime = spf[j] == j;
        if ((j - 1) % 2 == 0) {
            // sum is 0; no choice can break balance
            run.signs[j] = is_prime ? -1 : static_cast<std::int8_t>(sign_from_primes(j));
            sum += run.signs[j];
        } else {
            // j even, sign forced
            run.signs[j] = static_cast<std::int8_t>(sign_from_primes(j));
            sum += run.signs[j];
            if (sum == 2 || sum == -2) {
                const std::int8_t surplus = sum > 0 ? 1 : -1;
                bool repaired = false;
                for (std::size_t i = top + 1; i-- > 0;) {
                    std::int64_t p = primes[i];
                    if (2 * p <= j) break; // scan covers primes in (j/2, j]
                    if (run.signs[p] == surplus) {
                        run.switches.push_back({j, p, surplus});
                        run.signs[p] = -surplus;
                        sum -= 2 * surplus;
                        repaired = true;
                        break;
                    }
                }
                if (!repaired) {
                    run.halted = true;
                    run.halt_step = j;
                    run.signs.resize(static_cast<std::size_t>(j) + 1);
                    return run;
                }
            }
        }
        if (sum < -1 || sum > 1) throw std::logic_error("rejmer_run: balance invariant broken");
        if (observer) observer(j, run.signs);
    }
    return run;
}

// The string as it stood at step j, after the forced choice but before that
// step's repair switch. Reconstructed by undoing switches in reverse order.
inline std::vector<std::int8_t> signs_before_repair(const RejmerRun& run, std::int64_t j) {
    if (j < 1 || j > run.steps()) throw std::invalid_argument("signs_before_repair: step out of range");
    std::vector<std::int8_t> s(run.signs.begin(), run.signs.begin() + j + 1);
    for (auto it = run.switches.rbegin(); it != run.switches.rend(); ++it) {
        if (it->step < j) break;
        if (it->prime <= j) s[it->prime] = it->old_sign;
    }
    return s;
}

inline std::vector<std::int8_t> signs_after_step(const RejmerRun& run, std::int64_t j) {
    if (j < 1 || j > run.steps()) throw std::invalid_argument("signs_after_step: step out of range");
    std::vector<std::int8_t> s(run.signs.begin(), run.signs.begin() + j + 1);
    for (auto it = run.switches.rbegin(); it != run.switches.rend(); ++it) {
        if (it->step <= j) break;
        if (it->prime <= j) s[it->prime] = it->old_sign;
    }
    return s;
}

// Audits the switch log: every switch at step j must touch a prime in
// (j/2, j], i.e. values in the settled first half never change. Returns the
// first offending switch, if any.
inline std::optional<RejmerSwitch> stability_check(const RejmerRun& run) {
    for (const auto& sw : run.switches)
        if (2 * sw.prime <= sw.step || sw.prime > sw.step) return sw;
    return std::nullopt;
}

} // namespace cooldec
