#pragma once

// Golden seeds: +-1 strings s_1..s_k with s_{ij} = s_i * s_j whenever
// ij <= k (range multiplicativity) and total sum in {-1, 0, 1}. A golden
// seed extends to a completely multiplicative coloring of N whose length-k
// cascades are all balanced.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cooldec/common.hpp"
#include "cooldec/multiplicative.hpp"
#include "cooldec/sieve.hpp"

namespace cooldec {

struct Seed {
    std::vector<std::int8_t> signs; // index 0 unused; signs[1..k]

    int k() const { return static_cast<int>(signs.size()) - 1; }

    std::int64_t sum() const {
        std::int64_t s = 0;
        for (int i = 1; i <= k(); ++i) s += signs[i];
        return s;
    }

    bool is_golden() const {
        auto s = sum();
        return -1 <= s && s <= 1;
    }

    // full audit of condition (i) over all products within range
    bool range_multiplicative() const {
        if (k() >= 1 && signs[1] != 1) return false;
        for (int a = 2; a <= k(); ++a)
            for (int b = a; a * b <= k(); ++b)
                if (signs[a * b] != signs[a] * signs[b]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(k());
        for (int i = 1; i <= k(); ++i) s.push_back(signs[i] > 0 ? '+' : '-');
        return s;
    }

    // Fills composites from prime signs via smallest prime factors.
    static Seed from_prime_signs(int k, const std::function<int(std::int64_t)>& prime_sign) {
        if (k < 1) throw std::invalid_argument("Seed: k must be >= 1");
        auto spf = spf_sieve(k);
        Seed s;
        s.signs.assign(k + 1, 0);
        s.signs[1] = 1;
        for (int n = 2; n <= k; ++n) {
            if (spf[n] == n) {
                int v = prime_sign(n);
                if (v != 1 && v != -1) throw std::invalid_argument("Seed: prime sign must be +-1");
                s.signs[n] = static_cast<std::int8_t>(v);
            } else {
                s.signs[n] = static_cast<std::int8_t>(s.signs[spf[n]] * s.signs[n / spf[n]]);
            }
        }
        return s;
    }
};

// Visits all 2^pi(k) range-multiplicative strings of length k in
// lexicographic order of their prime signs (minus before plus, smaller
// primes most significant). Stops early when the visitor returns false.
inline void for_each_range_multiplicative(int k, const std::function<bool(const Seed&)>& visit,
                                          int max_prime_budget = 30) {
    if (k < 1) throw std::invalid_argument("for_each_range_multiplicative: k must be >= 1");
    auto primes = primes_up_to(k);
    const int np = static_cast<int>(primes.size());
    if (np > max_prime_budget)
        throw budget_error("seed enumeration: pi(" + std::to_string(k) + ")=" + std::to_string(np) +
                           " primes exceed budget " + std::to_string(max_prime_budget));
    auto spf = spf_sieve(k);
    std::vector<int> prime_pos(k + 1, -1);
    for (int i = 0; i < np; ++i) prime_pos[primes[i]] = i;

    Seed s;
    s.signs.assign(k + 1, 0);
    s.signs[1] = 1;
    const std::uint64_t total = np >= 64 ? 0 : (1ull << np);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int n = 2; n <= k; ++n) {
            if (spf[n] == n) {
                // smallest prime on the most significant bit; set bit means plus
                s.signs[n] = (mask >> (np - 1 - prime_pos[n])) & 1ull ? +1 : -1;
            } else {
                s.signs[n] = static_cast<std::int8_t>(s.signs[spf[n]] * s.signs[n / spf[n]]);
            }
        }
        if (!visit(s)) return;
    }
}

inline std::vector<Seed> enumerate_seeds(int k, int max_prime_budget = 30) {
    std::vector<Seed> all;
    for_each_range_multiplicative(
        k,
        [&](const Seed& s) {
            all.push_back(s);
            return true;
        },
        max_prime_budget);
    return all;
}

struct ConstructedSeed {
    Seed seed;
    std::vector<std::int64_t> flipped_primes; // the 3t+1 primes flipped from + to -
    bool used_fallback = false;
};

// Start from the mod-3 character restricted to 1..k, whose sum equals the
// count of ternary 1-digits of k; flipping a prime p = 3t+1 in (k/2, k]
// lowers the sum by exactly 2 without touching any other position. Flip
// floor(sum/2) of them, largest first. If the interval is too thin (small
// k), fall back to scanning the full enumeration for the first golden seed.
inline ConstructedSeed construct_seed(int k) {
    if (k < 2) throw std::invalid_argument("construct_seed: k must be >= 2");
    Seed base = Seed::from_prime_signs(k, mod3_rule());

    std::int64_t t = base.sum();
    if (t != ternary_ones(k))
        throw std::logic_error("construct_seed: character prefix disagrees with ternary digit count");

    std::int64_t flips = t / 2;
    // the proof's bound on how many flips can ever be needed
    if (static_cast<double>(flips) > std::log(static_cast<double>(k)) / std::log(3.0) + 1.0)
        throw std::logic_error("construct_seed: flip count exceeds log_3(k)+1");

    std::vector<std::int64_t> candidates;
    for (std::int64_t p : primes_up_to(k))
        if (p % 3 == 1 && 2 * p > k) candidates.push_back(p);
    std::sort(candidates.rbegin(), candidates.rend());

    if (static_cast<std::int64_t>(candidates.size()) >= flips) {
        ConstructedSeed out;
        out.seed = base;
        for (std::int64_t i = 0; i < flips; ++i) {
            std::int64_t p = candidates[i];
            out.seed.signs[p] = -1;
            out.flipped_primes.push_back(p);
        }
        if (!out.seed.is_golden())
            throw std::logic_error("construct_seed: flip path missed the golden window");
        return out;
    }

    ConstructedSeed out;
    out.used_fallback = true;
    bool found = false;
    for_each_range_multiplicative(k, [&](const Seed& s) {
        if (s.is_golden()) {
            out.seed = s;
            found = true;
            return false;
        }
        return true;
    });
    if (!found) throw std::logic_error("construct_seed: no golden seed in enumeration (cannot happen)");
    return out;
}

// Extends a seed to a full multiplicative coloring on 1..n: primes <= k keep
// their seed signs, primes above take the tail rule (Liouville-like -1 by
// default). f agrees with the seed on 1..k.
inline MultiplicativeColoring extend_seed(const Seed& seed, std::int64_t n,
                                          const SignRule& tail = liouville_rule()) {
    if (!seed.range_multiplicative())
        throw std::invalid_argument("extend_seed: seed is not range-multiplicative");
    if (n < seed.k()) throw std::invalid_argument("extend_seed: n must be >= seed length");
    const int k = seed.k();
    MultiplicativeColoring f(
        [&](std::int64_t p) { return p <= k ? static_cast<int>(seed.signs[p]) : tail(p); }, n);
    for (int i = 1; i <= k; ++i)
        if (f.eval(i) != seed.signs[i])
            throw std::logic_error("extend_seed: extension disagrees with seed (cannot happen)");
    return f;
}

} // namespace cooldec
