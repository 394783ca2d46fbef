#pragma once

// Completely multiplicative +-1 colorings of the positive integers: f(1)=+1
// and f(ab)=f(a)f(b), so a coloring is fixed by its prime signs. Includes the
// Liouville coloring (all primes -1), the mod-3 character whose prefix sums
// count ternary 1-digits, balance machinery over initial segments and
// cascades {d, 2d, ..., kd}, a Polya scan with a segmented long-range path,
// and divine-coloring checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <vector>

#include "cooldec/common.hpp"
#include "cooldec/sieve.hpp"

namespace cooldec {

using SignRule = std::function<int(std::int64_t prime)>;

inline SignRule liouville_rule() {
    return [](std::int64_t) { return -1; };
}

// g(3)=+1, otherwise +1 or -1 as p is congruent to 1 or 2 mod 3
inline SignRule mod3_rule() {
    return [](std::int64_t p) { return (p % 3 == 2) ? -1 : +1; };
}

namespace detail {
inline std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = static_cast<__int128>(r) * a % m;
        a = static_cast<__int128>(a) * a % m;
        e >>= 1;
    }
    return r;
}

inline int legendre(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? +1 : -1;
}
} // namespace detail

// Splits the rainbow palette {1..p-1} into residues vs non-residues mod p:
// sign(q) = +1 iff q's p-free part is a quadratic residue, with sign(p)=+1.
// Multiplicative because the Legendre symbol is.
inline SignRule qr_split_rule(std::int64_t p) {
    if (p < 3) throw std::invalid_argument("qr_split_rule: need an odd prime");
    return [p](std::int64_t q) { return q == p ? +1 : detail::legendre(q, p); };
}

inline SignRule table_rule(std::map<std::int64_t, int> signs, std::optional<int> fallback = {}) {
    return [signs = std::move(signs), fallback](std::int64_t p) -> int {
        auto it = signs.find(p);
        if (it != signs.end()) return it->second;
        if (fallback) return *fallback;
        throw std::invalid_argument("table_rule: no sign for prime " + std::to_string(p));
    };
}

class MultiplicativeColoring {
public:
    MultiplicativeColoring(const SignRule& rule, std::int64_t horizon) : horizon_(horizon) {
        if (horizon < 1) throw std::invalid_argument("MultiplicativeColoring: horizon must be >= 1");
        auto spf = spf_sieve(horizon);
        sign_.assign(static_cast<std::size_t>(horizon) + 1, 0);
        sign_[1] = 1;
        for (std::int64_t n = 2; n <= horizon; ++n) {
            if (spf[n] == n) {
                int s = rule(n);
                if (s != 1 && s != -1)
                    throw std::invalid_argument("sign rule must return +-1 (prime " + std::to_string(n) + ")");
                sign_[n] = static_cast<std::int8_t>(s);
            } else {
                sign_[n] = static_cast<std::int8_t>(sign_[spf[n]] * sign_[n / spf[n]]);
            }
        }
    }

    std::int64_t horizon() const { return horizon_; }

    int eval(std::int64_t n) const {
        if (n < 1 || n > horizon_)
            throw std::out_of_range("MultiplicativeColoring::eval: n outside 1..horizon");
        return sign_[n];
    }

    int prime_sign(std::int64_t p) const { return eval(p); }

    const std::vector<std::int8_t>& values() const { return sign_; }

private:
    std::int64_t horizon_;
    std::vector<std::int8_t> sign_; // index 0 unused
};

struct BalanceProfile {
    std::vector<std::int64_t> prefix; // prefix[n] = sum_{i<=n} f(i); prefix[0] = 0

    std::int64_t prefix_at(std::int64_t n) const { return prefix[n]; }
    std::int64_t balance(std::int64_t n) const { return std::llabs(prefix[n]); }
};

inline BalanceProfile balance_profile(const MultiplicativeColoring& f, std::int64_t n) {
    if (n < 1 || n > f.horizon()) throw std::invalid_argument("balance_profile: bad n");
    BalanceProfile b;
    b.prefix.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 1; i <= n; ++i) b.prefix[i] = b.prefix[i - 1] + f.eval(i);
    return b;
}

inline int ternary_ones(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("ternary_ones: n must be >= 0");
    int ones = 0;
    while (n > 0) {
        if (n % 3 == 1) ++ones;
        n /= 3;
    }
    return ones;
}

// ---------------------------------------------------------------------------
// Polya scan: first n >= 2 whose Liouville prefix sum is positive. Small
// horizons use the monolithic coloring; larger ones stream segmented blocks,
// which may be sieved concurrently (the reduction stays in block order, so
// results are deterministic).
// ---------------------------------------------------------------------------

struct PolyaOptions {
    std::int64_t monolithic_limit = 1ll << 25;
    std::int64_t block_size = 1ll << 22;
    int threads = 1;
};

inline std::optional<std::int64_t> polya_scan(std::int64_t n, const PolyaOptions& opt = {}) {
    if (n < 1) throw std::invalid_argument("polya_scan: n must be >= 1");
    if (n <= opt.monolithic_limit) {
        MultiplicativeColoring lam(liouville_rule(), n);
        std::int64_t sum = 1; // lambda(1)
        for (std::int64_t i = 2; i <= n; ++i) {
            sum += lam.eval(i);
            if (sum > 0) return i;
        }
        return std::nullopt;
    }

    std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 2;
    auto base = primes_up_to(root);
    const int workers = std::max(1, opt.threads);

    std::int64_t sum = 0;
    std::int64_t lo = 1;
    std::vector<std::future<std::vector<std::int8_t>>> pipeline;
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    std::size_t consumed = 0;

    auto enqueue = [&]() {
        if (lo > n) return false;
        std::int64_t hi = std::min(n, lo + opt.block_size - 1);
        ranges.emplace_back(lo, hi);
        pipeline.push_back(std::async(std::launch::async, [lo, hi, &base] {
            return segmented_liouville(lo, hi, base);
        }));
        lo = hi + 1;
        return true;
    };

    for (int i = 0; i < workers; ++i) enqueue();
    while (consumed < pipeline.size()) {
        auto block = pipeline[consumed].get();
        auto [blo, bhi] = ranges[consumed];
        ++consumed;
        enqueue();
        for (std::int64_t i = blo; i <= bhi; ++i) {
            sum += block[static_cast<std::size_t>(i - blo)];
            if (i >= 2 && sum > 0) {
                // drain remaining futures before returning
                for (std::size_t j = consumed; j < pipeline.size(); ++j) pipeline[j].wait();
                return i;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cascade balance. Each cascade {d,2d,...} repeats f or -f according to
// f(d), so its balance equals the balance of the initial segment; both
// routes are computed and must agree.
// ---------------------------------------------------------------------------

inline std::int64_t cascade_balance(const MultiplicativeColoring& f, std::int64_t d, std::int64_t k) {
    if (d < 1 || k < 1 || d * k > f.horizon())
        throw std::invalid_argument("cascade_balance: need 1 <= d, 1 <= k, d*k <= horizon");
    std::int64_t direct = 0, segment = 0;
    for (std::int64_t i = 1; i <= k; ++i) {
        direct += f.eval(i * d);
        segment += f.eval(i);
    }
    if (direct != f.eval(d) * segment)
        throw std::logic_error("cascade_balance: multiplicativity identity violated");
    return std::llabs(direct);
}

// Max balance over every length-k cascade contained in 1..n.
inline std::int64_t max_cascade_balance(const MultiplicativeColoring& f, std::int64_t k, std::int64_t n) {
    if (k < 1 || n < k || n > f.horizon())
        throw std::invalid_argument("max_cascade_balance: need 1 <= k <= n <= horizon");
    std::int64_t worst = 0;
    for (std::int64_t d = 1; d * k <= n; ++d)
        worst = std::max(worst, cascade_balance(f, d, k));
    return worst;
}

// At least half of the non-minimum elements must differ in color from the
// minimum. Checked both by direct count and through the equivalent
// prefix-sum bound.
inline bool is_divine(const MultiplicativeColoring& f, const std::vector<std::int64_t>& sorted_set) {
    if (sorted_set.empty()) throw std::invalid_argument("is_divine: empty set");
    for (std::size_t i = 1; i < sorted_set.size(); ++i)
        if (sorted_set[i] <= sorted_set[i - 1])
            throw std::invalid_argument("is_divine: set must be strictly increasing");
    const int lead = f.eval(sorted_set.front());
    std::int64_t differ = 0, total = 0;
    for (std::int64_t a : sorted_set) total += f.eval(a);
    for (std::size_t i = 1; i < sorted_set.size(); ++i)
        if (f.eval(sorted_set[i]) != lead) ++differ;

    const auto rest = static_cast<std::int64_t>(sorted_set.size()) - 1;
    bool by_count = 2 * differ >= rest;
    if (rest > 0) {
        bool by_sum = lead == 1 ? total <= 1 : total >= -1;
        if (by_count != by_sum) throw std::logic_error("is_divine: count and sum routes disagree");
    }
    return by_count;
}

// The k <= n whose ternary expansions avoid the digit 1; the mod-3 character
// has prefix sum exactly 0 at each of them, which is re-verified here.
inline std::vector<std::int64_t> balanceable_ternary_set(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 1) return out;
    for (std::int64_t k = 1; k <= n; ++k)
        if (ternary_ones(k) == 0) out.push_back(k);
    MultiplicativeColoring g(mod3_rule(), n);
    std::int64_t prefix = 0;
    std::size_t idx = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        prefix += g.eval(i);
        if (idx < out.size() && out[idx] == i) {
            if (prefix != 0)
                throw std::logic_error("balanceable_ternary_set: nonzero prefix at k=" + std::to_string(i));
            ++idx;
        }
    }
    return out;
}

} // namespace cooldec
