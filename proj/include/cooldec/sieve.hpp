#pragma once

// Smallest-prime-factor sieving plus a segmented Liouville sieve. The
// monolithic and segmented routes are kept independent so they can be checked
// against each other on overlapping ranges.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cooldec {

// spf[i] = smallest prime factor of i for 2 <= i <= n; spf[0]=0, spf[1]=1.
inline std::vector<std::int32_t> spf_sieve(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("spf_sieve: n must be >= 1");
    std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    if (n >= 1) spf[1] = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            for (std::int64_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
        }
    }
    return spf;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (std::int64_t j = i * i; j <= n; j += i) composite[j] = true;
        }
    }
    return primes;
}

inline std::int64_t prime_count_up_to(std::int64_t n) {
    return static_cast<std::int64_t>(primes_up_to(n).size());
}

// Liouville lambda on [lo, hi], computed blockwise without a full spf table.
// base_primes must contain every prime <= sqrt(hi). Returns values indexed
// by n - lo.
inline std::vector<std::int8_t> segmented_liouville(std::int64_t lo, std::int64_t hi,
                                                    const std::vector<std::int64_t>& base_primes) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("segmented_liouville: bad range");
    if (hi > 0xFFFFFFFFll) throw std::invalid_argument("segmented_liouville: hi exceeds 32-bit range");
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::uint32_t> rem(len);
    std::vector<std::uint8_t> parity(len, 0);
    for (std::size_t i = 0; i < len; ++i) rem[i] = static_cast<std::uint32_t>(lo + static_cast<std::int64_t>(i));

    for (std::int64_t p : base_primes) {
        if (p * p > hi) break;
        // one division per prime power keeps the inner loops branch-light
        for (std::int64_t q = p; q <= hi; q *= p) {
            std::int64_t start = ((lo + q - 1) / q) * q;
            for (std::int64_t m = start; m <= hi; m += q) {
                std::size_t idx = static_cast<std::size_t>(m - lo);
                rem[idx] /= static_cast<std::uint32_t>(p);
                parity[idx] ^= 1;
            }
            if (q > hi / p) break; // q*p would overflow past hi
        }
    }

    std::vector<std::int8_t> lam(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::uint8_t odd = parity[i] ^ (rem[i] > 1 ? 1 : 0);
        lam[i] = odd ? -1 : 1;
    }
    if (lo == 1) lam[0] = 1;
    return lam;
}

} // namespace cooldec
