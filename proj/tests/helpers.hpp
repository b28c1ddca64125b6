#pragma once

// Shared test oracles. Everything here recomputes expected values by an
// independent route (enumeration, Euler's criterion, naive convolution) so
// the library paths they check stay honest.

#include "conglab/arith.hpp"
#include "conglab/hecke.hpp"
#include "conglab/qseries.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// a^((p-1)/2) mod p for odd prime p; p must stay below 2^32 here.
inline int legendre_euler(std::int64_t a, std::uint64_t p) {
    std::int64_t am = a % static_cast<std::int64_t>(p);
    if (am < 0)
        am += static_cast<std::int64_t>(p);
    if (am == 0)
        return 0;
    std::uint64_t r = 1, base = static_cast<std::uint64_t>(am);
    std::uint64_t e = (p - 1) / 2;
    while (e) {
        if (e & 1)
            r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// Kronecker symbol assembled from scratch: factor n, take Euler-criterion
// Legendre symbols at odd primes, the mod-8 rule at 2, sign at -1.
inline int kronecker_bruteforce(std::int64_t d, std::int64_t n) {
    if (n == 0)
        return (d == 1 || d == -1) ? 1 : 0;
    int result = 1;
    std::uint64_t un;
    if (n < 0) {
        if (d < 0)
            result = -result;
        un = static_cast<std::uint64_t>(-n);
    } else {
        un = static_cast<std::uint64_t>(n);
    }
    while (un % 2 == 0) {
        std::int64_t dm8 = ((d % 8) + 8) % 8;
        if (dm8 % 2 == 0)
            return 0;
        if (dm8 == 3 || dm8 == 5)
            result = -result;
        un /= 2;
    }
    for (std::uint64_t p = 3; p * p <= un; p += 2) {
        while (un % p == 0) {
            int s = legendre_euler(d, p);
            if (s == 0)
                return 0;
            result *= s;
            un /= p;
        }
    }
    if (un > 1) {
        int s = legendre_euler(d, un);
        if (s == 0)
            return 0;
        result *= s;
    }
    return result;
}

// Partition count by direct recursion over the largest part.
inline std::uint64_t partitions_enum(int n, int max_part) {
    if (n == 0)
        return 1;
    std::uint64_t total = 0;
    for (int k = std::min(n, max_part); k >= 1; --k)
        total += partitions_enum(n - k, k);
    return total;
}

// Partitions with no part divisible by d.
inline std::uint64_t regular_partitions_enum(int n, int max_part, int d) {
    if (n == 0)
        return 1;
    std::uint64_t total = 0;
    for (int k = std::min(n, max_part); k >= 1; --k)
        if (k % d != 0)
            total += regular_partitions_enum(n - k, k, d);
    return total;
}

inline std::vector<std::uint64_t> naive_mul(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
    std::uint64_t m, std::size_t out_len) {
    std::vector<std::uint64_t> out(out_len, 0);
    for (std::size_t i = 0; i < a.size() && i < out_len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j)
            out[i + j] = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(a[i]) * b[j] + out[i + j]) % m);
    return out;
}

// Simple Eratosthenes independent of the library sieve.
inline std::vector<std::uint64_t> sieve(std::uint64_t bound) {
    std::vector<std::uint8_t> comp(bound + 1, 0);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (comp[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            comp[j] = 1;
    }
    return primes;
}

// Count n <= x that are products of s distinct (or repeated) primes from the
// set, by plain recursive enumeration.
inline std::uint64_t pi_s_bruteforce(const std::vector<std::uint64_t>& primes,
                                     int s, std::uint64_t x,
                                     bool with_repetition = false) {
    std::vector<std::uint64_t> sorted(primes);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, std::size_t from, int remaining,
                   std::uint64_t prod) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (std::size_t i = from; i < sorted.size(); ++i) {
            if (sorted[i] > x / prod)
                break;
            self(self, with_repetition ? i : i + 1, remaining - 1,
                 prod * sorted[i]);
        }
    };
    rec(rec, 0, s, 1);
    return count;
}

inline conglab::QSeries random_series(std::mt19937_64& rng, std::uint64_t m,
                                      std::int64_t prec, bool cusp = true) {
    std::uniform_int_distribution<std::uint64_t> dist(0, m - 1);
    std::vector<std::uint64_t> c(prec + 1);
    for (auto& v : c)
        v = dist(rng);
    if (cusp)
        c[0] = 0;
    return conglab::QSeries(conglab::Modulus(m), std::move(c));
}

// q * prod (1-q^n)^24 mod M, known through `prec`.
inline conglab::QSeries delta_mod(std::uint64_t m, std::int64_t prec) {
    conglab::QSeries eta24 = conglab::eta_product(
        {{1, 24}}, conglab::Modulus(m), prec - 1);
    return conglab::shift(eta24, 1);
}

// Backfill construction of a series with f|T_{p^2} = scalar*f (mod M) for
// every p in `primes`, to the full stored precision. Indices free of every
// p^2 get pseudorandom values; each constrained index is pinned by the
// operator recurrence anchored at it.
inline conglab::QSeries make_eigen_series(
    const conglab::FormMeta& meta, std::uint64_t m,
    const std::vector<std::uint64_t>& primes, std::int64_t prec,
    std::uint64_t scalar, std::mt19937_64& rng) {
    using namespace conglab;
    std::uniform_int_distribution<std::uint64_t> dist(0, m - 1);
    std::vector<std::uint64_t> a(prec + 1, 0);

    struct PrimeData {
        std::int64_t p2;
        std::uint64_t p;
        std::uint64_t mid;  // chi*(p) p^{lambda-1} as a signed residue pair
        int cs;
        std::uint64_t top;  // chi*(p^2) p^{2 lambda - 1}
    };
    std::vector<PrimeData> pd;
    for (std::uint64_t p : primes) {
        int cs = chi_star(meta, static_cast<std::int64_t>(p));
        std::uint64_t pl1 =
            pow_mod(p % m, static_cast<std::uint64_t>(meta.weight - 1), m);
        std::uint64_t p2l1 = pow_mod(
            p % m, static_cast<std::uint64_t>(2 * meta.weight - 1), m);
        std::uint64_t cs2 = (cs == 0) ? 0 : 1 % m;
        pd.push_back({static_cast<std::int64_t>(p) * static_cast<std::int64_t>(p),
                      p, pl1, cs, mul_mod(cs2, p2l1, m)});
    }

    for (std::int64_t n = 1; n <= prec; ++n) {
        const PrimeData* hit = nullptr;
        for (const auto& d : pd)
            if (n % d.p2 == 0) {
                hit = &d;
                break;
            }
        if (hit == nullptr) {
            a[n] = dist(rng);
            continue;
        }
        std::int64_t t = n / hit->p2;
        // a(p^2 t) = scalar*a(t) - chi*(p)(t|p)p^{l-1}a(t) - chi*(p^2)p^{2l-1}a(t/p^2)
        std::uint64_t v = mul_mod(scalar % m, a[t], m);
        int sym = hit->cs * jacobi(t % static_cast<std::int64_t>(hit->p),
                                   static_cast<std::int64_t>(hit->p));
        if (sym != 0) {
            std::uint64_t mid = mul_mod(hit->mid, a[t], m);
            v = sym == 1 ? sub_mod(v, mid, m) : add_mod(v, mid, m);
        }
        if (t % hit->p2 == 0)
            v = sub_mod(v, mul_mod(hit->top, a[t / hit->p2], m), m);
        a[n] = v;
    }
    return QSeries(Modulus(m), std::move(a));
}

} // namespace oracle
