#include "conglab/arith.hpp"
#include "conglab/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace conglab {

std::uint64_t memory_cap_entries() {
    static const char* env = std::getenv("CONGRUENCE_LAB_MEM_CAP");
    if (env != nullptr) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0)
            return static_cast<std::uint64_t>(v);
    }
    return 10'000'000ULL;
}

void check_memory_cap(std::uint64_t entries, const char* what) {
    if (entries > memory_cap_entries())
        throw MemoryCapError(std::string(what) + ": " + std::to_string(entries) +
                             " entries exceeds cap " +
                             std::to_string(memory_cap_entries()));
}

Modulus::Modulus(std::uint64_t m) : value(m) {
    if (m < 1)
        throw std::invalid_argument("modulus must be >= 1");
    if (m > (1ULL << 62))
        throw std::invalid_argument("modulus must fit in 62 bits");
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on (a mod m, m)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m);
    std::int64_t newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw std::invalid_argument("inv_mod: argument not invertible");
    if (t < 0)
        t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a,
                          std::uint64_t d, int r) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;  // composite witness
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic for all 64-bit n
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (miller_rabin_witness(n, a, d, r))
            return false;
    }
    return true;
}

namespace {

// Jacobi symbol core: n odd positive, a already arbitrary.
int jacobi_core(std::int64_t a, std::uint64_t n) {
    std::uint64_t ua;
    int sign = 1;
    std::int64_t am = a % static_cast<std::int64_t>(n);
    if (am < 0)
        am += static_cast<std::int64_t>(n);
    ua = static_cast<std::uint64_t>(am);

    while (ua != 0) {
        while ((ua & 1) == 0) {
            ua >>= 1;
            std::uint64_t nm8 = n & 7;
            if (nm8 == 3 || nm8 == 5)
                sign = -sign;
        }
        std::swap(ua, n);
        if ((ua & 3) == 3 && (n & 3) == 3)
            sign = -sign;
        ua %= n;
    }
    return n == 1 ? sign : 0;
}

} // namespace

int jacobi(std::int64_t a, std::int64_t n) {
    if (n <= 0 || (n & 1) == 0)
        throw std::invalid_argument("jacobi: n must be odd and positive");
    return jacobi_core(a, static_cast<std::uint64_t>(n));
}

int kronecker(std::int64_t d, std::int64_t n) {
    if (n == 0)
        return (d == 1 || d == -1) ? 1 : 0;
    if ((d & 1) == 0 && (n & 1) == 0)
        return 0;

    int sign = 1;
    if (n < 0) {
        n = -n;
        if (d < 0)
            sign = -sign;
    }
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        // (d/2)^v: 0 for even d (excluded above), +1 for d = +-1 (mod 8),
        // -1 for d = +-3 (mod 8)
        std::int64_t dm8 = ((d % 8) + 8) % 8;
        if (dm8 == 3 || dm8 == 5)
            sign = -sign;
    }
    return sign * jacobi_core(d, static_cast<std::uint64_t>(n));
}

RealCharacter RealCharacter::trivial(std::uint64_t modulus) {
    if (modulus < 1)
        throw std::invalid_argument("character modulus must be >= 1");
    RealCharacter chi;
    chi.kind = Kind::Trivial;
    chi.modulus_of_definition = modulus;
    return chi;
}

RealCharacter RealCharacter::kronecker_char(std::int64_t d) {
    if (d == 0)
        throw std::invalid_argument("kronecker character needs nonzero d");
    RealCharacter chi;
    chi.kind = Kind::Kronecker;
    chi.d = d;
    chi.modulus_of_definition = 4 * static_cast<std::uint64_t>(d < 0 ? -d : d);
    return chi;
}

int char_eval(const RealCharacter& chi, std::int64_t n) {
    if (chi.kind == RealCharacter::Kind::Trivial) {
        std::uint64_t an = n < 0 ? ~static_cast<std::uint64_t>(n) + 1
                                 : static_cast<std::uint64_t>(n);
        return gcd_u64(an % chi.modulus_of_definition,
                       chi.modulus_of_definition) == 1
                   ? 1
                   : 0;
    }
    return kronecker(chi.d, n);
}

std::uint64_t Factorization::squarefree_kernel() const {
    std::uint64_t k = 1;
    for (const auto& [p, e] : factors)
        if (e & 1)
            k *= p;
    return k;
}

std::uint64_t Factorization::value() const {
    std::uint64_t n = 1;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i)
            n *= p;
    return n;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    // Brent's variant; n odd composite, not a prime power of a tiny prime.
    for (std::uint64_t c = 1;; ++c) {
        auto step = [n, c](std::uint64_t x) {
            return add_mod(mul_mod(x, x, n), c, n);
        };
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t q = 1;
        int iter = 0;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0)
                break;
            q = mul_mod(q, diff, n);
            if (++iter % 64 == 0) {
                d = gcd_u64(q, n);
                if (d != 1)
                    break;
            }
        }
        if (d == 1)
            d = gcd_u64(q, n);
        if (d != 1 && d != n)
            return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

Factorization factorize(std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    // trial division by 6k +- 1 up to 2^20, then rho on what's left
    for (std::uint64_t d = 17; d <= 1'048'576 && d * d <= n; d += 6) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
        while (n % (d + 2) == 0) {
            primes.push_back(d + 2);
            n /= d + 2;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());

    Factorization f;
    for (std::uint64_t p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2)
        return primes;
    check_memory_cap(bound / 8 + 1, "prime sieve");
    std::vector<std::uint8_t> composite(bound + 1, 0);
    for (std::uint64_t i = 2; i * i <= bound; ++i) {
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= bound; j += i)
                composite[j] = 1;
    }
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (!composite[i])
            primes.push_back(i);
    return primes;
}

std::vector<std::uint64_t> primes_in_class(std::int64_t a, std::uint64_t m,
                                           std::uint64_t bound) {
    if (m < 1)
        throw std::invalid_argument("primes_in_class: m must be >= 1");
    std::int64_t am = a % static_cast<std::int64_t>(m);
    if (am < 0)
        am += static_cast<std::int64_t>(m);
    std::uint64_t ua = static_cast<std::uint64_t>(am);
    if (gcd_u64(ua, m) != 1)
        throw std::invalid_argument("primes_in_class: gcd(a, m) must be 1");

    std::vector<std::uint64_t> result;
    for (std::uint64_t p : primes_up_to(bound))
        if (p % m == ua)
            result.push_back(p);
    return result;
}

} // namespace conglab
