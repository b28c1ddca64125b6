#pragma once

// Modular integer arithmetic, primes, Jacobi/Kronecker symbols, real Dirichlet
// characters and 64-bit factorization. Everything here is a pure function on
// immutable inputs and safe to call concurrently.

#include <cstdint>
#include <vector>

namespace conglab {

// Positive 64-bit congruence modulus. Values above 2^62 are rejected so that
// conditional-subtract addition never overflows.
struct Modulus {
    std::uint64_t value;

    explicit Modulus(std::uint64_t m);
    bool is_odd() const { return (value & 1) != 0; }
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// Inverse of a mod m; throws std::invalid_argument if gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin with the known 64-bit witness set.
bool is_prime(std::uint64_t n);

// Jacobi symbol (a/n). n must be odd and positive.
int jacobi(std::int64_t a, std::int64_t n);

// Kronecker symbol (d/n), full extension to all integers n (including n <= 0
// and even n).
int kronecker(std::int64_t d, std::int64_t n);

// Real Dirichlet character: either the trivial character modulo m, or the
// Kronecker symbol (d/.). Every real character is of this shape.
struct RealCharacter {
    enum class Kind { Trivial, Kronecker };

    Kind kind = Kind::Trivial;
    std::int64_t d = 0;                   // Kronecker top argument (nonzero)
    std::uint64_t modulus_of_definition = 1;

    static RealCharacter trivial(std::uint64_t modulus = 1);
    static RealCharacter kronecker_char(std::int64_t d);
};

// chi(n) in {-1, 0, 1}.
int char_eval(const RealCharacter& chi, std::int64_t n);

struct Factorization {
    // (prime, exponent) pairs, primes ascending.
    std::vector<std::pair<std::uint64_t, int>> factors;

    std::uint64_t squarefree_kernel() const;  // product of primes with odd exponent
    int omega() const { return static_cast<int>(factors.size()); }
    std::uint64_t value() const;              // reconstructs n
};

// Complete factorization of n >= 1: trial division, then Miller-Rabin plus
// Pollard-Brent rho for large cofactors.
Factorization factorize(std::uint64_t n);

// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// All primes p <= bound with p = a (mod m), ascending. Requires gcd(a, m) = 1.
std::vector<std::uint64_t> primes_in_class(std::int64_t a, std::uint64_t m,
                                           std::uint64_t bound);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

} // namespace conglab
