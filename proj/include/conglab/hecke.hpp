#pragma once

// Hecke operators on truncated q-expansions mod M, integer weight and
// half-integral weight, with exact precision accounting: T_p divides the
// precision by p, T_{p^2} by p^2, and iterated applications compound. All
// congruence statements downstream are therefore "verified to precision N",
// never proved.

#include "conglab/arith.hpp"
#include "conglab/qseries.hpp"

#include <cstdint>
#include <vector>

namespace conglab {

// Weight/level/character data of the form a series is treated as.
struct FormMeta {
    enum class WeightKind { Integer, HalfIntegral };

    WeightKind kind;
    std::int64_t weight;        // k for integer weight, lambda for lambda + 1/2
    std::int64_t level;
    RealCharacter character;

    static FormMeta integer_weight(std::int64_t k, std::int64_t level,
                                   RealCharacter chi);
    // Requires 4 | level.
    static FormMeta half_integral(std::int64_t lambda, std::int64_t level,
                                  RealCharacter chi);

    bool is_half_integral() const { return kind == WeightKind::HalfIntegral; }
};

// chi*(n) = ((-1)^lambda / n) * chi(n). Half-integral metas only.
int chi_star(const FormMeta& meta, std::int64_t n);

// Integer-weight T_p: b(n) = a(pn) + chi(p) p^{k-1} a(n/p), with a(n/p) = 0
// when p does not divide n. Output precision floor(prec(f)/p). Requires a
// cusp-style input (a(0) = 0).
QSeries hecke_int(const QSeries& f, const FormMeta& meta, std::uint64_t p);

// Half-integral T_{p^2}, p odd:
//   b(n) = a(p^2 n) + chi*(p) (n|p) p^{lambda-1} a(n)
//        + chi*(p^2) p^{2 lambda - 1} a(n/p^2),
// with a(n/p^2) = 0 when p^2 does not divide n. Output precision
// floor(prec(f)/p^2). The modulus must be odd.
QSeries hecke_half(const QSeries& f, const FormMeta& meta, std::uint64_t p);

// Left-to-right composition over `ps`. Throws PrecisionError when the final
// precision would drop below 1. The empty list returns f unchanged.
QSeries hecke_iterate(const QSeries& f, const FormMeta& meta,
                      const std::vector<std::uint64_t>& ps);

// Precision the composition over `ps` would end at, or -1 if it underflows.
std::int64_t iterate_precision(std::int64_t precision, const FormMeta& meta,
                               const std::vector<std::uint64_t>& ps);

} // namespace conglab
