#pragma once

// Partition counts mod M via Euler's pentagonal recurrence, p^a-regular
// partition counts, and the restricted congruence-target series. Table
// construction is sequential; completed tables are immutable and can be read
// from any number of threads.

#include "conglab/arith.hpp"
#include "conglab/hecke.hpp"
#include "conglab/qseries.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace conglab {

struct PartitionTable {
    Modulus modulus;
    std::int64_t xmax;
    std::vector<std::uint64_t> values;  // values[n] = p(n) mod M, 0 <= n <= xmax
};

// p(n) mod M for all n <= xmax,
//   p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)],
// O(xmax^{3/2}) modular additions in one flat array. Throws MemoryCapError
// past the configured entry cap.
PartitionTable p_table(Modulus m, std::int64_t xmax);

// Exact p(n) for 0 <= n <= 120 by dynamic programming over parts (test-oracle
// range; p(120) still fits comfortably in 64 bits).
std::uint64_t p_exact_small(int n);

// b_{p^a}(n) mod M for n <= xmax: partitions with no part divisible by p^a,
// generating function prod (1 - q^{p^a n}) / (1 - q^n). p must be an odd
// prime, a >= 1.
std::vector<std::uint64_t> regular_table(std::uint64_t p, int a, Modulus m,
                                         std::int64_t xmax);

// Which congruence target a restricted series is.
struct TargetDescriptor {
    enum class Kind { FTarget, GTarget, Regular };
    Kind kind;
    std::uint64_t ell = 0;  // ell, or p for Regular
    int j = 0;
    int a = 0;              // Regular only
};

struct RestrictedSeries {
    QSeries series;
    TargetDescriptor descriptor;
    // Weight/level/character when the construction pins them down; g-targets
    // leave this empty (the data comes from a cited construction we only
    // consume as a congruence).
    std::optional<FormMeta> meta;
};

// Series over Z/ell^j with coefficient p((ell*n + 1)/24) at each n <= precision
// where 24 | ell*n + 1, and 0 elsewhere. Requires prime ell >= 13.
RestrictedSeries f_target(std::uint64_t ell, int j, std::int64_t precision);

// Series over Z/ell^j with coefficient p((n + 1)/24) at each n <= precision
// where both 24 | n + 1 and (-n | ell) = -1, and 0 elsewhere.
// Requires ell in {5, 7, 11}.
RestrictedSeries g_target(std::uint64_t ell, int j, std::int64_t precision);

// CSV export "n,value" with header, one row per index.
std::string table_csv(const std::vector<std::uint64_t>& values);

} // namespace conglab
