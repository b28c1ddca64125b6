#include "conglab/partitions.hpp"
#include "conglab/config.hpp"

#include <stdexcept>

namespace conglab {

PartitionTable p_table(Modulus m, std::int64_t xmax) {
    if (xmax < 0)
        throw std::invalid_argument("p_table: xmax must be >= 0");
    check_memory_cap(static_cast<std::uint64_t>(xmax) + 1, "partition table");

    std::uint64_t M = m.value;
    std::vector<std::uint64_t> p(xmax + 1, 0);
    p[0] = 1 % M;
    for (std::int64_t n = 1; n <= xmax; ++n) {
        std::uint64_t acc = 0;
        for (std::int64_t k = 1;; ++k) {
            std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            std::int64_t g2 = k * (3 * k + 1) / 2;
            std::uint64_t t = p[n - g1];
            if (g2 <= n)
                t = add_mod(t, p[n - g2], M);
            acc = (k & 1) ? add_mod(acc, t, M) : sub_mod(acc, t, M);
        }
        p[n] = acc;
    }
    return PartitionTable{m, xmax, std::move(p)};
}

std::uint64_t p_exact_small(int n) {
    if (n < 0 || n > 120)
        throw std::invalid_argument("p_exact_small supports 0 <= n <= 120");
    // dp[m] = number of partitions of m using parts <= current k
    std::vector<std::uint64_t> dp(n + 1, 0);
    dp[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int s = k; s <= n; ++s)
            dp[s] += dp[s - k];
    return dp[n];
}

std::vector<std::uint64_t> regular_table(std::uint64_t p, int a, Modulus m,
                                         std::int64_t xmax) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("regular_table: p must be an odd prime");
    if (a < 1)
        throw std::invalid_argument("regular_table: a must be >= 1");
    if (xmax < 0)
        throw std::invalid_argument("regular_table: xmax must be >= 0");
    // p^a factor only matters while p^a <= xmax
    std::uint64_t cap = static_cast<std::uint64_t>(xmax);
    std::uint64_t pa = 1;
    bool in_range = true;
    for (int i = 0; i < a; ++i) {
        if (p == 0 || pa > cap / p) {
            in_range = false;
            break;
        }
        pa *= p;
    }
    EtaProductSpec spec;
    if (in_range && pa <= cap && pa >= 1)
        spec.push_back({static_cast<std::int64_t>(pa), 1});
    spec.push_back({1, -1});
    return eta_product(spec, m, xmax).data();
}

namespace {

// highest partition-table index a target series of this precision touches
std::int64_t target_table_max(std::uint64_t ell, std::int64_t precision) {
    return (static_cast<std::int64_t>(ell) * precision + 1) / 24;
}

std::uint64_t checked_prime_power(std::uint64_t ell, int j) {
    std::uint64_t m = 1;
    for (int i = 0; i < j; ++i) {
        if (m > (1ULL << 62) / ell)
            throw std::invalid_argument("ell^j does not fit a 64-bit modulus");
        m *= ell;
    }
    return m;
}

} // namespace

RestrictedSeries f_target(std::uint64_t ell, int j, std::int64_t precision) {
    if (ell < 13 || !is_prime(ell))
        throw std::invalid_argument("f_target requires prime ell >= 13");
    if (j < 1)
        throw std::invalid_argument("f_target requires j >= 1");
    Modulus m(checked_prime_power(ell, j));

    PartitionTable tab = p_table(m, target_table_max(ell, precision));
    std::vector<std::uint64_t> coeffs(precision + 1, 0);
    std::int64_t sell = static_cast<std::int64_t>(ell);
    for (std::int64_t n = 0; n <= precision; ++n) {
        std::int64_t t = sell * n + 1;
        if (t % 24 == 0)
            coeffs[n] = tab.values[t / 24];
    }

    // weight (ell^j - ell^{j-1} - 1)/2 = lambda + 1/2, level 576*ell, chi_12
    std::uint64_t ellj1 = 1;
    for (int i = 0; i + 1 < j; ++i)
        ellj1 *= ell;
    std::int64_t lambda =
        (static_cast<std::int64_t>(ellj1) * (static_cast<std::int64_t>(ell) - 1) - 2) / 2;
    std::optional<FormMeta> meta;
    if (lambda >= 1)
        meta = FormMeta::half_integral(lambda, 576 * sell,
                                       RealCharacter::kronecker_char(12));

    return RestrictedSeries{
        QSeries(m, std::move(coeffs)),
        TargetDescriptor{TargetDescriptor::Kind::FTarget, ell, j, 0}, meta};
}

RestrictedSeries g_target(std::uint64_t ell, int j, std::int64_t precision) {
    if (ell != 5 && ell != 7 && ell != 11)
        throw std::invalid_argument("g_target requires ell in {5, 7, 11}");
    if (j < 1)
        throw std::invalid_argument("g_target requires j >= 1");
    Modulus m(checked_prime_power(ell, j));

    PartitionTable tab = p_table(m, (precision + 1) / 24);
    std::vector<std::uint64_t> coeffs(precision + 1, 0);
    std::int64_t sell = static_cast<std::int64_t>(ell);
    for (std::int64_t n = 0; n <= precision; ++n) {
        if ((n + 1) % 24 != 0)
            continue;
        if (jacobi(-(n % sell), sell) != -1)
            continue;
        coeffs[n] = tab.values[(n + 1) / 24];
    }
    return RestrictedSeries{
        QSeries(m, std::move(coeffs)),
        TargetDescriptor{TargetDescriptor::Kind::GTarget, ell, j, 0},
        std::nullopt};
}

std::string table_csv(const std::vector<std::uint64_t>& values) {
    std::string out = "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n) {
        out += std::to_string(n);
        out += ',';
        out += std::to_string(values[n]);
        out += '\n';
    }
    return out;
}

} // namespace conglab
