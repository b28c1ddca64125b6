#include "conglab/census.hpp"
#include "conglab/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conglab {

CensusTable census(std::span<const std::uint64_t> values, Modulus m,
                   std::int64_t x, double checkpoint_ratio) {
    if (x < 1)
        throw std::invalid_argument("census: X must be >= 1");
    if (values.size() < static_cast<std::size_t>(x) + 1)
        throw std::invalid_argument("census: values must cover 1..X");
    if (!(checkpoint_ratio >= 1.001))
        throw std::invalid_argument("census: checkpoint ratio must exceed 1");
    check_memory_cap(m.value, "census counts");

    // X * ratio^{-k}: k = 0 always kept, deeper ones only while >= 16
    std::vector<std::int64_t> xs{x};
    for (double cx = static_cast<double>(x) / checkpoint_ratio; cx >= 16.0;
         cx /= checkpoint_ratio) {
        auto xi = static_cast<std::int64_t>(cx);
        if (xi != xs.back())
            xs.push_back(xi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    CensusTable table;
    table.modulus = m.value;
    table.xmax = x;
    table.counts.assign(m.value, 0);

    std::size_t next = 0;
    for (std::int64_t n = 1; n <= x; ++n) {
        ++table.counts[values[n] % m.value];
        while (next < xs.size() && xs[next] == n) {
            table.checkpoints.push_back({n, table.counts});
            ++next;
        }
    }
    return table;
}

namespace {

double comparison_curve(double x, int s, CurveKind kind) {
    double base = kind == CurveKind::SqrtX ? std::sqrt(x) / std::log(x)
                                           : x / std::log(x);
    return base * std::pow(std::log(std::log(x)), s);
}

} // namespace

WdReport wd_report(const CensusTable& table, int s, CurveKind kind) {
    if (table.checkpoints.empty())
        throw std::invalid_argument("wd_report: no checkpoints present");
    if (s < 0)
        throw std::invalid_argument("wd_report: s must be >= 0");

    constexpr double e = 2.718281828459045;
    WdReport report;
    report.s = s;
    report.kind = kind;
    report.fitted_c.assign(table.modulus, 0.0);

    for (std::uint64_t r = 0; r < table.modulus; ++r) {
        // counts are monotone, so skipping the leading zero-count checkpoints
        // leaves the lower envelope of the checkpoints where r has been hit
        bool first = true;
        double c_min = 0.0;
        for (const auto& cp : table.checkpoints) {
            if (static_cast<double>(cp.x) <= e)
                continue;  // log log undefined at or below e
            double curve = comparison_curve(static_cast<double>(cp.x), s, kind);
            double ratio = static_cast<double>(cp.counts[r]) / curve;
            report.rows.push_back({r, cp.x, cp.counts[r], curve, ratio});
            if (cp.counts[r] > 0 && (first || ratio < c_min)) {
                c_min = ratio;
                first = false;
            }
        }
        report.fitted_c[r] = first ? 0.0 : c_min;
        if (table.counts[r] == 0)
            report.unhit.push_back(r);
    }
    return report;
}

std::string wd_csv(const WdReport& report) {
    std::string out = "r,X,count,curve,fitted_C\n";
    char buf[64];
    for (const WdRow& row : report.rows) {
        out += std::to_string(row.r);
        out += ',';
        out += std::to_string(row.x);
        out += ',';
        out += std::to_string(row.count);
        out += ',';
        std::snprintf(buf, sizeof buf, "%.6f", row.curve);
        out += buf;
        out += ',';
        std::snprintf(buf, sizeof buf, "%.6f", row.ratio);
        out += buf;
        out += '\n';
    }
    return out;
}

namespace {

std::uint64_t count_tail(const std::vector<std::uint64_t>& primes,
                         std::size_t from, std::uint64_t limit) {
    auto it = std::upper_bound(primes.begin() + from, primes.end(), limit);
    return static_cast<std::uint64_t>(it - (primes.begin() + from));
}

std::uint64_t pi_s_dfs(const std::vector<std::uint64_t>& primes,
                       std::size_t from, int remaining, std::uint64_t budget,
                       bool with_repetition) {
    if (remaining == 1)
        return count_tail(primes, from, budget);
    std::uint64_t total = 0;
    for (std::size_t i = from; i < primes.size(); ++i) {
        std::uint64_t p = primes[i];
        // the remaining `remaining` primes are all >= p
        std::uint64_t need = 1;
        bool fits = true;
        for (int t = 0; t < remaining && fits; ++t) {
            if (need > budget / p)
                fits = false;
            else
                need *= p;
        }
        if (!fits)
            break;
        total += pi_s_dfs(primes, with_repetition ? i : i + 1, remaining - 1,
                          budget / p, with_repetition);
    }
    return total;
}

} // namespace

std::uint64_t pi_s(const std::vector<std::uint64_t>& primes, int s,
                   std::uint64_t x, bool with_repetition) {
    if (s < 1)
        throw std::invalid_argument("pi_s: s must be >= 1");
    std::vector<std::uint64_t> sorted(primes);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || x == 0)
        return 0;
    return pi_s_dfs(sorted, 0, s, x, with_repetition);
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Verified:
        return "verified";
    case Verdict::Refuted:
        return "refuted";
    default:
        return "insufficient-precision";
    }
}

namespace {

// ascending primes in the class a (mod m), starting after `prev`
std::uint64_t next_prime_in_class(std::uint64_t prev, std::int64_t a,
                                  std::uint64_t m) {
    std::int64_t am = a % static_cast<std::int64_t>(m);
    if (am < 0)
        am += static_cast<std::int64_t>(m);
    std::uint64_t ua = static_cast<std::uint64_t>(am);
    std::uint64_t n = prev < 2 ? 2 : prev + 1;
    if (m > 1) {
        std::uint64_t rem = n % m;
        n += (ua + m - rem) % m;
    }
    while (!is_prime(n))
        n += m > 1 ? m : 1;
    return n;
}

double running_proportion(std::uint64_t verified, std::uint64_t definite) {
    return definite == 0 ? 0.0
                         : static_cast<double>(verified) /
                               static_cast<double>(definite);
}

} // namespace

std::vector<ProbeReport> probe_eigen(const QSeries& f, const FormMeta& meta,
                                     std::int64_t class_a,
                                     std::uint64_t class_m,
                                     std::uint64_t scalar, int budget) {
    if (class_m < 1)
        throw std::invalid_argument("probe_eigen: class modulus must be >= 1");
    {
        std::int64_t am = class_a % static_cast<std::int64_t>(class_m);
        if (am < 0)
            am += static_cast<std::int64_t>(class_m);
        if (gcd_u64(static_cast<std::uint64_t>(am), class_m) != 1)
            throw std::invalid_argument("probe_eigen: gcd(a, m) must be 1");
    }
    if (budget < 1)
        throw std::invalid_argument("probe_eigen: budget must be >= 1");

    std::vector<ProbeReport> reports;
    std::uint64_t verified = 0, definite = 0;
    std::uint64_t p = 0;
    for (int probed = 0; probed < budget; ++probed) {
        p = next_prime_in_class(p, class_a, class_m);
        if (meta.is_half_integral() && p == 2)
            p = next_prime_in_class(p, class_a, class_m);

        std::int64_t divisor = static_cast<std::int64_t>(p);
        if (meta.is_half_integral()) {
            if (divisor > f.precision() / divisor)
                divisor = f.precision() + 1;  // p^2 overflows the precision
            else
                divisor *= divisor;
        }
        std::int64_t out_prec = f.precision() / divisor;
        bool divides_level = meta.level % static_cast<std::int64_t>(p) == 0;

        if (out_prec < 1) {
            if (reports.empty())
                throw PrecisionError(
                    "probe_eigen: precision exhausted before any prime probed");
            reports.push_back({p, class_a, class_m, scalar, out_prec,
                               Verdict::InsufficientPrecision,
                               running_proportion(verified, definite),
                               divides_level});
            break;
        }

        QSeries image = meta.is_half_integral() ? hecke_half(f, meta, p)
                                                : hecke_int(f, meta, p);
        QSeries expected = scale(truncate(f, image.precision()), scalar);
        bool ok = congruent_on_common_precision(image, expected);
        ++definite;
        if (ok)
            ++verified;
        reports.push_back({p, class_a, class_m, scalar, image.precision(),
                           ok ? Verdict::Verified : Verdict::Refuted,
                           running_proportion(verified, definite),
                           divides_level});
    }
    return reports;
}

Verdict verify_chain(const QSeries& f, const FormMeta& meta, std::int64_t n_r,
                     const std::vector<std::uint64_t>& ps) {
    if (n_r < 1)
        throw std::invalid_argument("verify_chain: n_r must be >= 1");
    std::uint64_t m = f.modulus();
    std::uint64_t index = static_cast<std::uint64_t>(n_r);
    for (std::uint64_t p : ps) {
        std::uint64_t step = meta.is_half_integral() ? p * p : p;
        if (step != 0 &&
            index > static_cast<std::uint64_t>(f.precision()) / step)
            throw PrecisionError("verify_chain: insufficient precision");
        index *= step;
    }
    if (index > static_cast<std::uint64_t>(f.precision()))
        throw PrecisionError("verify_chain: insufficient precision");

    std::uint64_t lhs = f.coeff(static_cast<std::int64_t>(index));
    std::uint64_t rhs = f.coeff(n_r);
    if (!meta.is_half_integral())
        rhs = mul_mod(rhs, pow_mod(2, ps.size(), m), m);
    return lhs == rhs ? Verdict::Verified : Verdict::Refuted;
}

std::vector<ProbeReport> probe_integer(const QSeries& f, const FormMeta& meta,
                                       std::int64_t n0, int i, int budget) {
    if (meta.kind != FormMeta::WeightKind::Integer)
        throw std::invalid_argument("probe_integer needs an integer-weight meta");
    if (n0 < 1 || n0 > f.precision())
        throw std::invalid_argument("probe_integer: n0 out of range");
    if (i < 0)
        throw std::invalid_argument("probe_integer: i must be >= 0");
    if (budget < 1)
        throw std::invalid_argument("probe_integer: budget must be >= 1");

    std::uint64_t m = f.modulus();
    std::uint64_t a_n0 = f.coeff(n0);
    std::uint64_t target = mul_mod(a_n0, (static_cast<std::uint64_t>(i) + 1) % m, m);

    std::vector<ProbeReport> reports;
    std::uint64_t verified = 0, definite = 0;
    std::uint64_t ell = 0;
    for (int probed = 0; probed < budget; ++probed) {
        ell = next_prime_in_class(ell, 0, 1);

        // n0 * ell^i, saturating past the precision
        std::uint64_t index = static_cast<std::uint64_t>(n0);
        bool fits = true;
        for (int t = 0; t < i && fits; ++t) {
            if (index > static_cast<std::uint64_t>(f.precision()) / ell)
                fits = false;
            else
                index *= ell;
        }
        if (!fits || index > static_cast<std::uint64_t>(f.precision())) {
            if (reports.empty())
                throw PrecisionError(
                    "probe_integer: precision exhausted before any prime probed");
            reports.push_back({ell, 0, 1, static_cast<std::uint64_t>(i) + 1, -1,
                               Verdict::InsufficientPrecision,
                               running_proportion(verified, definite), false});
            break;
        }

        bool ok = f.coeff(static_cast<std::int64_t>(index)) == target;
        ++definite;
        if (ok)
            ++verified;
        reports.push_back({ell, 0, 1, static_cast<std::uint64_t>(i) + 1,
                           static_cast<std::int64_t>(index),
                           ok ? Verdict::Verified : Verdict::Refuted,
                           running_proportion(verified, definite),
                           meta.level % static_cast<std::int64_t>(ell) == 0});
    }
    return reports;
}

std::vector<std::uint64_t> square_class_support(const QSeries& f,
                                                std::uint64_t ell) {
    if (ell < 3 || ell % 2 == 0 || !is_prime(ell))
        throw std::invalid_argument(
            "square_class_support: ell must be an odd prime");
    std::vector<std::uint64_t> kernels;
    for (std::int64_t n = 1; n <= f.precision(); ++n) {
        if (f.data()[n] % ell == 0)
            continue;
        kernels.push_back(factorize(static_cast<std::uint64_t>(n))
                              .squarefree_kernel());
    }
    std::sort(kernels.begin(), kernels.end());
    kernels.erase(std::unique(kernels.begin(), kernels.end()), kernels.end());
    return kernels;
}

DensityEstimate density_estimate(std::string descriptor,
                                 const std::vector<ProbeReport>& reports) {
    std::uint64_t verified = 0, definite = 0, bound = 0;
    for (const ProbeReport& r : reports) {
        if (r.verdict == Verdict::InsufficientPrecision)
            continue;
        ++definite;
        if (r.verdict == Verdict::Verified)
            ++verified;
        bound = std::max(bound, r.p);
    }
    return DensityEstimate{std::move(descriptor), bound,
                           running_proportion(verified, definite)};
}

std::string probe_jsonl(const std::vector<ProbeReport>& reports) {
    std::string out;
    for (const ProbeReport& r : reports) {
        nlohmann::ordered_json line;
        line["p"] = r.p;
        line["class"] = std::to_string(r.class_a) + "," +
                        std::to_string(r.class_m);
        line["scalar"] = r.scalar;
        line["precision"] = r.verified_precision;
        line["verdict"] = verdict_name(r.verdict);
        out += line.dump();
        out += '\n';
    }
    return out;
}

} // namespace conglab
