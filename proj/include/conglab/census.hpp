#pragma once

// Residue-class censuses with geometric checkpoints, the well-distribution
// comparison curve, almost-prime counting, eigen-prime probing, congruence
// chain verification, and the square-class support analyzer.
//
// Everything here is a pure function of immutable inputs. Census counts over
// disjoint n-ranges merge by addition, and probes over different primes are
// independent, so callers may parallelize freely; results never depend on
// the schedule.

#include "conglab/arith.hpp"
#include "conglab/hecke.hpp"
#include "conglab/qseries.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace conglab {

struct CensusTable {
    std::uint64_t modulus;
    std::int64_t xmax;
    std::vector<std::uint64_t> counts;  // counts[r] = #{1 <= n <= X : a(n) = r}

    struct Checkpoint {
        std::int64_t x;
        std::vector<std::uint64_t> counts;
    };
    std::vector<Checkpoint> checkpoints;  // ascending x; final X always present
};

// Exact counts per residue over 1 <= n <= X with snapshots at X*ratio^{-k}.
// `values` is indexed by n and must cover [0, X]; entries are reduced mod M.
// Geometric checkpoints below 16 are dropped; the final X is always kept.
CensusTable census(std::span<const std::uint64_t> values, Modulus m,
                   std::int64_t x, double checkpoint_ratio = 2.0);

enum class CurveKind { SqrtX, LinearX };

struct WdRow {
    std::uint64_t r;
    std::int64_t x;
    std::uint64_t count;
    double curve;   // sqrt(X)/log X * (log log X)^s, or the X-scaled variant
    double ratio;   // count / curve: the per-checkpoint fitted constant
};

struct WdReport {
    int s = 0;
    CurveKind kind = CurveKind::SqrtX;
    std::vector<WdRow> rows;              // grouped by r, checkpoints ascending
    std::vector<double> fitted_c;         // per r: min ratio over checkpoints
    std::vector<std::uint64_t> unhit;     // residues with count 0 at final X
};

// Comparison-curve report. Checkpoints with X <= e are skipped (log log
// undefined there). Requires at least one checkpoint.
WdReport wd_report(const CensusTable& table, int s,
                   CurveKind kind = CurveKind::SqrtX);

// CSV "r,X,count,curve,fitted_C" per checkpoint row (fitted_C is the
// per-checkpoint constant count/curve).
std::string wd_csv(const WdReport& report);

// Number of integers n <= x that are products of s primes from `primes`,
// distinct by default (ordered DFS over the sorted set, pruned by
// p_i^{s-i+1} <= x/prod). with_repetition switches to the multiset count.
std::uint64_t pi_s(const std::vector<std::uint64_t>& primes, int s,
                   std::uint64_t x, bool with_repetition = false);

enum class Verdict { Verified, Refuted, InsufficientPrecision };

const char* verdict_name(Verdict v);

struct ProbeReport {
    std::uint64_t p;
    std::int64_t class_a;
    std::uint64_t class_m;
    std::uint64_t scalar;
    std::int64_t verified_precision;
    Verdict verdict;
    double proportion;       // running share of probed primes that verified
    bool p_divides_level;
};

// For ascending primes p = a (mod m), applies the Hecke operator for `meta`
// and checks f|T = scalar*f (mod M) coefficient-wise on the full output
// precision. Stops after `budget` primes, or at the first prime whose output
// precision is 0 (one insufficient-precision row is recorded for it). Throws
// PrecisionError if no prime can be probed at all.
std::vector<ProbeReport> probe_eigen(const QSeries& f, const FormMeta& meta,
                                     std::int64_t class_a,
                                     std::uint64_t class_m,
                                     std::uint64_t scalar, int budget);

// Chain congruence from iterated eigen-primes, read directly off the
// coefficients: half-integral a(p_s^2...p_1^2 n_r) = a(n_r), integer-weight
// a(p_s...p_1 n_r) = 2^s a(n_r) (mod M). Callers supply primes that probed
// as verified for scalar 2. Throws PrecisionError when prec(f) is too small.
Verdict verify_chain(const QSeries& f, const FormMeta& meta, std::int64_t n_r,
                     const std::vector<std::uint64_t>& ps);

// For ascending primes l with n0*l^i <= prec(f), checks
// a(n0*l^i) = (i+1)*a(n0) (mod M) by direct coefficient lookup. Budget and
// precision semantics as for probe_eigen.
std::vector<ProbeReport> probe_integer(const QSeries& f, const FormMeta& meta,
                                       std::int64_t n0, int i, int budget);

// Squarefree kernels of all exponents 1 <= n <= prec(f) whose coefficient is
// nonzero mod ell (f is reduced mod ell first). Sorted ascending.
std::vector<std::uint64_t> square_class_support(const QSeries& f,
                                                std::uint64_t ell);

struct DensityEstimate {
    std::string set_descriptor;
    std::uint64_t sample_bound;
    double density;
};

// Share of definite-verdict probes that verified.
DensityEstimate density_estimate(std::string descriptor,
                                 const std::vector<ProbeReport>& reports);

// JSON lines, one report per line, fields p, class, scalar, precision,
// verdict.
std::string probe_jsonl(const std::vector<ProbeReport>& reports);

} // namespace conglab
