#include "conglab/hecke.hpp"
#include "conglab/config.hpp"

#include <stdexcept>

namespace conglab {

FormMeta FormMeta::integer_weight(std::int64_t k, std::int64_t level,
                                  RealCharacter chi) {
    if (k < 1)
        throw std::invalid_argument("integer weight requires k >= 1");
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    return FormMeta{WeightKind::Integer, k, level, chi};
}

FormMeta FormMeta::half_integral(std::int64_t lambda, std::int64_t level,
                                 RealCharacter chi) {
    if (lambda < 1)
        throw std::invalid_argument("half-integral weight requires lambda >= 1");
    if (level < 1 || level % 4 != 0)
        throw std::invalid_argument("half-integral weight requires 4 | level");
    return FormMeta{WeightKind::HalfIntegral, lambda, level, chi};
}

int chi_star(const FormMeta& meta, std::int64_t n) {
    if (!meta.is_half_integral())
        throw std::invalid_argument("chi_star needs a half-integral meta");
    std::int64_t top = (meta.weight & 1) ? -1 : 1;
    return kronecker(top, n) * char_eval(meta.character, n);
}

namespace {

// character value in {-1, 0, 1} as a residue mod M
std::uint64_t to_residue(int v, std::uint64_t m) {
    if (v == 0)
        return 0;
    if (v == 1)
        return 1 % m;
    return (m - 1) % m;
}

void require_cusp_style(const QSeries& f) {
    if (f.data()[0] != 0)
        throw std::invalid_argument(
            "Hecke operators require a cusp-style series (a(0) = 0)");
}

} // namespace

QSeries hecke_int(const QSeries& f, const FormMeta& meta, std::uint64_t p) {
    if (meta.kind != FormMeta::WeightKind::Integer)
        throw std::invalid_argument("hecke_int needs an integer-weight meta");
    if (!is_prime(p))
        throw std::invalid_argument("hecke_int: p must be prime");
    require_cusp_style(f);

    std::uint64_t m = f.modulus();
    std::int64_t out_prec = f.precision() / static_cast<std::int64_t>(p);
    std::uint64_t chi_p = to_residue(
        char_eval(meta.character, static_cast<std::int64_t>(p)), m);
    std::uint64_t term = mul_mod(
        chi_p, pow_mod(p % m, static_cast<std::uint64_t>(meta.weight - 1), m),
        m);

    std::vector<std::uint64_t> out(out_prec + 1, 0);
    for (std::int64_t n = 1; n <= out_prec; ++n) {
        std::uint64_t b = f.data()[n * static_cast<std::int64_t>(p)];
        if (n % static_cast<std::int64_t>(p) == 0)
            b = add_mod(
                b,
                mul_mod(term, f.data()[n / static_cast<std::int64_t>(p)], m),
                m);
        out[n] = b;
    }
    return QSeries(Modulus(m), std::move(out));
}

QSeries hecke_half(const QSeries& f, const FormMeta& meta, std::uint64_t p) {
    if (!meta.is_half_integral())
        throw std::invalid_argument("hecke_half needs a half-integral meta");
    if (p == 2)
        throw std::invalid_argument("hecke_half: p must be odd");
    if (!is_prime(p))
        throw std::invalid_argument("hecke_half: p must be prime");
    if (f.modulus() % 2 == 0)
        throw std::invalid_argument(
            "hecke_half: modulus must be odd for half-integral work");
    require_cusp_style(f);

    std::uint64_t m = f.modulus();
    std::int64_t sp = static_cast<std::int64_t>(p);
    std::int64_t p2 = sp * sp;
    std::int64_t out_prec = f.precision() / p2;

    int cs = chi_star(meta, sp);
    std::uint64_t cs2 = to_residue(cs * cs, m);  // chi*(p^2) by multiplicativity
    std::uint64_t p_l1 =
        pow_mod(p % m, static_cast<std::uint64_t>(meta.weight - 1), m);
    std::uint64_t p_2l1 =
        pow_mod(p % m, static_cast<std::uint64_t>(2 * meta.weight - 1), m);
    std::uint64_t mid_base = mul_mod(to_residue(cs, m), p_l1, m);
    std::uint64_t top = mul_mod(cs2, p_2l1, m);

    std::vector<std::uint64_t> out(out_prec + 1, 0);
    for (std::int64_t n = 1; n <= out_prec; ++n) {
        std::uint64_t b = f.data()[n * p2];
        int sym = jacobi(n % sp, sp);
        if (sym != 0) {
            std::uint64_t mid = mul_mod(mid_base, f.data()[n], m);
            b = sym == 1 ? add_mod(b, mid, m) : sub_mod(b, mid, m);
        }
        if (n % p2 == 0)
            b = add_mod(b, mul_mod(top, f.data()[n / p2], m), m);
        out[n] = b;
    }
    return QSeries(Modulus(m), std::move(out));
}

std::int64_t iterate_precision(std::int64_t precision, const FormMeta& meta,
                               const std::vector<std::uint64_t>& ps) {
    for (std::uint64_t p : ps) {
        std::int64_t div = static_cast<std::int64_t>(p);
        if (meta.is_half_integral()) {
            if (div > precision / div)
                return -1;
            div *= div;
        }
        precision /= div;
        if (precision < 1)
            return -1;
    }
    return precision;
}

QSeries hecke_iterate(const QSeries& f, const FormMeta& meta,
                      const std::vector<std::uint64_t>& ps) {
    if (ps.empty())
        return f;
    if (iterate_precision(f.precision(), meta, ps) < 1)
        throw PrecisionError("hecke_iterate: precision exhausted");
    QSeries result = f;
    for (std::uint64_t p : ps)
        result = meta.is_half_integral() ? hecke_half(result, meta, p)
                                         : hecke_int(result, meta, p);
    return result;
}

} // namespace conglab
