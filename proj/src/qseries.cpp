#include "conglab/qseries.hpp"
#include "conglab/config.hpp"

#include <charconv>
#include <stdexcept>

namespace conglab {

QSeries::QSeries(Modulus m, std::vector<std::uint64_t> coeffs)
    : mod_(m), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("QSeries needs at least the constant term");
    for (auto& c : coeffs_)
        c %= mod_.value;
}

QSeries QSeries::zero(Modulus m, std::int64_t precision) {
    if (precision < 0)
        throw std::invalid_argument("precision must be >= 0");
    check_memory_cap(static_cast<std::uint64_t>(precision) + 1, "series");
    return QSeries(m, std::vector<std::uint64_t>(precision + 1, 0));
}

QSeries QSeries::one(Modulus m, std::int64_t precision) {
    QSeries f = zero(m, precision);
    f.coeffs_[0] = 1 % m.value;
    return f;
}

QSeries QSeries::monomial(Modulus m, std::int64_t n, std::uint64_t c,
                          std::int64_t precision) {
    if (n < 0 || n > precision)
        throw std::invalid_argument("monomial exponent out of range");
    QSeries f = zero(m, precision);
    f.coeffs_[n] = c % m.value;
    return f;
}

std::uint64_t QSeries::coeff(std::int64_t n) const {
    if (n < 0 || n > precision())
        throw std::out_of_range("coefficient index beyond valid precision");
    return coeffs_[n];
}

bool QSeries::is_zero() const {
    for (std::uint64_t c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool operator==(const QSeries& f, const QSeries& g) {
    return f.modulus() == g.modulus() && f.data() == g.data();
}

namespace {

void require_same_modulus(const QSeries& f, const QSeries& g) {
    if (f.modulus() != g.modulus())
        throw std::invalid_argument("modulus mismatch");
}

} // namespace

QSeries add(const QSeries& f, const QSeries& g) {
    require_same_modulus(f, g);
    std::uint64_t m = f.modulus();
    std::int64_t n = std::min(f.precision(), g.precision());
    std::vector<std::uint64_t> out(n + 1);
    for (std::int64_t i = 0; i <= n; ++i)
        out[i] = add_mod(f.data()[i], g.data()[i], m);
    return QSeries(Modulus(m), std::move(out));
}

QSeries sub(const QSeries& f, const QSeries& g) {
    require_same_modulus(f, g);
    std::uint64_t m = f.modulus();
    std::int64_t n = std::min(f.precision(), g.precision());
    std::vector<std::uint64_t> out(n + 1);
    for (std::int64_t i = 0; i <= n; ++i)
        out[i] = sub_mod(f.data()[i], g.data()[i], m);
    return QSeries(Modulus(m), std::move(out));
}

QSeries mul(const QSeries& f, const QSeries& g) {
    require_same_modulus(f, g);
    std::uint64_t m = f.modulus();
    std::int64_t n = std::min(f.precision(), g.precision());
    std::vector<std::uint64_t> out(n + 1, 0);
    for (std::int64_t i = 0; i <= n; ++i) {
        std::uint64_t a = f.data()[i];
        if (a == 0)
            continue;
        for (std::int64_t j = 0; i + j <= n; ++j) {
            std::uint64_t b = g.data()[j];
            if (b == 0)
                continue;
            out[i + j] = add_mod(out[i + j], mul_mod(a, b, m), m);
        }
    }
    return QSeries(Modulus(m), std::move(out));
}

QSeries scale(const QSeries& f, std::uint64_t c) {
    std::uint64_t m = f.modulus();
    c %= m;
    std::vector<std::uint64_t> out(f.data());
    for (auto& x : out)
        x = mul_mod(x, c, m);
    return QSeries(Modulus(m), std::move(out));
}

QSeries shift(const QSeries& f, std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("shift: k must be >= 0");
    std::vector<std::uint64_t> out(f.data().size() + k, 0);
    for (std::size_t i = 0; i < f.data().size(); ++i)
        out[i + k] = f.data()[i];
    return QSeries(Modulus(f.modulus()), std::move(out));
}

QSeries truncate(const QSeries& f, std::int64_t n) {
    if (n < 0 || n > f.precision())
        throw std::invalid_argument("truncate: bad precision");
    std::vector<std::uint64_t> out(f.data().begin(), f.data().begin() + n + 1);
    return QSeries(Modulus(f.modulus()), std::move(out));
}

QSeries invert(const QSeries& f) {
    std::uint64_t m = f.modulus();
    std::uint64_t a0 = f.data()[0];
    if (gcd_u64(a0, m) != 1)
        throw std::invalid_argument(
            "invert: constant term is not a unit mod M");
    std::uint64_t inv0 = inv_mod(a0, m);
    std::int64_t n = f.precision();

    // nonzero tail coefficients of f, so sparse inputs invert in O(N*nnz)
    std::vector<std::pair<std::int64_t, std::uint64_t>> nz;
    for (std::int64_t j = 1; j <= n; ++j)
        if (f.data()[j] != 0)
            nz.emplace_back(j, f.data()[j]);

    std::vector<std::uint64_t> out(n + 1, 0);
    out[0] = inv0;
    for (std::int64_t i = 1; i <= n; ++i) {
        std::uint64_t acc = 0;
        for (const auto& [j, c] : nz) {
            if (j > i)
                break;
            acc = add_mod(acc, mul_mod(c, out[i - j], m), m);
        }
        out[i] = mul_mod(sub_mod(0, acc, m), inv0, m);
    }
    return QSeries(Modulus(m), std::move(out));
}

QSeries power(const QSeries& f, std::uint64_t e) {
    QSeries result = QSeries::one(Modulus(f.modulus()), f.precision());
    QSeries base = f;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        if (e >>= 1)
            base = mul(base, base);
    }
    return result;
}

bool congruent_on_common_precision(const QSeries& f, const QSeries& g) {
    require_same_modulus(f, g);
    std::int64_t n = std::min(f.precision(), g.precision());
    for (std::int64_t i = 0; i <= n; ++i)
        if (f.data()[i] != g.data()[i])
            return false;
    return true;
}

namespace {

// prod_{n>=1} (1 - q^{scale*n}) as a sparse pentagonal-number series.
QSeries pentagonal_series(std::int64_t scale, Modulus m,
                          std::int64_t precision) {
    QSeries f = QSeries::one(m, precision);
    std::vector<std::uint64_t> c(f.data());
    for (std::int64_t k = 1;; ++k) {
        std::int64_t g1 = scale * (k * (3 * k - 1) / 2);
        std::int64_t g2 = scale * (k * (3 * k + 1) / 2);
        if (g1 > precision)
            break;
        std::uint64_t s = (k & 1) ? (m.value - 1) % m.value : 1 % m.value;
        c[g1] = add_mod(c[g1], s, m.value);
        if (g2 <= precision)
            c[g2] = add_mod(c[g2], s, m.value);
    }
    return QSeries(m, std::move(c));
}

} // namespace

QSeries eta_product(const EtaProductSpec& spec, Modulus m,
                    std::int64_t precision) {
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec[i].scale < 1)
            throw std::invalid_argument("eta_product: scales must be positive");
        for (std::size_t j = i + 1; j < spec.size(); ++j)
            if (spec[i].scale == spec[j].scale)
                throw std::invalid_argument(
                    "eta_product: scales must be distinct");
    }
    QSeries result = QSeries::one(m, precision);
    for (const EtaFactor& factor : spec) {
        if (factor.exponent == 0)
            continue;
        QSeries p = pentagonal_series(factor.scale, m, precision);
        if (factor.exponent < 0)
            p = invert(p);
        std::uint64_t e = static_cast<std::uint64_t>(
            factor.exponent < 0 ? -factor.exponent : factor.exponent);
        result = mul(result, power(p, e));
    }
    return result;
}

std::string serialize(const QSeries& f) {
    std::string out = "QS1 modulus=" + std::to_string(f.modulus()) +
                      " prec=" + std::to_string(f.precision()) + "\n";
    for (std::int64_t n = 0; n <= f.precision(); ++n) {
        if (f.data()[n] != 0) {
            out += std::to_string(n);
            out += ' ';
            out += std::to_string(f.data()[n]);
            out += '\n';
        }
    }
    return out;
}

namespace {

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FormatError(std::string("QS1: bad ") + what + " '" +
                          std::string(s) + "'");
    return v;
}

} // namespace

QSeries deserialize(std::string_view text) {
    std::size_t eol = text.find('\n');
    std::string_view header = eol == std::string_view::npos
                                  ? text
                                  : text.substr(0, eol);
    constexpr std::string_view magic = "QS1 modulus=";
    if (header.substr(0, magic.size()) != magic)
        throw FormatError("QS1: malformed header");
    std::string_view rest = header.substr(magic.size());
    std::size_t sp = rest.find(" prec=");
    if (sp == std::string_view::npos)
        throw FormatError("QS1: malformed header");
    std::uint64_t m = parse_u64(rest.substr(0, sp), "modulus");
    std::uint64_t prec = parse_u64(rest.substr(sp + 6), "precision");
    Modulus mod(m);
    check_memory_cap(prec + 1, "series");

    std::vector<std::uint64_t> coeffs(prec + 1, 0);
    std::int64_t last_n = -1;
    std::size_t pos = eol == std::string_view::npos ? text.size() : eol + 1;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        if (line.empty())
            continue;
        std::size_t space = line.find(' ');
        if (space == std::string_view::npos)
            throw FormatError("QS1: malformed coefficient line");
        std::uint64_t n = parse_u64(line.substr(0, space), "exponent");
        std::uint64_t c = parse_u64(line.substr(space + 1), "coefficient");
        if (n > prec)
            throw FormatError("QS1: exponent exceeds declared precision");
        if (static_cast<std::int64_t>(n) <= last_n)
            throw FormatError("QS1: exponents must be strictly increasing");
        if (c >= m)
            throw FormatError("QS1: coefficient out of range");
        coeffs[n] = c;
        last_n = static_cast<std::int64_t>(n);
    }
    return QSeries(mod, std::move(coeffs));
}

} // namespace conglab
