#pragma once

// Truncated q-expansions over Z/MZ. A series of precision N stores the
// coefficients a(0)..a(N); no operation ever reports a coefficient beyond the
// precision it can prove correct. Values are immutable after construction and
// safe to share across threads.

#include "conglab/arith.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conglab {

class QSeries {
public:
    // precision = coeffs.size() - 1; coefficients are reduced mod M.
    QSeries(Modulus m, std::vector<std::uint64_t> coeffs);

    static QSeries zero(Modulus m, std::int64_t precision);
    static QSeries one(Modulus m, std::int64_t precision);
    // c * q^n, known through `precision`.
    static QSeries monomial(Modulus m, std::int64_t n, std::uint64_t c,
                            std::int64_t precision);

    std::uint64_t modulus() const { return mod_.value; }
    std::int64_t precision() const {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    // Throws std::out_of_range past the precision.
    std::uint64_t coeff(std::int64_t n) const;
    const std::vector<std::uint64_t>& data() const { return coeffs_; }
    bool is_zero() const;

private:
    Modulus mod_;
    std::vector<std::uint64_t> coeffs_;
};

bool operator==(const QSeries& f, const QSeries& g);

// Coefficient-wise sum; precision = min of the two. Moduli must agree.
QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);

// Cauchy product truncated to the min precision. Schoolbook with zero-skip;
// the multiplication boundary is deliberately swappable if profiles change.
QSeries mul(const QSeries& f, const QSeries& g);

QSeries scale(const QSeries& f, std::uint64_t c);

// Multiply by q^k; the product is provably correct through precision + k.
QSeries shift(const QSeries& f, std::int64_t k);

// Restrict to precision n <= precision(f).
QSeries truncate(const QSeries& f, std::int64_t n);

// Reciprocal to the same precision; the constant term must be a unit mod M.
// Cost is O(N * nnz(f)), so reciprocals of sparse series stay cheap.
QSeries invert(const QSeries& f);

QSeries power(const QSeries& f, std::uint64_t e);

// True when f and g agree coefficient-wise on min(prec(f), prec(g)).
bool congruent_on_common_precision(const QSeries& f, const QSeries& g);

// One factor of an eta-type product: prod_{n>=1} (1 - q^{scale*n})^{exponent}.
struct EtaFactor {
    std::int64_t scale;
    std::int64_t exponent;
};
using EtaProductSpec = std::vector<EtaFactor>;

// Expands the full product via Euler's pentagonal number theorem per factor,
// with series inversion for negative exponents. Scales must be distinct and
// positive. The empty spec gives the constant series 1.
QSeries eta_product(const EtaProductSpec& spec, Modulus m,
                    std::int64_t precision);

// QS1 text format. Header "QS1 modulus=<M> prec=<N>", then one "<n> <c>" line
// per nonzero coefficient, n strictly increasing, LF endings, ASCII decimal.
std::string serialize(const QSeries& f);
QSeries deserialize(std::string_view text);

} // namespace conglab
