#pragma once

#include <map>
#include <optional>
#include <vector>

#include "torusq/numeric.hpp"

namespace torusq {

// Exact sparse Laurent series in rational powers of q: a sorted map from
// exact rational exponent to exact rational coefficient (integral in every
// integral construction; zero coefficients are never stored).
//
// A series is either EXACT — finite and fully correct — or TRUNCATED with an
// absolute guarantee bound: every exponent <= valid_to is exactly right and
// no term beyond valid_to is stored.  The user-facing window N of a
// TRUNCATED series is valid_to minus the trailing exponent, so windows
// survive normalize_by_trailing unchanged, and a product of truncated
// series carries the smaller of the two windows.
class QSeries {
public:
    QSeries() = default;

    static QSeries zero() { return QSeries(); }
    static QSeries one() { return monomial(Rat(1), Rat(0)); }
    static QSeries monomial(const Rat& coeff, const Rat& exponent);

    bool is_exact() const { return !valid_; }
    std::optional<Rat> valid_to() const { return valid_; }
    // guarantee width relative to the trailing exponent; nullopt when EXACT
    std::optional<Rat> window() const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Rat, Rat>& terms() const { return terms_; }

    Rat coeff(const Rat& exponent) const;
    Rat trailing_exponent() const;  // throws PreconditionError on zero series
    Rat trailing_coeff() const;
    Rat max_exponent() const;

    bool integral_coeffs() const;

    // Marks the series TRUNCATED at the given absolute bound (tightening
    // only: an existing tighter bound is kept) and drops terms beyond it.
    QSeries& truncate(const Rat& new_valid_to);

    void add_term(const Rat& exponent, const Rat& coeff);  // accumulate

    bool operator==(const QSeries&) const = default;

private:
    std::map<Rat, Rat> terms_;
    std::optional<Rat> valid_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scalar_mul(const Rat& c, const QSeries& a);
QSeries shift(const QSeries& a, const Rat& exponent);  // multiply by q^exponent

// Exact quotient a / b for EXACT operands, by long division from the
// trailing term.  A nonzero remainder is an internal bug in the caller's
// mathematics, so it throws InternalError rather than returning garbage.
QSeries exact_div(const QSeries& a, const QSeries& b);

// Divide by the trailing monomial: result has trailing term exactly 1*q^0.
QSeries normalize_by_trailing(const QSeries& a);

// prod_{k=1..N} (1 - q^k), TRUNCATED with window N (trailing exponent 0).
QSeries euler_product(long window);

// prod_e 1/(1 - q^e) over a multiset of positive rational exponents,
// TRUNCATED with window N; all coefficients nonnegative.
QSeries inv_poch_product(const std::vector<Rat>& exponents, const Rat& window);

// True when the two series agree at every exponent <= bound.
bool agree_through(const QSeries& a, const QSeries& b, const Rat& bound);

} // namespace torusq
