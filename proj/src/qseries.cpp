#include "torusq/qseries.hpp"

#include <algorithm>

namespace torusq {

QSeries QSeries::monomial(const Rat& coeff, const Rat& exponent) {
    QSeries s;
    if (coeff != 0) s.terms_.emplace(exponent, coeff);
    return s;
}

std::optional<Rat> QSeries::window() const {
    if (!valid_) return std::nullopt;
    if (terms_.empty()) return *valid_;  // no trailing term to anchor on
    return *valid_ - terms_.begin()->first;
}

Rat QSeries::coeff(const Rat& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat QSeries::trailing_exponent() const {
    if (terms_.empty()) throw PreconditionError("trailing_exponent of zero series");
    return terms_.begin()->first;
}

Rat QSeries::trailing_coeff() const {
    if (terms_.empty()) throw PreconditionError("trailing_coeff of zero series");
    return terms_.begin()->second;
}

Rat QSeries::max_exponent() const {
    if (terms_.empty()) throw PreconditionError("max_exponent of zero series");
    return terms_.rbegin()->first;
}

bool QSeries::integral_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return is_integer(t.second); });
}

QSeries& QSeries::truncate(const Rat& new_valid_to) {
    Rat bound = valid_ && *valid_ < new_valid_to ? *valid_ : new_valid_to;
    valid_ = bound;
    terms_.erase(terms_.upper_bound(bound), terms_.end());
    return *this;
}

void QSeries::add_term(const Rat& exponent, const Rat& coeff) {
    if (coeff == 0) return;
    if (valid_ && exponent > *valid_) return;
    auto [it, fresh] = terms_.emplace(exponent, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

QSeries add(const QSeries& a, const QSeries& b) {
    QSeries r = a;
    if (b.valid_to()) r.truncate(*b.valid_to());
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

QSeries neg(const QSeries& a) { return scalar_mul(Rat(-1), a); }

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, neg(b)); }

QSeries scalar_mul(const Rat& c, const QSeries& a) {
    QSeries r;
    if (a.valid_to()) r.truncate(*a.valid_to());
    if (c == 0) return r;
    for (const auto& [e, v] : a.terms()) r.add_term(e, c * v);
    return r;
}

QSeries shift(const QSeries& a, const Rat& exponent) {
    QSeries r;
    if (a.valid_to()) r.truncate(*a.valid_to() + exponent);
    for (const auto& [e, v] : a.terms()) r.add_term(e + exponent, v);
    return r;
}

QSeries mul(const QSeries& a, const QSeries& b) {
    QSeries r;
    if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return r;
    // guarantee bound: errors hidden beyond one factor's bound surface only
    // after shifting by the other factor's trailing exponent
    std::optional<Rat> bound;
    if (a.valid_to()) bound = *a.valid_to() + (b.is_zero() ? Rat(0) : b.trailing_exponent());
    if (b.valid_to()) {
        Rat v = *b.valid_to() + (a.is_zero() ? Rat(0) : a.trailing_exponent());
        if (!bound || v < *bound) bound = v;
    }
    if (bound) r.truncate(*bound);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
    return r;
}

QSeries exact_div(const QSeries& a, const QSeries& b) {
    if (!a.is_exact() || !b.is_exact())
        throw PreconditionError("exact_div: operands must be EXACT");
    if (b.is_zero()) throw PreconditionError("exact_div: division by zero series");
    if (a.is_zero()) return QSeries();
    // long division from the trailing end; for an exact quotient the top
    // exponent of Q is pinned, which bounds the loop
    Rat q_max = a.max_exponent() - b.max_exponent();
    Rat b_trail_e = b.trailing_exponent();
    Rat b_trail_c = b.trailing_coeff();
    QSeries rem = a;
    QSeries quot;
    while (!rem.is_zero()) {
        Rat e = rem.trailing_exponent() - b_trail_e;
        if (e > q_max)
            throw InternalError("exact_div: division left a remainder");
        Rat c = rem.trailing_coeff() / b_trail_c;
        quot.add_term(e, c);
        for (const auto& [eb, cb] : b.terms()) rem.add_term(eb + e, -c * cb);
    }
    return quot;
}

QSeries normalize_by_trailing(const QSeries& a) {
    if (a.is_zero()) throw PreconditionError("normalize_by_trailing: zero series");
    Rat t = a.trailing_exponent();
    Rat c = a.trailing_coeff();
    return scalar_mul(Rat(1) / c, shift(a, -t));
}

QSeries euler_product(long window) {
    if (window < 0) throw PreconditionError("euler_product: negative window");
    QSeries r = QSeries::one();
    r.truncate(Rat(window));
    for (long k = 1; k <= window; ++k) {
        QSeries f = QSeries::one();
        f.add_term(Rat(k), Rat(-1));
        r = mul(r, f);
    }
    return r;
}

QSeries inv_poch_product(const std::vector<Rat>& exponents, const Rat& window) {
    if (window < 0) throw PreconditionError("inv_poch_product: negative window");
    QSeries r = QSeries::one();
    r.truncate(window);
    for (const Rat& e : exponents) {
        if (e <= 0)
            throw PreconditionError("inv_poch_product: exponents must be positive");
        QSeries geo;
        geo.truncate(window);
        for (Rat ke(0); ke <= window; ke += e) geo.add_term(ke, Rat(1));
        r = mul(r, geo);
    }
    return r;
}

bool agree_through(const QSeries& a, const QSeries& b, const Rat& bound) {
    for (const auto& [e, c] : a.terms()) {
        if (e > bound) break;
        if (b.coeff(e) != c) return false;
    }
    for (const auto& [e, c] : b.terms()) {
        if (e > bound) break;
        if (a.coeff(e) != c) return false;
    }
    return true;
}

} // namespace torusq
