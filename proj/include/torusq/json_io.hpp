#pragma once

#include <string>

#include "json.hpp"
#include "torusq/multiplicity.hpp"
#include "torusq/qseries.hpp"
#include "torusq/verify.hpp"

namespace torusq {

using Json = nlohmann::ordered_json;

// "a/b" for proper fractions, plain decimal string for integers.
std::string rat_string(const Rat& r);

// JSON number when the value is an integer that fits a 64-bit signed int,
// otherwise the exact "a/b" string.
Json rat_json(const Rat& r);
Json int_json(const Int& n);

// Fundamental-weight coordinates of a weight, as an array.
Json weight_json(const RootDatum& d, const Weight& w);

// {"denominator": D, "terms": [[e*D, "coeff"], ...], "window": W_or_null}
// with D the least common denominator of the exponents, terms ascending.
Json series_json(const QSeries& s);

// {"lambda": [...], "mults": [[[...], "m"], ...]} over dominant weights.
Json mult_table_json(const RootDatum& d, const MultTable& t);

Json ratio_report_json(const RootDatum& d, const RatioReport& r);
Json stabilization_report_json(const RootDatum& d, const StabilizationReport& r);
Json fit_json(const RootDatum& d, const Weight& lam, const Weight& mu,
              const LeadingTermFit& f);

// Human-readable one-line form, e.g. "-1 + q^2 + q^3 + q^4"; truncated
// series carry a trailing "(exact through q^E)" note.
std::string series_text(const QSeries& s);

} // namespace torusq
