#include "torusq/json_io.hpp"

#include "torusq/numeric.hpp"

namespace torusq {

std::string rat_string(const Rat& r) { return r.get_str(); }

Json rat_json(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return static_cast<std::int64_t>(r.get_num().get_si());
    return rat_string(r);
}

Json int_json(const Int& n) {
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

Json weight_json(const RootDatum& d, const Weight& w) {
    Json arr = Json::array();
    for (const Rat& c : d.weight_coords(w.rc)) arr.push_back(rat_json(c));
    return arr;
}

Json series_json(const QSeries& s) {
    Int denom = 1;
    for (const auto& [e, c] : s.terms()) denom = lcm(denom, e.get_den());
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Int scaled = e.get_num() * (denom / e.get_den());
        terms.push_back(Json::array({int_json(scaled), c.get_str()}));
    }
    Json out;
    out["denominator"] = int_json(denom);
    out["terms"] = std::move(terms);
    out["window"] = s.window() ? rat_json(*s.window()) : Json(nullptr);
    return out;
}

Json mult_table_json(const RootDatum& d, const MultTable& t) {
    Json out;
    out["lambda"] = weight_json(d, t.lambda);
    Json mults = Json::array();
    for (const auto& [w, m] : t.dominant_entries(d))
        mults.push_back(Json::array({weight_json(d, w), m.get_str()}));
    out["mults"] = std::move(mults);
    return out;
}

Json ratio_report_json(const RootDatum& d, const RatioReport& r) {
    Json out;
    out["label"] = r.label;
    out["lambda"] = weight_json(d, r.lambda);
    out["mu1"] = weight_json(d, r.mu1);
    out["mu2"] = weight_json(d, r.mu2);
    out["step"] = r.step;
    Json rows = Json::array();
    for (const RatioRow& row : r.rows) {
        Json jr;
        jr["n"] = row.n;
        jr["mult1"] = row.mult1.get_str();
        jr["mult2"] = row.mult2.get_str();
        jr["defined"] = row.defined;
        jr["ratio"] = row.defined ? Json(rat_string(row.ratio)) : Json(nullptr);
        jr["deviation"] =
            row.defined ? Json(rat_string(row.deviation)) : Json(nullptr);
        rows.push_back(std::move(jr));
    }
    out["rows"] = std::move(rows);
    out["monotone"] = r.monotone;
    out["final_deviation"] =
        r.final_deviation ? Json(rat_string(*r.final_deviation)) : Json(nullptr);
    return out;
}

Json stabilization_report_json(const RootDatum& d, const StabilizationReport& r) {
    Json out;
    out["label"] = r.label;
    out["p"] = r.knot.p;
    out["pp"] = r.knot.pp;
    out["lambda"] = weight_json(d, r.lambda);
    out["regime"] = r.regime == LimitRegime::SimplyLaced ? "simply-laced"
                                                         : "short-root-bound";
    out["node"] = r.node;
    out["window"] = rat_json(r.window);
    out["tolerance"] = rat_string(r.tolerance);
    out["step"] = r.step;
    Json rows = Json::array();
    for (const StabilizationRow& row : r.rows) {
        Json jr;
        jr["n"] = row.n;
        jr["depth"] = rat_json(row.depth);
        jr["full"] = row.full;
        rows.push_back(std::move(jr));
    }
    out["rows"] = std::move(rows);
    out["nondecreasing"] = r.nondecreasing;
    out["stabilized_at"] =
        r.stabilized_at ? Json(*r.stabilized_at) : Json(nullptr);
    return out;
}

Json fit_json(const RootDatum& d, const Weight& lam, const Weight& mu,
              const LeadingTermFit& f) {
    Json out;
    out["lambda"] = weight_json(d, lam);
    out["mu"] = weight_json(d, mu);
    out["degree"] = f.degree;
    out["anchor"] = f.anchor;
    out["stride"] = f.stride;
    out["points"] = f.points;
    Json samples = Json::array();
    for (const Int& s : f.samples) samples.push_back(s.get_str());
    out["samples"] = std::move(samples);
    out["estimate"] = rat_string(f.estimate);
    return out;
}

std::string series_text(const QSeries& s) {
    std::string out;
    if (s.is_zero()) {
        out = "0";
    } else {
        bool first = true;
        for (const auto& [e, c] : s.terms()) {
            bool neg = c < 0;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;

            std::string mag = rat_abs(c).get_str();
            std::string piece;
            if (e == 0) {
                piece = mag;
            } else {
                if (mag != "1")
                    piece = (mag.find('/') == std::string::npos)
                                ? mag
                                : "(" + mag + ")";
                if (e == 1) {
                    piece += "q";
                } else {
                    std::string es = e.get_str();
                    bool plain = es.find('/') == std::string::npos &&
                                 es.find('-') == std::string::npos;
                    piece += plain ? "q^" + es : "q^(" + es + ")";
                }
            }
            out += piece;
        }
    }
    if (!s.is_exact()) {
        std::string es = s.valid_to()->get_str();
        bool plain = es.find('/') == std::string::npos &&
                     es.find('-') == std::string::npos;
        out += "   (exact through " + (plain ? "q^" + es : "q^(" + es + ")") + ")";
    }
    return out;
}

} // namespace torusq
