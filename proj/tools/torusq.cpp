// Command-line front end: exact coloured torus-knot invariants, weight
// multiplicities, lattice character sums, and the empirical harness.
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "torusq/json_io.hpp"

using namespace torusq;

namespace {

Rat parse_rat_token(const std::string& tok, const std::string& flag) {
    try {
        mpq_class v(tok);
        if (v.get_den() == 0)
            throw PreconditionError(flag + ": zero denominator in '" + tok + "'");
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw PreconditionError(flag + ": malformed rational '" + tok + "'");
    }
}

RVec parse_coords(const std::string& csv, const std::string& flag) {
    RVec v;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty())
            throw PreconditionError(flag + ": empty coordinate in '" + csv + "'");
        v.push_back(parse_rat_token(token, flag));
    }
    if (v.empty()) throw PreconditionError(flag + ": no coordinates given");
    return v;
}

Weight parse_weight(const RootDatum& d, const std::string& csv,
                    const std::string& basis, const std::string& flag) {
    RVec v = parse_coords(csv, flag);
    if (v.size() != d.rank)
        throw PreconditionError(flag + ": expected " + std::to_string(d.rank) +
                                " coordinates, got " + std::to_string(v.size()));
    return basis == "root" ? d.weight_from_root(v) : d.weight_from_fundamental(v);
}

std::string weight_text(const RootDatum& d, const Weight& w) {
    std::string out;
    RVec coords = d.weight_coords(w.rc);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += coords[i].get_str();
    }
    return out;
}

Int weyl_order(LieType t) {
    Int f;
    auto fact = [](long n) {
        Int r;
        mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    };
    auto pow2 = [](long n) {
        Int r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
        return r;
    };
    switch (t.series) {
        case 'A': return fact(t.rank + 1);
        case 'B':
        case 'C': return pow2(t.rank) * fact(t.rank);
        case 'D': return pow2(t.rank - 1) * fact(t.rank);
        case 'E':
            if (t.rank == 6) return Int(51840);
            if (t.rank == 7) return Int(2903040);
            return Int(696729600);
        case 'F': return Int(1152);
        default: return Int(12); // G2
    }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_table(const std::vector<std::string>& head,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> w(head.size());
    for (size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) std::cout << "  ";
            std::cout << std::setw(static_cast<int>(w[i])) << r[i];
        }
        std::cout << "\n";
    };
    line(head);
    for (const auto& r : rows) line(r);
}

void print_kv(const std::vector<std::pair<std::string, std::string>>& kv) {
    size_t w = 0;
    for (const auto& [k, v] : kv) w = std::max(w, k.size());
    for (const auto& [k, v] : kv)
        std::cout << std::left << std::setw(static_cast<int>(w) + 2) << (k + ":")
                  << std::right << v << "\n";
}

struct Options {
    std::string alg;
    std::string basis = "fundamental";
    bool json = false;
    std::string lambda, mu, nu, mu1, mu2;
    long p = 2, pp = 3;
    int node = 0;
    bool node_given = false;
    long window = 10;
    long nmax = 10;
    long degree = 1;
    std::string form = "lattice";
    std::string tolerance = "1/10";
};

void run_info(const Options& o) {
    RootDatum d = build_root_datum(parse_lie_type(o.alg));
    long dim = static_cast<long>(d.rank + 2 * d.pos_roots.size());
    if (o.json) {
        Json out;
        out["type"] = to_string(d.type);
        out["rank"] = static_cast<long>(d.rank);
        out["simply_laced"] = is_simply_laced(d.type);
        out["dimension"] = dim;
        out["positive_roots"] = static_cast<long>(d.pos_roots.size());
        out["coxeter_number"] = d.h;
        out["dual_coxeter_number"] = d.hdual;
        out["weyl_order"] = int_json(weyl_order(d.type));
        out["lattice_index"] = int_json(d.lattice_index);
        out["marked_nodes"] = d.J;
        out["rho_norm2"] = rat_string(d.norm2(d.rho()));
        out["short_root_norm2"] = rat_string(d.d2);
        out["cartan"] = d.cartan;
        print_json(out);
        return;
    }
    std::string nodes;
    for (size_t i = 0; i < d.J.size(); ++i)
        nodes += (i ? " " : "") + std::to_string(d.J[i]);
    print_kv({{"type", to_string(d.type)},
              {"rank", std::to_string(d.rank)},
              {"simply laced", is_simply_laced(d.type) ? "yes" : "no"},
              {"dimension", std::to_string(dim)},
              {"positive roots", std::to_string(d.pos_roots.size())},
              {"coxeter number", std::to_string(d.h)},
              {"dual coxeter number", std::to_string(d.hdual)},
              {"weyl order", weyl_order(d.type).get_str()},
              {"lattice index", d.lattice_index.get_str()},
              {"marked nodes", nodes},
              {"rho norm^2", rat_string(d.norm2(d.rho()))},
              {"short root norm^2", rat_string(d.d2)}});
}

void run_mult(const Options& o) {
    RootDatum d = build_root_datum(parse_lie_type(o.alg));
    Weight lam = parse_weight(d, o.lambda, o.basis, "--lambda");
    MultTable t = weight_system(d, lam);
    if (!o.mu.empty()) {
        Weight mu = parse_weight(d, o.mu, o.basis, "--mu");
        Int m = t.mult(d, mu);
        if (o.json) {
            Json out;
            out["lambda"] = weight_json(d, lam);
            out["mu"] = weight_json(d, mu);
            out["mult"] = m.get_str();
            print_json(out);
        } else {
            std::cout << m.get_str() << "\n";
        }
        return;
    }
    if (o.json) {
        print_json(mult_table_json(d, t));
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [w, m] : t.dominant_entries(d))
        rows.push_back({weight_text(d, w), m.get_str()});
    print_table({"weight", "mult"}, rows);
}

void run_jones(const Options& o, bool normalized) {
    RootDatum d = build_root_datum(parse_lie_type(o.alg));
    WeylGroup g = enumerate_weyl(d);
    TorusKnot k(o.p, o.pp);
    Weight lam = parse_weight(d, o.lambda, o.basis, "--lambda");
    QSeries s = normalized          ? jones_hat(d, g, k, lam)
                : o.form == "rosso" ? jones_rosso(d, g, k, lam)
                                    : jones_lattice(d, g, k, lam);
    if (o.json)
        print_json(series_json(s));
    else
        std::cout << series_text(s) << "\n";
}

void run_wchar(const Options& o) {
    RootDatum d = build_root_datum(parse_lie_type(o.alg));
    WeylGroup g = enumerate_weyl(d);
    WModuleLabel label;
    label.p = o.p;
    label.pp = o.pp;
    label.j = o.node;
    if (!o.nu.empty()) label.nu = parse_weight(d, o.nu, o.basis, "--nu");
    if (!o.mu.empty()) label.mu = parse_weight(d, o.mu, o.basis, "--mu");
    QSeries s = theta_sum(d, g, label, Rat(o.window));
    if (o.json) {
        Json out = series_json(s);
        out["min_exponent"] = rat_string(theta_min_exponent(d, label));
        out["sign"] = theta_sign(d, o.node);
        print_json(out);
        return;
    }
    std::cout << series_text(s) << "\n";
    print_kv({{"min exponent", rat_string(theta_min_exponent(d, label))},
              {"sign", std::to_string(theta_sign(d, o.node))}});
}

void run_limit(const Options& o) {
    RootDatum d = build_root_datum(parse_lie_type(o.alg));
    WeylGroup g = enumerate_weyl(d);
    TorusKnot k(o.p, o.pp);
    QSeries s;
    if (is_simply_laced(d.type)) {
        s = limit_rhs_simply_laced(d, g, k, o.node, Rat(o.window));
    } else {
        if (o.node_given)
            throw PreconditionError(
                "--j: marked nodes apply only to simply-laced algebras");
        s = limit_rhs_non_simply_laced(d, g, k, Rat(o.window));
    }
    if (o.json)
        print_json(series_json(s));
    else
        std::cout << series_text(s) << "\n";
}

void run_stabilize(const Options& o) {
    RootDatum d = build_root_datum(parse_lie_type(o.alg));
    WeylGroup g = enumerate_weyl(d);
    TorusKnot k(o.p, o.pp);
    Weight lam = parse_weight(d, o.lambda, o.basis, "--lambda");
    Rat tol = parse_rat_token(o.tolerance, "--tolerance");
    StabilizationReport rep = stabilization(d, g, k, lam, Rat(o.window), o.nmax, tol);
    if (o.json) {
        print_json(stabilization_report_json(d, rep));
        return;
    }
    print_kv({{"label", rep.label},
              {"knot", "T(" + std::to_string(rep.knot.p) + "," +
                           std::to_string(rep.knot.pp) + ")"},
              {"lambda", weight_text(d, rep.lambda)},
              {"regime", rep.regime == LimitRegime::SimplyLaced
                             ? "simply-laced"
                             : "short-root-bound"},
              {"node", std::to_string(rep.node)},
              {"window", rat_string(rep.window)},
              {"tolerance", rat_string(rep.tolerance)},
              {"step", std::to_string(rep.step)}});
    std::vector<std::vector<std::string>> rows;
    for (const StabilizationRow& row : rep.rows)
        rows.push_back({std::to_string(row.n), rat_string(row.depth),
                        row.full ? "yes" : "no"});
    print_table({"n", "depth", "full"}, rows);
    print_kv({{"nondecreasing", rep.nondecreasing ? "yes" : "no"},
              {"stabilized at",
               rep.stabilized_at ? std::to_string(*rep.stabilized_at) : "none"}});
}

void run_ratios(const Options& o) {
    RootDatum d = build_root_datum(parse_lie_type(o.alg));
    Weight lam = parse_weight(d, o.lambda, o.basis, "--lambda");
    Weight m1 = parse_weight(d, o.mu1, o.basis, "--mu1");
    Weight m2 = parse_weight(d, o.mu2, o.basis, "--mu2");
    RatioReport rep = ratio_table(d, lam, m1, m2, o.nmax);
    if (o.json) {
        print_json(ratio_report_json(d, rep));
        return;
    }
    print_kv({{"label", rep.label},
              {"lambda", weight_text(d, rep.lambda)},
              {"mu1", weight_text(d, rep.mu1)},
              {"mu2", weight_text(d, rep.mu2)},
              {"step", std::to_string(rep.step)}});
    std::vector<std::vector<std::string>> rows;
    for (const RatioRow& row : rep.rows)
        rows.push_back({std::to_string(row.n), row.mult1.get_str(),
                        row.mult2.get_str(),
                        row.defined ? rat_string(row.ratio) : "-",
                        row.defined ? rat_string(row.deviation) : "-"});
    print_table({"n", "mult1", "mult2", "ratio", "deviation"}, rows);
    print_kv({{"monotone", rep.monotone ? "yes" : "no"},
              {"final deviation",
               rep.final_deviation ? rat_string(*rep.final_deviation) : "none"}});
}

void run_fit(const Options& o) {
    RootDatum d = build_root_datum(parse_lie_type(o.alg));
    Weight lam = parse_weight(d, o.lambda, o.basis, "--lambda");
    Weight mu = parse_weight(d, o.mu, o.basis, "--mu");
    LeadingTermFit f = leading_term_fit(d, lam, mu, o.degree, o.nmax);
    if (o.json) {
        print_json(fit_json(d, lam, mu, f));
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < f.points.size(); ++i)
        rows.push_back({std::to_string(f.points[i]), f.samples[i].get_str()});
    print_kv({{"degree", std::to_string(f.degree)},
              {"anchor", std::to_string(f.anchor)},
              {"stride", std::to_string(f.stride)}});
    print_table({"n", "mult"}, rows);
    print_kv({{"estimate", rat_string(f.estimate)}});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coloured torus-knot invariants and lattice characters"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("algebra", o.alg, "algebra, e.g. A1, A2, C2, D4, G2")
            ->required();
        sub->add_flag("--json", o.json, "emit JSON instead of plain text");
    };
    auto add_basis = [&](CLI::App* sub) {
        sub->add_option("--basis", o.basis,
                        "coordinate basis for weight options")
            ->check(CLI::IsMember({"fundamental", "root"}));
    };
    auto add_knot = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "first torus parameter")->required();
        sub->add_option("--pp", o.pp, "second torus parameter")->required();
    };

    CLI::App* info = app.add_subcommand("info", "root datum summary");
    add_common(info);
    info->callback([&] { run_info(o); });

    CLI::App* mult = app.add_subcommand("mult", "weight multiplicities of L(lambda)");
    add_common(mult);
    add_basis(mult);
    mult->add_option("--lambda", o.lambda, "highest weight")->required();
    mult->add_option("--mu", o.mu, "weight to look up (omit for full table)");
    mult->callback([&] { run_mult(o); });

    CLI::App* jones = app.add_subcommand("jones", "coloured invariant of T(p,p')");
    add_common(jones);
    add_basis(jones);
    add_knot(jones);
    jones->add_option("--lambda", o.lambda, "colour")->required();
    jones->add_option("--form", o.form, "evaluation form")
        ->check(CLI::IsMember({"rosso", "lattice"}));
    jones->callback([&] { run_jones(o, false); });

    CLI::App* jhat = app.add_subcommand(
        "jhat", "invariant normalized by its trailing monomial");
    add_common(jhat);
    add_basis(jhat);
    add_knot(jhat);
    jhat->add_option("--lambda", o.lambda, "colour")->required();
    jhat->callback([&] { run_jones(o, true); });

    CLI::App* wchar_cmd = app.add_subcommand(
        "wchar", "truncated lattice character sum (eta-rescaled)");
    add_common(wchar_cmd);
    add_basis(wchar_cmd);
    add_knot(wchar_cmd);
    wchar_cmd->add_option("--j", o.node, "marked node");
    wchar_cmd->add_option("--window", o.window, "truncation window")->required();
    wchar_cmd->add_option("--nu", o.nu, "first decoration weight");
    wchar_cmd->add_option("--mu", o.mu, "second decoration weight");
    wchar_cmd->callback([&] { run_wchar(o); });

    CLI::App* limit = app.add_subcommand(
        "limit-rhs", "limit series of normalized invariants");
    add_common(limit);
    add_knot(limit);
    limit->add_option("--j", o.node, "marked node (simply-laced only)")
        ->each([&](const std::string&) { o.node_given = true; });
    limit->add_option("--window", o.window, "truncation window")->required();
    limit->callback([&] { run_limit(o); });

    CLI::App* stab = app.add_subcommand(
        "stabilize", "agreement depth of jhat(n*lambda) against the limit");
    add_common(stab);
    add_basis(stab);
    add_knot(stab);
    stab->add_option("--lambda", o.lambda, "colour direction")->required();
    stab->add_option("--window", o.window, "comparison window")->required();
    stab->add_option("--nmax", o.nmax, "largest colour multiple")->required();
    stab->add_option("--tolerance", o.tolerance, "relative match tolerance");
    stab->callback([&] { run_stabilize(o); });

    CLI::App* ratios = app.add_subcommand(
        "ratios", "multiplicity ratio table m(mu1)/m(mu2) in L(n*lambda)");
    add_common(ratios);
    add_basis(ratios);
    ratios->add_option("--lambda", o.lambda, "colour direction")->required();
    ratios->add_option("--mu1", o.mu1, "numerator weight")->required();
    ratios->add_option("--mu2", o.mu2, "denominator weight")->required();
    ratios->add_option("--nmax", o.nmax, "largest colour multiple")->required();
    ratios->callback([&] { run_ratios(o); });

    CLI::App* fit = app.add_subcommand(
        "fit", "finite-difference leading-coefficient estimate");
    add_common(fit);
    add_basis(fit);
    fit->add_option("--lambda", o.lambda, "colour direction")->required();
    fit->add_option("--mu", o.mu, "weight tracked across colours")->required();
    fit->add_option("--degree", o.degree, "polynomial degree")->required();
    fit->add_option("--nmax", o.nmax, "largest colour multiple")->required();
    fit->callback([&] { run_fit(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
