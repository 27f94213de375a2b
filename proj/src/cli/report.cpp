#include "projineq/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "projineq/cli/error.hpp"
#include "projineq/dfun.hpp"
#include "projineq/errors.hpp"
#include "projineq/hoelder.hpp"
#include "projineq/pcov.hpp"
#include "projineq/prob.hpp"

namespace projineq::cli {

namespace {

Report chain_json(const BoundChainReport &c) {
    Report j;
    j["lower"] = c.lower;
    j["middle"] = c.middle;
    j["upper"] = c.upper;
    j["slack_lower"] = c.slack_lower;
    j["slack_upper"] = c.slack_upper;
    j["holds"] = c.holds;
    return j;
}

Report witness_json(const InequalityWitness &w) {
    Report j;
    j["name"] = std::string(to_string(w.name));
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
    j["slack"] = w.slack;
    j["holds"] = w.holds;
    if (w.enhanced_rhs) j["enhanced_rhs"] = *w.enhanced_rhs;
    return j;
}

bool all_hold(const std::vector<Check> &checks, double tol) {
    for (const auto &c : checks) {
        if (!c.holds(tol)) return false;
    }
    return true;
}

std::string num(const Report &v) {
    if (v.is_null()) return "undefined";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (!v.is_number()) return v.dump();
    std::ostringstream s;
    s << std::setprecision(12) << v.get<double>();
    return s.str();
}

void print_checks(std::ostream &out, const Report &checks) {
    std::size_t failed = 0;
    for (const auto &c : checks) {
        if (!c["holds"].get<bool>()) {
            ++failed;
            out << "  FAILED " << c["name"].get<std::string>() << ": lhs " << num(c["lhs"]) << ", rhs "
                << num(c["rhs"]) << ", relative violation " << num(c["violation"]) << "\n";
        }
    }
    out << "  " << checks.size() - failed << "/" << checks.size() << " property checks hold\n";
}

struct Samples {
    SpaceRef space;
    std::vector<RandomVariable> vars;
};

Samples load_samples(const CsvTable &table, const SampleSpec &spec, double tol) {
    if (spec.columns.empty()) throw InputError(ExitCode::Usage, "no columns selected");
    if (table.rows.empty()) throw InputError(ExitCode::MalformedInput, "csv: no data rows");
    Samples s;
    if (spec.weight_column) {
        try {
            // never stricter than the default, so tight check tolerances still accept rounded weights
            s.space = ProbabilitySpace::create(table.numeric_column(*spec.weight_column),
                                               std::max(tol, kRelTolerance));
        } catch (const DomainError &e) {
            throw InputError(ExitCode::InvalidValue,
                             "weights column '" + *spec.weight_column + "': " + e.what());
        }
    } else {
        s.space = ProbabilitySpace::uniform(table.rows.size());
    }
    for (const auto &name : spec.columns) s.vars.emplace_back(s.space, table.numeric_column(name));
    return s;
}

} // namespace

Report checks_to_json(const std::vector<Check> &checks, double tol) {
    Report a = Report::array();
    for (const auto &c : checks) {
        Report j;
        j["name"] = std::string(c.name);
        j["kind"] = c.kind == CheckKind::Inequality ? "le" : "eq";
        j["lhs"] = c.lhs;
        j["rhs"] = c.rhs;
        j["scale"] = c.scale;
        j["violation"] = c.violation();
        j["holds"] = c.holds(tol);
        a.push_back(std::move(j));
    }
    return a;
}

Report bounds_report(const BoundsInput &in, double tol) {
    const std::size_t n = in.x.dim();
    const auto P = in.z ? rank_one_projector(*in.z) : projector_from_spanning_set(n, *in.span);
    std::optional<Vector> direction = in.z;
    if (!direction && P.rank() == 1) direction = P.basis().front();

    const auto &x = in.x;
    const auto &y = in.y;
    const auto vx = decoupling_vector(P, x);
    const auto vy = decoupling_vector(P, y);

    Report r;
    r["format"] = "projineq.bounds";
    r["version"] = kReportVersion;
    r["tolerance"] = tol;
    r["dim"] = n;
    r["projector"] = {{"kind", in.z ? "direction" : "span"}, {"rank", P.rank()}};
    r["decoupling"] = {{"x", {{"p", vx.p}, {"q", vx.q}}}, {"y", {{"p", vy.p}, {"q", vy.q}}}};
    r["d_function"] = d_function(P, x, y);
    const auto chain = bound_chain(P, x, y, tol);
    r["chain"] = chain_json(chain);
    r["identity_residual"] = d_identity_residual(P, x, y);
    const auto gap = cs_gap_lower_bound(P, x, y);
    const double sq = inner(x, x) * inner(y, y);
    r["gap"] = {{"gap", gap.gap}, {"bound", gap.bound}, {"holds", holds_within(gap.bound, gap.gap, sq, tol)}};
    r["p_covariance"] = {{"value", p_covariance(P, x, y)},
                         {"reduced", p_covariance_reduced(P, x, y)},
                         {"variance_x", p_variance(P, x)},
                         {"variance_y", p_variance(P, y)}};

    std::vector<InequalityWitness> witnesses{enhanced_richard(P, x, y, tol), enhanced_buzano(P, x, y, tol),
                                             enhanced_d(P, x, y, tol), d_inequality(P, x, y, tol),
                                             covariance_bound(P, x, y, tol)};
    auto checks = hilbert_checks(P, x, y);
    if (direction) {
        witnesses.push_back(classical_buzano(*direction, x, y, tol));
        witnesses.push_back(classical_richard(*direction, x, y, tol));
        const auto dc = direction_checks(*direction, x, y);
        checks.insert(checks.end(), dc.begin(), dc.end());
    }
    Report ws = Report::array();
    bool holds = chain.holds && all_hold(checks, tol);
    for (const auto &w : witnesses) {
        holds = holds && w.holds;
        ws.push_back(witness_json(w));
    }
    r["witnesses"] = std::move(ws);
    if (!direction) r["classical_note"] = "B and R need a rank-one projector";
    r["checks"] = checks_to_json(checks, tol);
    r["holds"] = holds;
    return r;
}

Report walker_report(const CsvTable &table, const SampleSpec &spec, double tol) {
    const auto s = load_samples(table, spec, tol);
    Report r;
    r["format"] = "projineq.walker";
    r["version"] = kReportVersion;
    r["tolerance"] = tol;
    r["outcomes"] = s.space->size();
    r["weighting"] = spec.weight_column ? *spec.weight_column : std::string("uniform");

    Report cols = Report::array();
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
        const auto sr = sharpe_ratio(s.vars[i]);
        Report c;
        c["name"] = spec.columns[i];
        c["mean"] = sr.mean;
        c["std"] = sr.sigma;
        c["l2_norm"] = l2_norm(s.vars[i]);
        c["sharpe"] = sr.value ? Report(*sr.value) : Report(nullptr);
        cols.push_back(std::move(c));
    }
    r["columns"] = std::move(cols);

    bool holds = true;
    Report pairs = Report::array();
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
        for (std::size_t j = i + 1; j < s.vars.size(); ++j) {
            const auto &X = s.vars[i];
            const auto &Y = s.vars[j];
            const auto chain = walker_chain(X, Y, tol);
            const auto eq = sharpe_equalization_gap(X, Y, tol);
            const auto srx = sharpe_ratio(X);
            const auto sry = sharpe_ratio(Y);
            const auto checks = walker_checks(X, Y, tol);
            Report p;
            p["x"] = spec.columns[i];
            p["y"] = spec.columns[j];
            p["e_xy"] = l2_inner(X, Y);
            p["chain"] = chain_json(chain);
            p["cs_bound"] = chain.upper;
            p["improvement"] = chain.upper - chain.middle;
            p["equalization"] = {{"gap", eq.gap}, {"equalized", eq.equalized}};
            if (srx.defined() && sry.defined()) {
                const double a = *srx.value * *srx.value;
                const double b = *sry.value * *sry.value;
                p["sharpe_squared_equal"] = std::fabs(a - b) <= tol * std::max({a, b, 1.0});
            } else {
                p["sharpe_squared_equal"] = nullptr;
            }
            p["checks"] = checks_to_json(checks, tol);
            const bool ok = chain.holds && all_hold(checks, tol);
            p["holds"] = ok;
            holds = holds && ok;
            pairs.push_back(std::move(p));
        }
    }
    r["pairs"] = std::move(pairs);
    r["holds"] = holds;
    return r;
}

Report hoelder_report(const CsvTable &table, const SampleSpec &spec, double p, double tol) {
    if (spec.columns.size() != 2) throw InputError(ExitCode::Usage, "hoelder: exactly two columns are required");
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw InputError(ExitCode::InvalidValue, "hoelder: p must be a finite number > 1");
    }
    const auto pair = ConjugatePair::from_p(p);
    const auto s = load_samples(table, spec, tol);
    const auto &X = s.vars[0];
    const auto &Y = s.vars[1];
    const auto rep = refined_hoelder(X, Y, pair, tol);
    const auto checks = hoelder_checks(X, Y, pair);

    Report r;
    r["format"] = "projineq.hoelder";
    r["version"] = kReportVersion;
    r["tolerance"] = tol;
    r["p"] = pair.p();
    r["q"] = pair.q();
    r["x"] = spec.columns[0];
    r["y"] = spec.columns[1];
    r["outcomes"] = s.space->size();
    r["lhs"] = rep.lhs;
    r["refined"] = rep.refined;
    r["classical"] = rep.classical;
    r["young_term"] = rep.young_term;
    r["improvement"] = rep.improvement;
    if (pair.p() == 2.0) {
        const auto nw = new_walker_p2(X, Y);
        r["new_walker"] = {{"bound", nw.bound}, {"seeh_bound", nw.seeh_bound}, {"upper", rep.classical}};
    } else {
        r["new_walker"] = nullptr;
    }
    r["checks"] = checks_to_json(checks, tol);
    r["holds"] = rep.holds && all_hold(checks, tol);
    return r;
}

void print_bounds(std::ostream &out, const Report &r) {
    out << "D-function bounds (dim " << r["dim"].get<std::size_t>() << ", " << r["projector"]["kind"].get<std::string>()
        << " projector of rank " << r["projector"]["rank"].get<std::size_t>() << ")\n";
    const auto &d = r["decoupling"];
    out << "  v_P(x) = (" << num(d["x"]["p"]) << ", " << num(d["x"]["q"]) << ")\n";
    out << "  v_P(y) = (" << num(d["y"]["p"]) << ", " << num(d["y"]["q"]) << ")\n";
    out << "  D(x,y|P) = " << num(r["d_function"]) << "\n";
    const auto &c = r["chain"];
    out << "  |<x,y>| <= D <= |x||y|: " << num(c["lower"]) << " <= " << num(c["middle"]) << " <= "
        << num(c["upper"]) << "  [" << (c["holds"].get<bool>() ? "holds" : "VIOLATED") << "]\n";
    out << "  determinant identity residual: " << num(r["identity_residual"]) << "\n";
    out << "  CS gap " << num(r["gap"]["gap"]) << " >= det^2 " << num(r["gap"]["bound"]) << "\n";
    out << "  P-covariance: " << num(r["p_covariance"]["value"]) << " (reduced form "
        << num(r["p_covariance"]["reduced"]) << ")\n";
    out << "  witnesses:\n";
    for (const auto &w : r["witnesses"]) {
        out << "    " << std::left << std::setw(4) << w["name"].get<std::string>() << std::right << num(w["lhs"])
            << " <= " << num(w["rhs"]) << "  slack " << num(w["slack"]);
        if (w.contains("enhanced_rhs")) out << "  enhanced rhs " << num(w["enhanced_rhs"]);
        out << (w["holds"].get<bool>() ? "" : "  VIOLATED") << "\n";
    }
    if (r.contains("classical_note")) out << "  (" << r["classical_note"].get<std::string>() << ")\n";
    print_checks(out, r["checks"]);
}

void print_walker(std::ostream &out, const Report &r) {
    out << "Walker analysis over " << r["outcomes"].get<std::size_t>() << " outcomes ("
        << r["weighting"].get<std::string>() << " weights)\n";
    for (const auto &c : r["columns"]) {
        out << "  " << c["name"].get<std::string>() << ": E " << num(c["mean"]) << ", sigma " << num(c["std"])
            << ", |.|_2 " << num(c["l2_norm"]) << ", Sharpe " << num(c["sharpe"]) << "\n";
    }
    for (const auto &p : r["pairs"]) {
        const auto &c = p["chain"];
        out << "  (" << p["x"].get<std::string>() << ", " << p["y"].get<std::string>() << "): E(XY) "
            << num(p["e_xy"]) << "; " << num(c["lower"]) << " <= walker " << num(c["middle"]) << " <= CS "
            << num(c["upper"]) << "; improvement " << num(p["improvement"]) << "; gap "
            << num(p["equalization"]["gap"]) << ", equalized " << num(p["equalization"]["equalized"]) << "\n";
        print_checks(out, p["checks"]);
    }
}

void print_hoelder(std::ostream &out, const Report &r) {
    out << "Refined Hoelder, p = " << num(r["p"]) << ", q = " << num(r["q"]) << " ("
        << r["x"].get<std::string>() << ", " << r["y"].get<std::string>() << ")\n";
    out << "  E|XY| " << num(r["lhs"]) << " <= refined " << num(r["refined"]) << " <= classical "
        << num(r["classical"]) << "\n";
    out << "  Young intermediate bound " << num(r["young_term"]) << ", improvement " << num(r["improvement"])
        << "\n";
    if (!r["new_walker"].is_null()) {
        const auto &nw = r["new_walker"];
        out << "  p = 2: walker " << num(nw["seeh_bound"]) << " <= half-improved " << num(nw["bound"])
            << " <= " << num(nw["upper"]) << "\n";
    }
    print_checks(out, r["checks"]);
}

} // namespace projineq::cli
