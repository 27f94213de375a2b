#include "projineq/cli/fuzz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "projineq/cli/checks.hpp"
#include "projineq/cli/csv.hpp"
#include "projineq/cli/error.hpp"
#include "projineq/dfun.hpp"
#include "projineq/hoelder.hpp"
#include "projineq/pcov.hpp"
#include "projineq/prob.hpp"

namespace projineq::cli {

using nlohmann::ordered_json;

void validate(const FuzzConfig &c) {
    if (c.max_dim < 1) throw InputError(ExitCode::InvalidValue, "fuzz: max_dim must be at least 1");
    if (c.max_outcomes < 1) throw InputError(ExitCode::InvalidValue, "fuzz: max_outcomes must be at least 1");
    if (!std::isfinite(c.range_min) || !std::isfinite(c.range_max) || !(c.range_min < c.range_max)) {
        throw InputError(ExitCode::InvalidValue, "fuzz: value range must be a finite interval with min < max");
    }
    if (!std::isfinite(c.tolerance) || !(c.tolerance > 0.0)) {
        throw InputError(ExitCode::InvalidValue, "fuzz: tolerance must be positive");
    }
}

void PropertyStats::record(double violation, double slack, bool violated, bool tight) {
    worst_slack = checks == 0 ? slack : std::min(worst_slack, slack);
    worst_violation = std::max(worst_violation, violation);
    ++checks;
    if (violated) ++violations;
    if (tight) ++equality_cases;
}

void PropertyStats::merge(const PropertyStats &o) {
    if (o.checks == 0) return;
    worst_slack = checks == 0 ? o.worst_slack : std::min(worst_slack, o.worst_slack);
    worst_violation = std::max(worst_violation, o.worst_violation);
    checks += o.checks;
    violations += o.violations;
    equality_cases += o.equality_cases;
}

double FuzzReport::worst_violation() const {
    double w = 0.0;
    for (const auto &[key, s] : properties) w = std::max(w, s.worst_violation);
    return w;
}

void FuzzReport::merge(FuzzReport &&o) {
    for (const auto &[key, s] : o.properties) properties[key].merge(s);
    for (const auto &[family, n] : o.instances) instances[family] += n;
    collinear_instances += o.collinear_instances;
    collinear_det_zero += o.collinear_det_zero;
    total_violations += o.total_violations;
    for (auto &f : o.failures) {
        if (failures.size() >= config.max_failures) break;
        failures.push_back(std::move(f));
    }
}

namespace {

enum class Family : std::uint64_t { Hilbert = 1, Walker = 2, Hoelder = 3 };

constexpr std::array<double, 5> kExponentGrid{1.2, 1.5, 2.0, 3.0, 5.0};

std::mt19937_64 trial_rng(std::uint64_t seed, Family family, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(family), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

class Generator {
public:
    Generator(std::mt19937_64 &rng, const FuzzConfig &c) : rng_(rng), c_(c) {}

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double value() { return uniform(c_.range_min, c_.range_max); }
    double gaussian() { return normal_(rng_); }

    Vector values_vector(std::size_t n) {
        std::vector<double> v(n);
        for (auto &e : v) e = value();
        return Vector(std::move(v));
    }
    Vector gaussian_vector(std::size_t n) {
        std::vector<double> v(n);
        for (auto &e : v) e = gaussian();
        return Vector(std::move(v));
    }
    std::vector<double> values(std::size_t m) {
        std::vector<double> v(m);
        for (auto &e : v) e = value();
        return v;
    }
    std::vector<double> weights(std::size_t m) {
        std::exponential_distribution<double> expo(1.0);
        std::vector<double> w(m);
        for (auto &e : w) e = expo(rng_);
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        for (auto &e : w) e /= total;
        return w;
    }
    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 &rng_;
    const FuzzConfig &c_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

ordered_json to_json_array(std::span<const double> v) {
    ordered_json a = ordered_json::array();
    for (double e : v) a.push_back(e);
    return a;
}

// The generating vectors, not the orthonormal basis, so a replay rebuilds the same projector bit for bit.
ordered_json dump_span_instance(std::span<const Vector> spanning, const Vector &x, const Vector &y) {
    ordered_json span = ordered_json::array();
    for (const auto &b : spanning) span.push_back(to_json_array(b.coords()));
    ordered_json j;
    j["version"] = 1;
    j["x"] = to_json_array(x.coords());
    j["y"] = to_json_array(y.coords());
    j["span"] = std::move(span);
    return j;
}

ordered_json dump_direction_instance(const Vector &z, const Vector &x, const Vector &y) {
    ordered_json j;
    j["version"] = 1;
    j["x"] = to_json_array(x.coords());
    j["y"] = to_json_array(y.coords());
    j["z"] = to_json_array(z.coords());
    return j;
}

ordered_json dump_sample_instance(const RandomVariable &X, const RandomVariable &Y) {
    const auto w = X.space()->weights();
    std::string csv = "X,Y,W\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
        csv += format_double(X.values()[i]) + "," + format_double(Y.values()[i]) + "," + format_double(w[i]) + "\n";
    }
    ordered_json j;
    j["weights"] = to_json_array(w);
    j["x"] = to_json_array(X.values());
    j["y"] = to_json_array(Y.values());
    j["csv"] = std::move(csv);
    return j;
}

// Accumulates checks of one chunk of trials.
class Recorder {
public:
    Recorder(FuzzReport &report, const char *family) : report_(report), family_(family) {}

    template <typename DumpFn>
    void record(std::uint64_t trial, const std::vector<Check> &checks, bool replayable, DumpFn &&dump) {
        const double tol = report_.config.tolerance;
        for (const auto &c : checks) record_one(trial, c, replayable, dump, tol);
    }

    template <typename DumpFn>
    void record_one(std::uint64_t trial, const Check &c, bool replayable, DumpFn &&dump, double tol) {
        auto &stats = slot(c.name);
        const double v = c.violation();
        const bool violated = !(v <= tol);
        stats.record(v, c.relative_slack(), violated, c.tight(tol));
        if (!violated) return;
        ++report_.total_violations;
        if (report_.failures.size() >= report_.config.max_failures) return;
        FailureDump f;
        f.trial = trial;
        f.family = family_;
        f.property = std::string(c.name);
        f.lhs = c.lhs;
        f.rhs = c.rhs;
        f.scale = c.scale;
        f.violation = v;
        f.replayable = replayable;
        f.instance = dump();
        report_.failures.push_back(std::move(f));
    }

private:
    PropertyStats &slot(std::string_view name) {
        // Trials touch the same few dozen names over and over; cache the map nodes.
        for (auto &[n, s] : cache_) {
            if (n == name) return *s;
        }
        auto &s = report_.properties[{family_, std::string(name)}];
        cache_.emplace_back(name, &s);
        return s;
    }

    FuzzReport &report_;
    std::string family_;
    std::vector<std::pair<std::string_view, PropertyStats *>> cache_;
};

void hilbert_trial(std::uint64_t trial, const FuzzConfig &c, Recorder &rec, FuzzReport &report) {
    auto rng = trial_rng(c.seed, Family::Hilbert, trial);
    Generator g(rng, c);
    const std::size_t n = g.index(1, c.max_dim);
    const std::size_t k = g.index(0, n);
    std::vector<Vector> spanning;
    for (std::size_t i = 0; i < k; ++i) spanning.push_back(g.gaussian_vector(n));
    const auto P = projector_from_spanning_set(n, spanning);

    Vector x = g.values_vector(n);
    Vector y = g.values_vector(n);
    const double kind = g.uniform(0.0, 1.0);
    const bool collinear = kind >= 0.60 && kind < 0.75;
    if (kind < 0.60) {
        // generic pair
    } else if (collinear) {
        y = g.uniform(-2.0, 2.0) * x;
    } else if (kind < 0.85) {
        x = project(P, x);
        y = complement_project(P, y);
    } else if (kind < 0.95) {
        x = project(P, x);
        y = x;
    } else {
        x = Vector::zeros(n);
    }
    const auto z = g.gaussian_vector(n);
    const double lambda = g.uniform(-3.0, 3.0);
    const double mu = g.uniform(-3.0, 3.0);
    const Vector x2 = g.values_vector(n);
    auto permuted = spanning;
    std::shuffle(permuted.begin(), permuted.end(), g.engine());

    auto span_dump = [&] { return dump_span_instance(spanning, x, y); };
    rec.record(trial, hilbert_checks(P, x, y), true, span_dump);
    if (norm(z) > 0.0) {
        rec.record(trial, direction_checks(z, x, y), true, [&] { return dump_direction_instance(z, x, y); });
    }

    const double nx = norm(x);
    const double ny = norm(y);
    const double nx2 = norm(x2);
    const double d = d_function(P, x, y);
    std::vector<Check> extra;
    extra.push_back({"d.homogeneity", CheckKind::Identity, d_function(P, lambda * x, mu * y),
                     std::fabs(lambda * mu) * d, std::fabs(lambda * mu) * nx * ny});
    extra.push_back({"d.subadditivity", CheckKind::Inequality, d_function(P, x + x2, y),
                     d + d_function(P, x2, y), (nx + nx2) * ny});
    extra.push_back({"pcov.bilinearity", CheckKind::Identity, p_covariance(P, lambda * x + x2, y),
                     lambda * p_covariance(P, x, y) + p_covariance(P, x2, y), (std::fabs(lambda) * nx + nx2) * ny});
    const auto Pp = projector_from_spanning_set(n, permuted);
    extra.push_back({"spanning.permutation", CheckKind::Identity, norm(project(P, x2) - project(Pp, x2)), 0.0, nx2});
    rec.record(trial, extra, false, span_dump);

    if (collinear) {
        ++report.collinear_instances;
        const auto vx = decoupling_vector(P, x);
        const auto vy = decoupling_vector(P, y);
        if (std::fabs(decoupling_det(vx, vy)) <= c.tolerance * std::max(nx * ny, 0.0) ||
            (nx * ny == 0.0 && decoupling_det(vx, vy) == 0.0)) {
            ++report.collinear_det_zero;
        }
    }
}

void walker_trial(std::uint64_t trial, const FuzzConfig &c, Recorder &rec) {
    auto rng = trial_rng(c.seed, Family::Walker, trial);
    Generator g(rng, c);
    const std::size_t m = g.index(1, c.max_outcomes);
    const auto space = ProbabilitySpace::create(g.weights(m));
    const RandomVariable X(space, g.values(m));
    RandomVariable Y(space, g.values(m));

    const double kind = g.uniform(0.0, 1.0);
    bool engineered = false;
    if (kind < 0.70) {
        // generic pair
    } else if (kind < 0.80) {
        Y = X.scaled(g.uniform(-5.0, 5.0));
        engineered = true;
    } else if (kind < 0.90) {
        // Y = c (Z + r), Z standardized, r = +-SR(X): equal squared Sharpe ratios
        const RandomVariable X0(space, g.values(m));
        const double s0 = stddev(X0);
        const auto srx = sharpe_ratio(X);
        if (s0 > 1e-6 && srx.defined()) {
            const double mean0 = expectation(X0);
            const double r = (g.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * *srx.value;
            const double scale = g.uniform(0.1, 5.0) * (g.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
            std::vector<double> v(m);
            for (std::size_t i = 0; i < m; ++i) v[i] = scale * ((X0.values()[i] - mean0) / s0 + r);
            Y = RandomVariable(space, std::move(v));
            engineered = true;
        }
    } else if (kind < 0.95) {
        Y = X;
        engineered = true;
    } else {
        Y = RandomVariable::constant(space, g.value());
    }

    auto dump = [&] { return dump_sample_instance(X, Y); };
    const auto checks = walker_checks(X, Y, c.tolerance);
    if (engineered) {
        const auto eq = sharpe_equalization_gap(X, Y, c.tolerance);
        rec.record(trial, {{"walker.engineered_equalized", CheckKind::Identity, eq.equalized ? 0.0 : 1.0, 0.0, 1.0}},
                   false, dump);
    }
    rec.record(trial, checks, true, dump);
}

void hoelder_trial(std::uint64_t trial, const FuzzConfig &c, Recorder &rec) {
    auto rng = trial_rng(c.seed, Family::Hoelder, trial);
    Generator g(rng, c);
    const double p = kExponentGrid[trial % kExponentGrid.size()];
    const auto pair = ConjugatePair::from_p(p);
    const std::size_t m = g.index(1, c.max_outcomes);
    const auto space = ProbabilitySpace::create(g.weights(m));
    RandomVariable X(space, g.values(m));
    RandomVariable Y(space, g.values(m));
    const double kind = g.uniform(0.0, 1.0);
    if (kind >= 0.80 && kind < 0.90) {
        Y = X;
    } else if (kind >= 0.90 && kind < 0.95) {
        Y = RandomVariable::constant(space, g.value());
    } else if (kind >= 0.95) {
        X = RandomVariable::constant(space, 0.0);
    }
    rec.record(trial, hoelder_checks(X, Y, pair), true, [&] {
        auto j = dump_sample_instance(X, Y);
        j["p"] = p;
        return j;
    });
}

FuzzReport run_chunk(const FuzzConfig &c, std::uint64_t begin, std::uint64_t end) {
    FuzzReport report;
    report.config = c;
    // Families are interleaved per trial so a chunk's failures stay in trial order.
    Recorder hilbert(report, "hilbert");
    Recorder walker(report, "walker");
    Recorder hoelder(report, "hoelder");
    for (std::uint64_t t = begin; t < end; ++t) {
        hilbert_trial(t, c, hilbert, report);
        walker_trial(t, c, walker);
        hoelder_trial(t, c, hoelder);
    }
    if (end > begin) {
        for (const char *f : {"hilbert", "walker", "hoelder"}) report.instances[f] = end - begin;
    }
    return report;
}

ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

} // namespace

FuzzReport run_fuzz(const FuzzConfig &config, unsigned threads) {
    validate(config);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t trials = config.trials;
    const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, trials));
    const std::uint64_t chunk = trials == 0 ? 0 : (trials + workers - 1) / workers;

    std::vector<FuzzReport> parts(workers);
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min(trials, w * chunk);
        const std::uint64_t end = std::min(trials, begin + chunk);
        pool.emplace_back([&parts, &config, w, begin, end] { parts[w] = run_chunk(config, begin, end); });
    }
    for (auto &t : pool) t.join();

    FuzzReport report;
    report.config = config;
    for (const char *f : {"hilbert", "walker", "hoelder"}) report.instances[f] = 0;
    for (auto &part : parts) report.merge(std::move(part));
    return report;
}

ordered_json to_json(const FuzzReport &r) {
    ordered_json j;
    j["format"] = "projineq.fuzz";
    j["version"] = 1;
    const auto &c = r.config;
    j["config"] = {{"seed", c.seed},
                   {"trials", c.trials},
                   {"max_dim", c.max_dim},
                   {"max_outcomes", c.max_outcomes},
                   {"value_range", {c.range_min, c.range_max}},
                   {"tolerance", c.tolerance}};
    j["passed"] = r.passed();
    j["total_violations"] = r.total_violations;
    j["worst_violation"] = r.worst_violation();
    ordered_json inst = ordered_json::object();
    for (const auto &[family, n] : r.instances) inst[family] = n;
    j["instances"] = std::move(inst);
    j["collinear"] = {{"instances", r.collinear_instances}, {"det_zero", r.collinear_det_zero}};

    ordered_json props = ordered_json::array();
    for (const auto &[key, s] : r.properties) {
        ordered_json p;
        p["family"] = key.first;
        p["name"] = key.second;
        p["checks"] = s.checks;
        p["violations"] = s.violations;
        p["equality_cases"] = s.equality_cases;
        p["worst_violation"] = s.worst_violation;
        p["worst_slack"] = s.checks > 0 ? finite_or_null(s.worst_slack) : ordered_json(nullptr);
        props.push_back(std::move(p));
    }
    j["properties"] = std::move(props);

    ordered_json fails = ordered_json::array();
    for (const auto &f : r.failures) {
        ordered_json e;
        e["trial"] = f.trial;
        e["family"] = f.family;
        e["property"] = f.property;
        e["lhs"] = f.lhs;
        e["rhs"] = f.rhs;
        e["scale"] = f.scale;
        e["violation"] = f.violation;
        e["replayable"] = f.replayable;
        e["instance"] = f.instance;
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    return j;
}

} // namespace projineq::cli
