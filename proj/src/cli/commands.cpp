#include "projineq/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "projineq/cli/csv.hpp"
#include "projineq/cli/error.hpp"
#include "projineq/cli/inputs.hpp"
#include "projineq/cli/report.hpp"
#include "projineq/errors.hpp"

namespace projineq::cli {

namespace {

constexpr double kDefaultTolerance = 1e-9;

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError(ExitCode::Io, "cannot write '" + path + "'");
    f << text;
    if (!f) throw InputError(ExitCode::Io, "failed writing '" + path + "'");
}

// Writes the JSON report and/or the text rendering; returns Ok or Violation.
template <typename Printer>
int emit(const Report &report, const std::optional<std::string> &json_out, std::ostream &out, Printer print) {
    if (json_out && *json_out == "-") {
        out << report.dump(2) << "\n";
    } else {
        print(out, report);
        if (json_out) write_text(*json_out, report.dump(2) + "\n");
    }
    return report["holds"].get<bool>() ? to_int(ExitCode::Ok) : to_int(ExitCode::Violation);
}

template <typename Body>
int guarded(const char *command, std::ostream &err, Body body) {
    try {
        return body();
    } catch (const InputError &e) {
        err << command << ": " << e.what() << "\n";
        return to_int(e.code());
    } catch (const DimensionError &e) {
        err << command << ": " << e.what() << "\n";
        return to_int(ExitCode::DimensionMismatch);
    } catch (const ZeroDirectionError &e) {
        err << command << ": zero direction: " << e.what() << "\n";
        return to_int(ExitCode::ZeroDirection);
    } catch (const DomainError &e) {
        err << command << ": " << e.what() << "\n";
        return to_int(ExitCode::InvalidValue);
    } catch (const std::filesystem::filesystem_error &e) {
        err << command << ": " << e.what() << "\n";
        return to_int(ExitCode::Io);
    }
}

} // namespace

double resolve_tolerance(std::optional<double> flag) {
    if (flag) {
        if (!std::isfinite(*flag) || !(*flag > 0.0)) {
            throw InputError(ExitCode::Usage, "--tolerance must be a positive number");
        }
        return *flag;
    }
    return tolerance_from_env(kDefaultTolerance);
}

int cmd_bounds(const BoundsOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded("bounds", err, [&] {
        const double tol = resolve_tolerance(opts.tolerance);
        const auto input = parse_bounds_input(read_file(opts.input));
        return emit(bounds_report(input, tol), opts.json_out, out, print_bounds);
    });
}

int cmd_walker(const WalkerOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded("walker", err, [&] {
        const double tol = resolve_tolerance(opts.tolerance);
        const auto table = parse_csv(read_file(opts.csv));
        return emit(walker_report(table, {opts.columns, opts.weights}, tol), opts.json_out, out, print_walker);
    });
}

int cmd_hoelder(const HoelderOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded("hoelder", err, [&] {
        const double tol = resolve_tolerance(opts.tolerance);
        if (!(opts.p > 1.0) || !std::isfinite(opts.p)) {
            throw InputError(ExitCode::InvalidValue, "p must be a finite number > 1");
        }
        const auto table = parse_csv(read_file(opts.csv));
        return emit(hoelder_report(table, {opts.columns, opts.weights}, opts.p, tol), opts.json_out, out,
                    print_hoelder);
    });
}

int cmd_fuzz(const FuzzOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded("fuzz", err, [&] {
        FuzzConfig config = opts.config;
        config.tolerance = resolve_tolerance(opts.tolerance);
        const auto report = run_fuzz(config, opts.threads);
        const auto json = to_json(report);

        if (opts.dump_dir) {
            std::filesystem::create_directories(*opts.dump_dir);
            for (std::size_t i = 0; i < report.failures.size(); ++i) {
                const auto &f = report.failures[i];
                const auto stem = (std::filesystem::path(*opts.dump_dir) / ("failure_" + std::to_string(i))).string();
                write_text(stem + ".json", f.instance.dump(2) + "\n");
                if (f.instance.contains("csv")) write_text(stem + ".csv", f.instance["csv"].get<std::string>());
            }
        }

        if (opts.json_out && *opts.json_out == "-") {
            out << json.dump(2) << "\n";
        } else {
            if (opts.json_out) write_text(*opts.json_out, json.dump(2) + "\n");
            out << "fuzz: seed " << config.seed << ", " << config.trials << " trials per family, tolerance "
                << config.tolerance << "\n";
            for (const auto &[key, s] : report.properties) {
                if (s.violations == 0) continue;
                out << "  VIOLATED " << key.first << "/" << key.second << ": " << s.violations << " of "
                    << s.checks << ", worst relative violation " << s.worst_violation << "\n";
            }
            std::size_t checks = 0;
            for (const auto &[key, s] : report.properties) checks += s.checks;
            out << "  " << report.properties.size() << " properties, " << checks << " checks, worst relative violation "
                << report.worst_violation() << "\n";
            out << "  collinear instances " << report.collinear_instances << " (determinant vanished in "
                << report.collinear_det_zero << ")\n";
            out << (report.passed() ? "PASS" : "FAIL") << "\n";
        }
        return report.passed() ? to_int(ExitCode::Ok) : to_int(ExitCode::Violation);
    });
}

} // namespace projineq::cli
