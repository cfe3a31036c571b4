#include "falsevac/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "falsevac/errors.hpp"
#include "falsevac/euclidean.hpp"
#include "falsevac/io.hpp"
#include "falsevac/solitons.hpp"
#include "falsevac/wavefunctional.hpp"

namespace falsevac::cli {

namespace {

enum class Kind { number, integer, text };

struct KeySpec {
    Kind kind;
    const char* default_value;
};

const std::map<std::string, KeySpec>& schema() {
    static const std::map<std::string, KeySpec> keys = {
        {"potential.family", {Kind::text, "quartic"}},
        {"potential.lambda", {Kind::number, "2"}},
        {"potential.a", {Kind::number, "1"}},
        {"potential.tilt", {Kind::number, "0"}},
        {"potential.c_a", {Kind::number, "1"}},
        {"potential.c_b", {Kind::number, "0"}},
        {"potential.phi_c", {Kind::number, "0"}},
        {"potential.phi0", {Kind::number, "0"}},
        {"potential.c0", {Kind::number, "0"}},
        {"potential.c1", {Kind::number, "0"}},
        {"grid.x_min", {Kind::number, "-10"}},
        {"grid.x_max", {Kind::number, "10"}},
        {"grid.n", {Kind::integer, "4001"}},
        {"bracket.min", {Kind::text, "auto"}},
        {"bracket.max", {Kind::text, "auto"}},
        {"action.mode", {Kind::text, "energy"}},
        {"action.profile", {Kind::text, "kink"}},
        {"action.constant", {Kind::number, "0"}},
        {"action.profile_csv", {Kind::text, ""}},
        {"action.t_p", {Kind::number, "1"}},
        {"action.tau_min", {Kind::number, "0"}},
        {"action.tau_max", {Kind::number, "1"}},
        {"action.tau_n", {Kind::integer, "11"}},
        {"delta.L", {Kind::number, "10"}},
        {"delta.n_values", {Kind::text, "0.5,1,2,4,8"}},
        {"sweep.eps_min", {Kind::number, "0.005"}},
        {"sweep.eps_max", {Kind::number, "0.05"}},
        {"sweep.eps_step", {Kind::number, "0.005"}},
        {"sweep.threads", {Kind::integer, "0"}},
    };
    return keys;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ConfigError(key, "expected a finite number, got '" + text + "'");
    return value;
}

long parse_integer(const std::string& key, const std::string& text) {
    long value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ConfigError(key, "expected an integer, got '" + text + "'");
    return value;
}

std::vector<double> parse_number_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(key, trim(item)));
    if (out.empty()) throw ConfigError(key, "expected a comma-separated list of numbers");
    return out;
}

}  // namespace

RunConfig::RunConfig() {
    for (const auto& [key, spec] : schema()) values_[key] = spec.default_value;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    const auto it = schema().find(key);
    if (it == schema().end()) throw ConfigError(key, "unknown configuration key");
    const std::string v = trim(value);
    switch (it->second.kind) {
        case Kind::number: parse_number(key, v); break;
        case Kind::integer: parse_integer(key, v); break;
        case Kind::text:
            if ((key == "bracket.min" || key == "bracket.max") && v != "auto") parse_number(key, v);
            break;
    }
    values_[key] = v;
}

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig config;
    std::stringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
        config.set(trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

double RunConfig::number(const std::string& key) const { return parse_number(key, values_.at(key)); }
long RunConfig::integer(const std::string& key) const { return parse_integer(key, values_.at(key)); }
const std::string& RunConfig::text(const std::string& key) const { return values_.at(key); }

PotentialSpec RunConfig::potential() const {
    const std::string& family = text("potential.family");
    PotentialSpec spec;
    if (family == "quartic")
        spec = QuarticDoubleWell{number("potential.lambda"), number("potential.a"), number("potential.tilt")};
    else if (family == "sine_gordon")
        spec = DrivenSineGordon{number("potential.c_a"), number("potential.c_b"), number("potential.phi_c"),
                                number("potential.tilt")};
    else if (family == "taylor")
        spec = TaylorQuartic{number("potential.phi0"), number("potential.c0"), number("potential.c1")};
    else
        throw ConfigError("potential.family", "expected quartic, sine_gordon or taylor, got '" + family + "'");
    try {
        validate(spec);
    } catch (const PreconditionError& e) {
        throw ConfigError("potential." + e.field(), e.what());
    }
    return spec;
}

Grid RunConfig::grid() const {
    const long n = integer("grid.n");
    if (n < 3) throw ConfigError("grid.n", "need at least 3 points");
    try {
        return Grid(number("grid.x_min"), number("grid.x_max"), static_cast<std::size_t>(n));
    } catch (const PreconditionError& e) {
        throw ConfigError(e.field(), e.what());
    }
}

Interval RunConfig::bracket() const {
    Interval auto_bracket{-2.0, 2.0};
    const PotentialSpec spec = potential();
    if (const auto* q = std::get_if<QuarticDoubleWell>(&spec)) auto_bracket = {-2.0 * q->a, 2.0 * q->a};
    if (std::holds_alternative<DrivenSineGordon>(spec)) auto_bracket = {-1.0, 7.0};
    if (const auto* t = std::get_if<TaylorQuartic>(&spec)) auto_bracket = {t->phi0 - 2.0, t->phi0 + 2.0};

    Interval b = auto_bracket;
    if (text("bracket.min") != "auto") b.lo = number("bracket.min");
    if (text("bracket.max") != "auto") b.hi = number("bracket.max");
    if (!(b.hi > b.lo)) throw ConfigError("bracket.max", "must exceed bracket.min");
    return b;
}

nlohmann::json RunConfig::resolved() const {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, spec] : schema()) {
        switch (spec.kind) {
            case Kind::number: out[key] = number(key); break;
            case Kind::integer: out[key] = integer(key); break;
            case Kind::text: out[key] = text(key); break;
        }
    }
    const Interval b = bracket();
    out["bracket.min"] = b.lo;
    out["bracket.max"] = b.hi;
    return out;
}

namespace {

nlohmann::json with_config(nlohmann::json doc, const RunConfig& config) {
    doc["config"] = config.resolved();
    return doc;
}

void run_kink(const RunConfig& config, const std::filesystem::path& out) {
    const KinkSolution k = solve_kink(config.potential(), config.grid());
    write_field_config_csv(out / "kink_profile.csv", k.profile);
    nlohmann::json doc = kink_summary_json(k);
    doc["profile_csv"] = "kink_profile.csv";
    write_json_file(out / "kink.json", with_config(doc, config));
}

void run_minima(const RunConfig& config, const std::filesystem::path& out) {
    const VacuumPair v = find_minima(config.potential(), config.bracket());
    write_json_file(out / "minima.json", with_config(to_json(v), config));
}

FieldConfig action_profile(const RunConfig& config) {
    const std::string& source = config.text("action.profile");
    if (source == "kink") return solve_kink(config.potential(), config.grid()).profile;
    if (source == "constant") return FieldConfig::constant(config.grid(), config.number("action.constant"));
    if (source == "csv") {
        const std::string& path = config.text("action.profile_csv");
        if (path.empty()) throw ConfigError("action.profile_csv", "required when action.profile = csv");
        return read_field_config_csv(path);
    }
    throw ConfigError("action.profile", "expected kink, constant or csv, got '" + source + "'");
}

void run_action(const RunConfig& config, const std::filesystem::path& out) {
    const PotentialSpec spec = config.potential();
    const FieldConfig profile = action_profile(config);
    const std::string& mode = config.text("action.mode");
    ActionReport report;
    if (mode == "energy") {
        report = energy_functional(spec, profile);
    } else if (mode == "reduced") {
        const double t_p = config.number("action.t_p");
        if (!(t_p > 0)) throw ConfigError("action.t_p", "must be > 0");
        report = reduced_action(spec, profile, t_p);
    } else if (mode == "spacetime") {
        const long tau_n = config.integer("action.tau_n");
        if (tau_n < 5) throw ConfigError("action.tau_n", "need at least 5 time slices");
        Grid tau = [&] {
            try {
                return Grid(config.number("action.tau_min"), config.number("action.tau_max"),
                            static_cast<std::size_t>(tau_n));
            } catch (const PreconditionError& e) {
                throw ConfigError("action.tau_max", e.what());
            }
        }();
        report = euclidean_action_2d(spec, SpacetimeConfig::static_extension(tau, profile));
    } else {
        throw ConfigError("action.mode", "expected energy, reduced or spacetime, got '" + mode + "'");
    }
    write_json_file(out / "action.json", with_config(to_json(report), config));
}

nlohmann::json functional_summary(const GaussianWavefunctional& psi, const std::string& csv_name) {
    return {{"center_csv_path", csv_name}, {"alpha", psi.stiffness().front()}, {"log_norm", psi.log_norm()}};
}

void run_overlap(const RunConfig& config, const std::filesystem::path& out) {
    const VacuumStates states = vacuum_states(config.potential(), config.grid(), config.bracket());
    const double log_ov = log_overlap(states.initial, states.final);
    write_field_config_csv(out / "psi_initial_center.csv", states.initial.center());
    write_field_config_csv(out / "psi_final_center.csv", states.final.center());
    nlohmann::json doc = {
        {"phi_F", states.vacua.phi_false},
        {"phi_T", states.vacua.phi_true},
        {"gap", states.vacua.gap},
        {"alpha", states.alpha},
        {"overlap", std::exp(log_ov)},
        {"log_overlap", log_ov},
        {"psi_initial", functional_summary(states.initial, "psi_initial_center.csv")},
        {"psi_final", functional_summary(states.final, "psi_final_center.csv")},
    };
    write_json_file(out / "overlap.json", with_config(doc, config));
}

void run_delta_demo(const RunConfig& config, const std::filesystem::path& out) {
    const double l_sep = config.number("delta.L");
    if (!(l_sep > 0)) throw ConfigError("delta.L", "must be > 0");
    std::vector<double> n_values = parse_number_list("delta.n_values", config.text("delta.n_values"));
    for (double n : n_values)
        if (!(n > 0)) throw ConfigError("delta.n_values", "sharpness values must be > 0");
    const double reference_n = 2.0 * std::sqrt(std::numbers::pi);
    n_values.push_back(reference_n);
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());

    std::string csv = "N,computed,closed_form,paper_value_flag\n";
    for (double n : n_values) {
        // Walls ten widths clear of the boundary, 20 nodes per unit of 1/N.
        const double half_extent = 0.5 * l_sep + 10.0 / n;
        const auto nodes = static_cast<std::size_t>(std::ceil(2.0 * half_extent * n / 0.05)) + 1;
        const DeltaPair pair{n, l_sep, Grid(-half_extent, half_extent, nodes)};
        const double computed = wall_gradient_energy(pair);
        const bool reference_value = std::abs(computed - 1.0 / std::numbers::sqrt2) <= 1e-6;
        csv += format_csv_number(n) + "," + format_csv_number(computed) + "," +
               format_csv_number(wall_gradient_energy_exact(n, l_sep)) + "," + (reference_value ? "1" : "0") + "\n";
    }
    write_text_file(out / "delta_demo.csv", csv);
}

struct SweepRow {
    double epsilon, phi_f, phi_t, gap, alpha, log_overlap;
};

void run_sweep(const RunConfig& config, const std::filesystem::path& out) {
    const double lo = config.number("sweep.eps_min");
    const double hi = config.number("sweep.eps_max");
    const double step = config.number("sweep.eps_step");
    if (!(step > 0)) throw ConfigError("sweep.eps_step", "must be > 0");
    if (!(lo > 0)) throw ConfigError("sweep.eps_min", "must be > 0 (zero tilt has no gap)");
    if (hi < lo) throw ConfigError("sweep.eps_max", "must be >= sweep.eps_min");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;

    const PotentialSpec base = config.potential();
    if (!std::holds_alternative<DrivenSineGordon>(base))
        throw ConfigError("potential.family", "sweep needs the sine_gordon family");
    const Grid grid = config.grid();
    const Interval bracket = config.bracket();

    std::vector<SweepRow> rows(count);
    std::vector<std::exception_ptr> errors(count);
    auto compute = [&](std::size_t k) {
        try {
            DrivenSineGordon sg = std::get<DrivenSineGordon>(base);
            sg.tilt = lo + static_cast<double>(k) * step;
            const VacuumStates s = vacuum_states(sg, grid, bracket);
            rows[k] = {sg.tilt, s.vacua.phi_false, s.vacua.phi_true, s.vacua.gap, s.alpha,
                       log_overlap(s.initial, s.final)};
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };

    long threads = config.integer("sweep.threads");
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<long>(threads, static_cast<long>(count));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (long t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < count; k = next++) compute(k);
            });
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::string csv = "epsilon,phi_F,phi_T,gap,alpha,log_overlap\n";
    for (const SweepRow& r : rows)
        csv += format_csv_number(r.epsilon) + "," + format_csv_number(r.phi_f) + "," + format_csv_number(r.phi_t) +
               "," + format_csv_number(r.gap) + "," + format_csv_number(r.alpha) + "," +
               format_csv_number(r.log_overlap) + "\n";
    write_text_file(out / "sweep.csv", csv);
}

}  // namespace

void run(const std::string& command, const RunConfig& config, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

    if (command == "kink") return run_kink(config, out_dir);
    if (command == "minima") return run_minima(config, out_dir);
    if (command == "action") return run_action(config, out_dir);
    if (command == "overlap") return run_overlap(config, out_dir);
    if (command == "delta-demo") return run_delta_demo(config, out_dir);
    if (command == "sweep") return run_sweep(config, out_dir);
    throw ConfigError("command", "unknown command '" + command + "'");
}

namespace {

struct SplitArgs {
    std::vector<std::string> cli;                                // handed to CLI11
    std::vector<std::pair<std::string, std::string>> overrides;  // --section.key value
};

// Configuration keys all contain a dot, CLI flags never do, so "--a.b value"
// and "--a.b=value" can be peeled off before CLI11 sees the command line.
SplitArgs split_overrides(int argc, char** argv) {
    SplitArgs out;
    out.cli.emplace_back(argc > 0 ? argv[0] : "falsevac");
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--", 0) != 0 || arg.find('.') == std::string::npos) {
            out.cli.push_back(std::move(arg));
            continue;
        }
        std::string key = arg.substr(2);
        std::string value;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.erase(eq);
        } else {
            if (i + 1 >= argc) throw ConfigError(key, "override is missing a value");
            value = argv[++i];
        }
        out.overrides.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

const std::map<std::string, std::string> descriptions = {
    {"kink", "Solve the BPS kink; writes kink_profile.csv and kink.json"},
    {"minima", "Locate false and true vacua; writes minima.json"},
    {"action", "Energy functional, reduced or (tau, x) Euclidean action; writes action.json"},
    {"overlap", "Gaussian vacuum functionals and their overlap; writes overlap.json"},
    {"delta-demo", "Wall-pair gradient energy vs sharpness N; writes delta_demo.csv"},
    {"sweep", "Vacua and overlap over a tilt range; writes sweep.csv"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-D false-vacuum decay toolkit: kinks, Bogomol'nyi bounds, Euclidean actions, Gaussian wavefunctionals"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("config", config_path, "Run configuration file (key = value lines)");
        sub->add_option("-o,--out-dir", out_dir, "Directory for output files");
        sub->footer("Any configuration key can be overridden with --<key> <value>, e.g. --potential.lambda 2");
    }

    SplitArgs args;
    try {
        args = split_overrides(argc, argv);
        std::vector<std::string> reversed(args.cli.rbegin(), args.cli.rend() - 1);
        app.parse(reversed);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return config_error;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : config_error;
    }

    CLI::App* chosen = app.get_subcommands().front();
    try {
        RunConfig config = config_path.empty() ? RunConfig{} : RunConfig::load(config_path);
        for (const auto& [key, value] : args.overrides) config.set(key, value);
        run(chosen->get_name(), config, out_dir);
        return ok;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return config_error;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return config_error;
    } catch (const SolverError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return numeric_error;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return io_error;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return numeric_error;
    }
}

}  // namespace falsevac::cli
