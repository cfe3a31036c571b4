#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "falsevac/lattice.hpp"
#include "falsevac/potentials.hpp"

namespace falsevac::cli {

enum ExitCode : int {
    ok = 0,
    config_error = 2,
    numeric_error = 3,
    io_error = 4,
};

inline const std::vector<std::string> commands = {"kink", "minima", "action", "overlap", "delta-demo", "sweep"};

/// Flat key/value run configuration with dotted section prefixes, e.g.
///
///     # comment
///     potential.family = sine_gordon
///     potential.c_a    = 1.0
///
/// Every key has a declared type and default; unknown keys are rejected.
class RunConfig {
public:
    RunConfig();

    static RunConfig parse(const std::string& text);
    static RunConfig load(const std::filesystem::path& path);

    /// Sets one key from its textual value; throws ConfigError naming the key.
    void set(const std::string& key, const std::string& value);

    double number(const std::string& key) const;
    long integer(const std::string& key) const;
    const std::string& text(const std::string& key) const;

    PotentialSpec potential() const;
    Grid grid() const;
    Interval bracket() const;

    /// Every key with its resolved value ("auto" brackets filled in).
    nlohmann::json resolved() const;

private:
    std::map<std::string, std::string> values_;
};

/// Runs one command, writing its artifacts into `out_dir`.
void run(const std::string& command, const RunConfig& config, const std::filesystem::path& out_dir);

/// Full command-line entry point: parses argv, runs, maps errors onto exit codes.
int main(int argc, char** argv);

}  // namespace falsevac::cli
