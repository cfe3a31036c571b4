#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "falsevac/cli.hpp"
#include "falsevac/errors.hpp"
#include "falsevac/io.hpp"

using namespace falsevac;
namespace fs = std::filesystem;

namespace {

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "falsevac");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli::main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("falsevac_test_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

nlohmann::json read_json(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

}  // namespace

TEST_CASE("RunConfig: parsing, comments, unknown keys") {
    const auto c = cli::RunConfig::parse("# header\npotential.family = sine_gordon  # trailing\n\n potential.c_a=2.5\n");
    CHECK(c.text("potential.family") == "sine_gordon");
    CHECK(c.number("potential.c_a") == 2.5);
    CHECK(std::holds_alternative<DrivenSineGordon>(c.potential()));
    CHECK(c.bracket().lo == -1.0);
    CHECK(c.bracket().hi == 7.0);

    try {
        cli::RunConfig::parse("potential.lambda = two\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "potential.lambda");
    }
    CHECK_THROWS_AS(cli::RunConfig::parse("potential.nope = 1\n"), ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::parse("just words\n"), ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::parse("grid.n = 3.5\n"), ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::parse("potential.lambda = -1\n").potential(), ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::parse("potential.family = cubic\n").potential(), ConfigError);
    CHECK_THROWS_AS(cli::RunConfig::parse("grid.x_max = -20\n").grid(), ConfigError);
}

TEST_CASE("RunConfig: resolved echo contains every key") {
    const auto j = cli::RunConfig{}.resolved();
    CHECK(j.at("potential.lambda") == 2.0);
    CHECK(j.at("grid.n") == 4001);
    CHECK(j.at("bracket.min") == -2.0);
    CHECK(j.size() == 29);
}

TEST_CASE("exit codes") {
    const fs::path out = scratch("exit");
    CHECK(run_cli({"kink", "-o", out.string()}) == cli::ok);
    CHECK(run_cli({"kink", "--potential.bogus", "1", "-o", out.string()}) == cli::config_error);
    CHECK(run_cli({"kink", "--potential.tilt", "0.2", "-o", out.string()}) == cli::config_error);
    CHECK(run_cli({"minima", (out / "missing.cfg").string(), "-o", out.string()}) == cli::io_error);
    CHECK(run_cli({"action", "--action.profile", "csv", "--action.profile_csv", (out / "nope.csv").string(), "-o",
                   out.string()}) == cli::io_error);
    CHECK(run_cli({"kink", "-o", "/proc/forbidden/dir"}) == cli::io_error);
    CHECK(run_cli({"frobnicate"}) == cli::config_error);
    CHECK(run_cli({"sweep", "--sweep.eps_step=0", "--potential.family=sine_gordon", "-o", out.string()}) ==
          cli::config_error);
}

TEST_CASE("kink command") {
    const fs::path out = scratch("kink");
    REQUIRE(run_cli({"kink", "--potential.lambda", "2", "--potential.a", "1", "-o", out.string()}) == cli::ok);
    const auto j = read_json(out / "kink.json");
    CHECK(std::abs(j.at("mass").get<double>() - 4.0 / 3) <= 1e-6);
    CHECK(j.at("config").at("potential.lambda") == 2.0);
    const FieldConfig profile = read_field_config_csv(out / j.at("profile_csv").get<std::string>());
    CHECK(profile.size() == 4001);
    CHECK(profile[2000] == doctest::Approx(0.0));
}

TEST_CASE("overlap command") {
    const fs::path out = scratch("overlap");
    const std::string cfg = (out / "run.cfg").string();
    std::ofstream(cfg) << "potential.family = sine_gordon\npotential.c_a = 1\npotential.c_b = 0\npotential.tilt = 0.01\n"
                          "grid.x_min = 0\ngrid.x_max = 7.283185307179586\ngrid.n = 501\n";
    REQUIRE(run_cli({"overlap", cfg, "-o", out.string()}) == cli::ok);
    const auto j = read_json(out / "overlap.json");
    CHECK(std::abs(j.at("phi_T").get<double>() - 6.2832) < 0.05);
    CHECK(j.at("alpha").get<double>() == doctest::Approx(1.0 / j.at("gap").get<double>()));
    CHECK(j.at("log_overlap").get<double>() < 0);
    CHECK(j.at("psi_initial").at("center_csv_path") == "psi_initial_center.csv");
    CHECK(fs::exists(out / "psi_final_center.csv"));
}

TEST_CASE("delta-demo command flags the 1/sqrt(2) row") {
    const fs::path out = scratch("delta");
    REQUIRE(run_cli({"delta-demo", "-o", out.string()}) == cli::ok);
    std::istringstream csv(slurp(out / "delta_demo.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "N,computed,closed_form,paper_value_flag");
    int flagged = 0;
    while (std::getline(csv, line)) {
        if (line.back() != '1') continue;
        ++flagged;
        CHECK(std::stod(line.substr(0, line.find(','))) == doctest::Approx(2 * std::sqrt(std::numbers::pi)));
        CHECK(line.find(",0.707106781187,") != std::string::npos);
    }
    CHECK(flagged == 1);
}

TEST_CASE("action command modes") {
    const fs::path out = scratch("action");
    REQUIRE(run_cli({"action", "--action.mode", "energy", "-o", out.string()}) == cli::ok);
    const double energy = read_json(out / "action.json").at("total");
    CHECK(energy == doctest::Approx(4.0 / 3).epsilon(1e-6));
    REQUIRE(run_cli({"action", "--action.mode", "reduced", "--action.t_p", "2", "-o", out.string()}) == cli::ok);
    const auto reduced = read_json(out / "action.json");
    CHECK(reduced.at("total").get<double>() == 2 * energy);
    CHECK(reduced.at("reduced") == true);
    REQUIRE(run_cli({"action", "--action.mode", "spacetime", "--action.tau_max", "3", "-o", out.string()}) == cli::ok);
    CHECK(read_json(out / "action.json").at("total").get<double>() == doctest::Approx(3 * energy).epsilon(1e-12));

    // Round trip through a profile CSV.
    REQUIRE(run_cli({"kink", "-o", out.string()}) == cli::ok);
    REQUIRE(run_cli({"action", "--action.profile", "csv", "--action.profile_csv", (out / "kink_profile.csv").string(),
                     "-o", out.string()}) == cli::ok);
    CHECK(read_json(out / "action.json").at("total").get<double>() == doctest::Approx(energy).epsilon(1e-9));
    CHECK(run_cli({"action", "--action.mode", "bounce", "-o", out.string()}) == cli::config_error);
}

TEST_CASE("sweep: parallel execution does not change the output") {
    const fs::path a = scratch("sweep_serial");
    const fs::path b = scratch("sweep_parallel");
    const std::vector<std::string> common = {"--potential.family", "sine_gordon", "--grid.x_min", "0",
                                             "--grid.x_max",      "10",          "--grid.n",     "101"};
    auto args = [&](const fs::path& out, const std::string& threads) {
        std::vector<std::string> v = {"sweep"};
        v.insert(v.end(), common.begin(), common.end());
        v.insert(v.end(), {"--sweep.threads", threads, "-o", out.string()});
        return v;
    };
    REQUIRE(run_cli(args(a, "1")) == cli::ok);
    REQUIRE(run_cli(args(b, "8")) == cli::ok);
    const std::string serial = slurp(a / "sweep.csv");
    CHECK(serial == slurp(b / "sweep.csv"));
    CHECK(std::count(serial.begin(), serial.end(), '\n') == 11);
    CHECK(serial.rfind("epsilon,phi_F,phi_T,gap,alpha,log_overlap\n0.005,", 0) == 0);
}
