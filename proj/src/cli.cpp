#include "chiralpol/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chiralpol/config.hpp"
#include "chiralpol/errors.hpp"
#include "chiralpol/scans.hpp"

namespace chiralpol {

namespace {

bool has_unstable_rows(const ScanTable& table) {
  const auto& names = table.column_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] != "unstable") continue;
    for (const auto& row : table.rows())
      if (row[i] != 0.0) return true;
  }
  return false;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chiral polariton spectra: parameter scans and oracle regression runs.", "chiralpol"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  bool strict = false;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_path, "CSV output path (default: stdout)");
  app.add_option("--set", overrides, "key=value override, applied after the file")->take_all();
  app.add_option("--seed", seed, "seed of the randomized oracle suite");
  app.add_flag("--strict", strict, "exit with status 3 when any row is unstable");

  app.add_subcommand("scan-cavity", "omega_k x xi grid of polariton frequencies and fractions");
  app.add_subcommand("scan-n", "enantiomer discrimination against the emitter count");
  app.add_subcommand("scan-dispersion", "k_par sweep of the Tavis-Cummings bright sector");
  app.add_subcommand("oracle", "randomized Fock-space check of the closed-form frequencies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }
  const std::string subcommand = app.get_subcommands().front()->get_name();

  try {
    Config config = config_path.empty() ? Config{} : Config::from_file(config_path);
    for (const auto& o : overrides) config.set_assignment(o);
    if (seed) config.set("seed", std::to_string(*seed));

    ScanTable table;
    bool oracle_failed = false;
    if (subcommand == "scan-cavity") {
      table = scan_cavity(config);
    } else if (subcommand == "scan-n") {
      table = scan_n(config);
    } else if (subcommand == "scan-dispersion") {
      table = scan_dispersion(config);
    } else {
      OracleSuiteResult r = run_oracle_suite(config);
      oracle_failed = r.failures > 0;
      if (oracle_failed) err << "oracle: " << r.failures << " case(s) outside tolerance\n";
      table = std::move(r.table);
    }

    if (out_path.empty()) {
      table.write_csv(out);
    } else {
      std::ofstream file(out_path);
      if (!file) throw ConfigError("--out", "cannot open '" + out_path + "' for writing");
      table.write_csv(file);
      if (!file) throw ConfigError("--out", "write to '" + out_path + "' failed");
    }

    if (oracle_failed) return kExitOracleDeviation;
    if (strict && has_unstable_rows(table)) {
      err << subcommand << ": unstable rows present\n";
      return kExitInstability;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const InstabilityError& e) {
    err << "instability: " << e.what() << '\n';
    return kExitInstability;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitOracleDeviation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace chiralpol
