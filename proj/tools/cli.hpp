#pragma once

// Batch command-line front end. Each cmd_* returns the process exit code:
// 0 success, 1 input error, 2 computation error, 3 no solution. Failures
// print a single line "h2cost: error[<kind>]: <message>" to the error stream.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h2cost/h2cost.hpp"

namespace h2cost::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kComputeError = 2, kNoSolution = 3 };

struct Inputs {
  std::string dataset_path;
  std::string config_path;
  std::string scenario = "base-2020";
  bool strict = true;
};

struct Loaded {
  std::optional<Dataset> dataset;
  std::string dataset_bytes;
  Config config;
  std::string config_bytes;
};

inline Loaded load_inputs(const Inputs& in, bool need_dataset) {
  Loaded l;
  if (!in.config_path.empty()) {
    l.config_bytes = read_file(in.config_path);
    l.config = load_config(in.config_path);
  } else {
    l.config = parse_config(nlohmann::json());
  }
  if (need_dataset) {
    if (in.dataset_path.empty()) throw SchemaError("--dataset", "a dataset path is required");
    l.dataset_bytes = read_file(in.dataset_path);
    std::istringstream ss(l.dataset_bytes);
    l.dataset = parse_state_profiles(ss, in.dataset_path, LoadOptions{.strict = in.strict});
  }
  return l;
}

/// Runs `body`, mapping library exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "h2cost: error[input]: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "h2cost: error[compute]: " << e.what() << '\n';
    return kComputeError;
  } catch (const std::exception& e) {
    err << "h2cost: error[internal]: " << e.what() << '\n';
    return kComputeError;
  }
}

inline void open_output(const std::string& path, std::ofstream& file) {
  file.open(path, std::ios::binary | std::ios::trunc);
  if (!file) throw SchemaError(path, "cannot open output file for writing");
}

/// Companion path for the CSV summary: report.csv -> report.summary.csv.
inline std::string summary_path(const std::string& out) {
  std::filesystem::path p(out);
  const auto stem = p.stem().string();
  return (p.parent_path() / (stem + ".summary" + p.extension().string())).string();
}

inline int cmd_lcoh(const Inputs& in, const std::string& output_path, const std::string& format,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (format != "csv" && format != "json")
      throw SchemaError("--format", "must be csv or json");
    const auto l = load_inputs(in, true);
    const auto& scenario = l.config.scenario(in.scenario);
    const auto report = build_report(*l.dataset, l.config, scenario, l.dataset_bytes, l.config_bytes);
    if (output_path.empty()) {
      if (format == "json") write_report_json(report, out);
      else write_table_csv(report, out);
      return static_cast<int>(kOk);
    }
    std::ofstream file;
    open_output(output_path, file);
    if (format == "json") {
      write_report_json(report, file);
    } else {
      write_table_csv(report, file);
      std::ofstream summary;
      open_output(summary_path(output_path), summary);
      write_summary_csv(report, summary);
    }
    out << "wrote " << report.rows.size() << " rows to " << output_path << '\n';
    return static_cast<int>(kOk);
  });
}

/// `target` is "smr_ccs" (dataset-average SMR+CCS cost, needs a dataset) or a
/// number in USD/kg. `technology` is a technology name or "all".
inline int cmd_breakeven(const Inputs& in, const std::string& technology, const std::string& target,
                         std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<Technology> techs;
    if (technology == "all") {
      techs.assign(kTechnologies.begin(), kTechnologies.end());
    } else if (auto t = parse_technology(technology)) {
      techs.push_back(*t);
    } else {
      throw SchemaError("--technology", "unknown technology '" + technology + "'");
    }
    const bool use_smr = target == "smr_ccs";
    std::optional<double> fixed;
    if (!use_smr) {
      fixed = detail::parse_number<double>(target);
      if (!fixed || !std::isfinite(*fixed))
        throw SchemaError("--target", "must be smr_ccs or a number in USD/kg");
    }
    const auto l = load_inputs(in, use_smr);
    const auto& scenario = l.config.scenario(in.scenario);
    scenario.check(l.config.technologies,
                   l.dataset ? std::optional<int>(l.dataset->vintage_year) : std::nullopt);

    double target_lcoh = fixed.value_or(0.0);
    if (use_smr) {
      double sum = 0.0;
      for (const auto& p : l.dataset->profiles) sum += smr_lcoh(l.config.smr, p, true);
      target_lcoh = sum / static_cast<double>(l.dataset->profiles.size());
    }
    out << "scenario " << scenario.name() << ", target " << detail::fixed4(target_lcoh)
        << " USD/kg" << (use_smr ? " (dataset-average SMR+CCS)" : "") << '\n';
    bool any_missing = false;
    for (auto t : techs) {
      const auto projected = project_params(find_technology(l.config.technologies, t), scenario);
      const auto price =
          breakeven_electricity_price(projected, scenario.capacity_factor(), target_lcoh);
      out << to_string(t) << ": ";
      if (price) {
        out << detail::fixed4(*price) << " USD/kWh\n";
      } else {
        out << "no non-negative breakeven (LCOH at zero electricity price "
            << detail::fixed4(lcoh(projected, 0.0, scenario.capacity_factor()).lcoh)
            << " USD/kg)\n";
        any_missing = true;
      }
    }
    return static_cast<int>(any_missing ? kNoSolution : kOk);
  });
}

/// Crossover years of electrolytic carbon intensity against SMR and SMR+CCS
/// under a grid trajectory. `zero_year` overrides the scenario's trajectory
/// with a linear decline; `constant` forces a constant grid.
inline int cmd_crossover(const Inputs& in, std::optional<int> zero_year, bool constant,
                         std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto l = load_inputs(in, true);
    GridTrajectory trajectory = ConstantGrid{};
    if (zero_year) trajectory = LinearToZero{*zero_year};
    else if (!constant) trajectory = l.config.scenario(in.scenario).grid();
    if (const auto* z = std::get_if<LinearToZero>(&trajectory); z && z->zero_year <= l.dataset->vintage_year)
      throw ValidationError("--zero-year", "", "must be after the dataset vintage " +
                                                   std::to_string(l.dataset->vintage_year));
    const auto rows = crossover_summary(*l.dataset, l.config.technologies, l.config.smr, trajectory);
    const double smr_ci = smr_emissions(l.config.smr, false).carbon_intensity;
    const double ccs_ci = smr_emissions(l.config.smr, true).carbon_intensity;
    out << "trajectory: "
        << (std::holds_alternative<ConstantGrid>(trajectory)
                ? std::string("constant")
                : "linear to zero in " + std::to_string(std::get<LinearToZero>(trajectory).zero_year))
        << "; SMR " << detail::fixed4(smr_ci) << ", SMR+CCS " << detail::fixed4(ccs_ci)
        << " kg CO2e/kg\n";
    auto year = [](const std::optional<int>& y) {
      return y ? std::to_string(*y) : std::string("no crossover");
    };
    for (const auto& r : rows)
      out << r.technology << ": vs SMR " << year(r.vs_smr) << ", vs SMR+CCS " << year(r.vs_smr_ccs)
          << '\n';
    return static_cast<int>(kOk);
  });
}

inline int cmd_frontier(const Inputs& in, const std::string& output_path, const std::string& format,
                        std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (format != "csv" && format != "json") throw SchemaError("--format", "must be csv or json");
    const auto l = load_inputs(in, true);
    const auto& scenario = l.config.scenario(in.scenario);
    scenario.check(l.config.technologies, l.dataset->vintage_year);
    const auto rows = state_table(*l.dataset, l.config.technologies, l.config.smr, scenario);
    const auto frontier = pareto_frontier(electrolysis_rows(rows));

    std::ostringstream body;
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& f : frontier)
        j.push_back({{"state", f.state},
                     {"pathway", std::string(to_string(f.pathway))},
                     {"lcoh_usd_per_kg", f.lcoh},
                     {"carbon_intensity_kg_per_kg", f.carbon_intensity}});
      body << j.dump(2) << '\n';
    } else {
      body << "state,pathway,lcoh_usd_per_kg,carbon_intensity_kg_per_kg\n";
      for (const auto& f : frontier)
        body << f.state << ',' << to_string(f.pathway) << ',' << detail::fixed4(f.lcoh) << ','
             << detail::fixed4(f.carbon_intensity) << '\n';
    }
    if (output_path.empty()) {
      out << body.str();
    } else {
      std::ofstream file;
      open_output(output_path, file);
      file << body.str();
    }
    return static_cast<int>(kOk);
  });
}

inline int cmd_validate(const Inputs& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (in.dataset_path.empty() && in.config_path.empty())
      throw SchemaError("validate", "give --dataset and/or --config");
    const auto l = load_inputs(in, !in.dataset_path.empty());
    if (l.dataset) {
      for (const auto& s : l.config.scenarios)
        s.check(l.config.technologies, l.dataset->vintage_year);
      out << "dataset " << in.dataset_path << ": " << l.dataset->profiles.size()
          << " states, vintage " << l.dataset->vintage_year;
      if (!l.dataset->skipped.empty()) out << ", " << l.dataset->skipped.size() << " skipped";
      out << '\n';
    }
    if (!in.config_path.empty())
      out << "config " << in.config_path << ": " << l.config.technologies.size()
          << " technologies, " << l.config.scenarios.size() << " scenarios\n";
    return static_cast<int>(kOk);
  });
}

/// Parses argv and dispatches to a subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Levelized cost and carbon intensity of hydrogen by US state", "h2cost"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Inputs in;
  std::string format = "csv";
  std::string output;
  std::string technology = "all";
  std::string target = "smr_ccs";
  std::optional<int> zero_year;
  bool constant = false;

  auto common = [&](CLI::App* sub, bool dataset, bool scenario) {
    if (dataset) sub->add_option("--dataset", in.dataset_path, "State energy CSV");
    sub->add_option("--config", in.config_path, "Model configuration JSON");
    if (scenario) sub->add_option("--scenario", in.scenario, "Scenario name")->capture_default_str();
    sub->add_flag("--strict,!--no-strict", in.strict, "Reject rows with blank fields (default)");
  };

  auto* lcoh_cmd = app.add_subcommand("lcoh", "State x pathway LCOH and carbon-intensity report");
  common(lcoh_cmd, true, true);
  lcoh_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  lcoh_cmd->add_option("--out", output, "Output file (stdout if omitted)");

  auto* be_cmd = app.add_subcommand("breakeven", "Electricity price that matches a target LCOH");
  common(be_cmd, true, true);
  be_cmd->add_option("--technology", technology, "Alkaline, PEM, SOEC or all")->capture_default_str();
  be_cmd->add_option("--target", target, "smr_ccs or a value in USD/kg")->capture_default_str();

  auto* co_cmd = app.add_subcommand("crossover", "Years electrolysis CI drops below SMR levels");
  common(co_cmd, true, true);
  co_cmd->add_option("--zero-year", zero_year, "Linear grid decarbonization to zero in this year");
  co_cmd->add_flag("--constant", constant, "Hold grid intensity constant");

  auto* fr_cmd = app.add_subcommand("frontier", "Electrolysis cost/carbon Pareto frontier");
  common(fr_cmd, true, true);
  fr_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  fr_cmd->add_option("--out", output, "Output file (stdout if omitted)");

  auto* va_cmd = app.add_subcommand("validate", "Load and check a dataset and/or config");
  common(va_cmd, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "h2cost: error[usage]: " << e.what() << '\n';
    return kInputError;
  }

  if (lcoh_cmd->parsed()) return cmd_lcoh(in, output, format, out, err);
  if (be_cmd->parsed()) return cmd_breakeven(in, technology, target, out, err);
  if (co_cmd->parsed()) return cmd_crossover(in, zero_year, constant, out, err);
  if (fr_cmd->parsed()) return cmd_frontier(in, output, format, out, err);
  return cmd_validate(in, out, err);
}

}  // namespace h2cost::cli
