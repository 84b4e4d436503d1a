// eoperf: range-performance sweeps, recognition ranges, MRTD fits and single
// Pd evaluations from the command line.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eoperf/eoperf.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

struct SweepArgs {
  std::string scenario;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  std::string out_csv;
  std::string out_svg;
};

void add_sweep_options(CLI::App* cmd, SweepArgs& args) {
  cmd->add_option("--scenario", args.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--from", args.from, "First range (km)")->required();
  cmd->add_option("--to", args.to, "Last range (km)")->required();
  cmd->add_option("--step", args.step, "Range step (km)")->required();
  cmd->add_option("--out-csv", args.out_csv, "Output CSV path")->required();
  cmd->add_option("--out-svg", args.out_svg, "Optional SVG plot path");
}

void emit(const eoperf::SweepTable& table, const SweepArgs& args, const char* y_column) {
  // render both before touching disk so a failed plot leaves no half output
  const auto csv = eoperf::write_sweep_csv(table);
  const auto svg = args.out_svg.empty() ? std::string() : eoperf::write_sweep_svg(table, "range_km", y_column);
  write_file(args.out_csv, csv);
  if (!args.out_svg.empty()) write_file(args.out_svg, svg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electro-optical target acquisition performance model"};
  app.require_subcommand(1);

  SweepArgs visual_args;
  auto* visual = app.add_subcommand("visual", "Detection probability vs range for a visual scenario");
  add_sweep_options(visual, visual_args);

  SweepArgs thermal_args;
  auto* thermal = app.add_subcommand("thermal", "Recognition probability vs range for a thermal scenario");
  add_sweep_options(thermal, thermal_args);

  std::string range_scenario;
  double range_prob = 0.0;
  auto* range = app.add_subcommand(
      "range", "Range (km) at which the probability falls to --prob (recognition for thermal "
               "scenarios, detection for visual)");
  range->add_option("--scenario", range_scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  range->add_option("--prob", range_prob, "Target probability in (0, 1)")->required();

  std::string fit_data;
  std::string fit_json;
  std::string fit_csv;
  auto* fit = app.add_subcommand("fit-mrtd", "Fit MRTD = a*exp(b*sf) to observations by log-space OLS");
  fit->add_option("--data", fit_data, "CSV with header sf,mrtd")->required()->check(CLI::ExistingFile);
  fit->add_option("--out-json", fit_json, "Output JSON report")->required();
  fit->add_option("--out-csv", fit_csv, "Optional per-point CSV");

  double pd_snr = 0.0;
  double pd_pfa = 0.0;
  auto* pd = app.add_subcommand("pd", "Detection probability for a given SNR and false-alarm rate");
  pd->add_option("--snr", pd_snr, "Signal-to-noise ratio (>= 0)")->required();
  pd->add_option("--pfa", pd_pfa, "False-alarm probability in (0, 1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
  }

  try {
    if (*visual) {
      const auto file = eoperf::load_scenario(visual_args.scenario);
      const auto sweep = eoperf::visual_sweep(file.visual(), visual_args.from, visual_args.to, visual_args.step);
      emit(eoperf::make_table(sweep), visual_args, "pd");
    } else if (*thermal) {
      const auto file = eoperf::load_scenario(thermal_args.scenario);
      const auto sweep =
          eoperf::thermal_sweep(file.thermal(), thermal_args.from, thermal_args.to, thermal_args.step);
      emit(eoperf::make_table(sweep), thermal_args, "p_r");
    } else if (*range) {
      const auto file = eoperf::load_scenario(range_scenario);
      const std::optional<double> km = file.kind == eoperf::ScenarioKind::thermal
                                           ? eoperf::recognition_range(file.thermal(), range_prob)
                                           : eoperf::detection_range(file.visual(), range_prob);
      if (!km) {
        std::cout << "none\n";
        std::cerr << "probability at the nearest range (1 m) is already below " << range_prob << "\n";
      } else {
        std::cout << eoperf::format_number(*km, 8) << "\n";
      }
    } else if (*fit) {
      const auto observations = eoperf::parse_observations_csv(eoperf::read_text_file(fit_data));
      const auto report = eoperf::fit_mrtd(observations);
      write_file(fit_json, eoperf::fit_report_json(report, observations).dump(2) + "\n");
      if (!fit_csv.empty()) write_file(fit_csv, eoperf::write_fit_csv(report, observations));
    } else if (*pd) {
      std::cout << eoperf::format_number(eoperf::pd_from_snr(pd_snr, pd_pfa), 10) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
