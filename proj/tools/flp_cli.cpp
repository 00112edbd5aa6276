#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "flp/error.hpp"
#include "flp/map_kernel.hpp"
#include "flp/plot.hpp"
#include "flp/power_series.hpp"
#include "flp/radius_catalog.hpp"
#include "flp/report.hpp"
#include "flp/series_io.hpp"
#include "flp/verification.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using flp::ErrorKind;
using json = nlohmann::ordered_json;

flp::ParamList parse_params(const std::vector<std::string>& raw) {
  flp::ParamList out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw flp::Error(ErrorKind::ParseError, "expected key=value, got '" + kv + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(kv.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != kv.size() - eq - 1) throw flp::Error(ErrorKind::ParseError, "bad number in '" + kv + "'");
    out.emplace_back(kv.substr(0, eq), v);
  }
  return out;
}

json params_json(const flp::ParamList& params) {
  json j = json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

std::string params_text(const flp::ParamList& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ' ';
    s += k + '=' + flp::format_double(v);
  }
  return s;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    flp::write_text_file(out_path, text);
  }
}

int report_exit(const std::vector<flp::VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return kExitFail;
  }
  return kExitPass;
}

struct Row {
  flp::RadiusEntry entry;
  double oracle;
  double gap;
};

Row evaluate_row(flp::RadiusEntry e) {
  const double oracle = flp::oracle_root(e);
  const double gap = std::abs(e.closed_form - oracle);
  return {std::move(e), oracle, gap};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log-parabolic starlike class: maps, radii and numeric verification"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a target map at a point of the closed disc");
  std::string map_name = "lp";
  double z_re = 0.0, z_im = 0.0;
  flp::TargetParams tp;
  std::optional<double> tau, theta;
  eval->add_option("--map", map_name, "Target map id")->capture_default_str();
  eval->add_option("--re", z_re, "Re z")->capture_default_str();
  eval->add_option("--im", z_im, "Im z")->capture_default_str();
  eval->add_option("--alpha", tp.alpha, "alpha for exp/sl/booth");
  eval->add_option("--A", tp.A, "Janowski A");
  eval->add_option("--B", tp.B, "Janowski B");
  eval->add_option("--tau", tau, "Evaluate P_{tau,theta} instead of a named map");
  eval->add_option("--theta", theta, "Opening angle for P_{tau,theta}");

  // series
  auto* series = app.add_subcommand("series", "Print power-series coefficients as CSV");
  std::string series_kind = "p0";
  std::size_t degree = 8;
  std::string series_out;
  series->add_option("--kind", series_kind, "p0 | lp | f0 | g0")
      ->check(CLI::IsMember({"p0", "lp", "f0", "g0"}))
      ->capture_default_str();
  series->add_option("--degree", degree, "Highest power")->check(CLI::Range(1, 100000))->capture_default_str();
  series->add_option("--out", series_out, "Write to file instead of stdout");

  // radius
  auto* radius = app.add_subcommand("radius", "Closed form and oracle root for one radius entry");
  std::string radius_id;
  std::vector<std::string> radius_params;
  radius->add_option("id", radius_id, "Radius id")->required();
  radius->add_option("--param", radius_params, "key=value, repeatable");

  // radius-table
  auto* table = app.add_subcommand("radius-table", "All catalog radii with their oracle roots");
  std::string table_format = "csv";
  std::string table_out;
  table->add_option("--format", table_format, "csv | md | json")->check(CLI::IsMember({"csv", "md", "json"}))->capture_default_str();
  table->add_option("--out", table_out, "Write to file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification reports (JSON lines)");
  std::string verify_id;
  bool verify_all_flag = false;
  std::string only;
  std::vector<std::string> verify_params;
  flp::VerifyOptions vopt;
  std::string verify_out;
  verify->add_option("id", verify_id, "Radius family or suite id");
  verify->add_flag("--all", verify_all_flag, "Every catalog entry and suite");
  verify->add_option("--only", only, "With --all: keep one family or suite");
  verify->add_option("--param", verify_params, "key=value for a single radius entry, repeatable");
  verify->add_option("--tol", vopt.tolerance, "Closed form vs oracle tolerance")->capture_default_str();
  verify->add_option("--samples", vopt.samples, "Samples per inclusion probe")->check(CLI::Range(64, 1 << 22))
      ->capture_default_str();
  verify->add_option("--threads", vopt.threads, "Worker threads for sampling")->check(CLI::Range(1, 256));
  verify->add_option("--seed", vopt.seed, "Seed for random members")->capture_default_str();
  verify->add_option("--out", verify_out, "Write to file instead of stdout");

  // certify
  auto* certify = app.add_subcommand("certify", "Check the differential-inequality sufficient condition");
  std::string series_file;
  double t = 0.0;
  flp::CertifyOptions copt;
  certify->add_option("--series", series_file, "CSV of index,re,im")->required()->check(CLI::ExistingFile);
  certify->add_option("--t", t, "Mixing parameter in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  certify->add_option("--angles", copt.angles, "Angles per circle")->check(CLI::Range(8, 1 << 20))->capture_default_str();
  certify->add_option("--threads", copt.threads, "Worker threads")->check(CLI::Range(1, 256));

  // plot
  auto* plot = app.add_subcommand("plot", "Emit region, map-image, disc or corollary figures");
  std::string plot_kind;
  flp::PlotSpec spec;
  std::string plot_map = "lp";
  std::string plot_format = "svg";
  std::string plot_out;
  plot->add_option("kind", plot_kind, "region | map-image | discs | corollary-figure")
      ->required()
      ->check(CLI::IsMember({"region", "map-image", "discs", "corollary-figure"}));
  plot->add_option("--r", spec.r, "Circle radius for map images")->capture_default_str();
  plot->add_option("--map", plot_map, "Target map id for map images")->capture_default_str();
  plot->add_option("--alpha", spec.params.alpha, "alpha for exp/sl/booth");
  plot->add_option("--A", spec.params.A, "Janowski A");
  plot->add_option("--B", spec.params.B, "Janowski B");
  plot->add_option("--center", spec.disc_centers, "Inscribed disc center, repeatable");
  plot->add_option("--k", spec.corollary, "Corollary radius index 1..9")->capture_default_str();
  plot->add_option("--format", plot_format, "svg | csv")->check(CLI::IsMember({"svg", "csv"}))->capture_default_str();
  plot->add_option("--samples", spec.samples, "Points per curve")->check(CLI::Range(64, 1 << 20))->capture_default_str();
  plot->add_option("--out", plot_out, "Write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) {
      const flp::Complex z{z_re, z_im};
      json j;
      j["schema"] = flp::kSchemaVersion;
      flp::Complex w;
      if (tau || theta) {
        const flp::ParabolaParams pp{tau.value_or(0.0), theta.value_or(0.0)};
        w = flp::eval_P(pp, z);
        j["map"] = "p";
        j["params"] = {{"tau", pp.tau}, {"theta", pp.theta}};
      } else {
        const flp::TargetId id = flp::parse_target(map_name);
        w = flp::eval_target(id, tp, z);
        j["map"] = std::string(flp::target_name(id));
        j["params"] = {{"alpha", tp.alpha}, {"A", tp.A}, {"B", tp.B}};
      }
      j["z"] = {z.real(), z.imag()};
      j["value"] = {w.real(), w.imag()};
      std::cout << j.dump() << '\n';
      return kExitPass;
    }

    if (*series) {
      flp::PowerSeries s(0);
      if (series_kind == "p0") s = flp::p0_coefficients(degree);
      if (series_kind == "lp") s = flp::lp_series(degree);
      if (series_kind == "f0") s = flp::extremal_f0(degree);
      if (series_kind == "g0") s = flp::extremal_g0(degree);
      emit(flp::series_to_csv(s), series_out);
      return kExitPass;
    }

    if (*radius) {
      const Row row = evaluate_row(flp::make_radius_entry(radius_id, parse_params(radius_params)));
      json j;
      j["schema"] = flp::kSchemaVersion;
      j["id"] = row.entry.id;
      j["params"] = params_json(row.entry.params);
      j["formula"] = row.entry.formula;
      j["closed_form"] = row.entry.closed_form;
      j["oracle_root"] = row.oracle;
      j["gap"] = row.gap;
      j["capped"] = row.entry.capped;
      std::cout << j.dump() << '\n';
      return kExitPass;
    }

    if (*table) {
      std::string text;
      const bool md = table_format == "md";
      const bool as_json = table_format == "json";
      if (md) {
        text = "| id | params | formula | closed form | oracle root | gap |\n|---|---|---|---|---|---|\n";
      } else if (!as_json) {
        text = "# schema: " + std::to_string(flp::kSchemaVersion) + "\nid,params,formula,closed_form,oracle_root,gap\n";
      }
      for (auto& e : flp::radius_catalog()) {
        const Row row = evaluate_row(std::move(e));
        if (as_json) {
          json j;
          j["schema"] = flp::kSchemaVersion;
          j["id"] = row.entry.id;
          j["params"] = params_json(row.entry.params);
          j["formula"] = row.entry.formula;
          j["closed_form"] = row.entry.closed_form;
          j["oracle_root"] = row.oracle;
          j["gap"] = row.gap;
          text += j.dump() + '\n';
          continue;
        }
        char nums[96];
        std::snprintf(nums, sizeof nums, md ? "%.12f | %.12f | %.2e" : "%.12f,%.12f,%.2e", row.entry.closed_form,
                      row.oracle, row.gap);
        if (md) {
          text += "| " + row.entry.id + " | " + params_text(row.entry.params) + " | " + row.entry.formula + " | " + nums +
                  " |\n";
        } else {
          text += row.entry.id + ',' + params_text(row.entry.params) + ",\"" + row.entry.formula + "\"," + nums + '\n';
        }
      }
      emit(text, table_out);
      return kExitPass;
    }

    if (*verify) {
      std::vector<flp::VerificationReport> reports;
      if (verify_all_flag) {
        if (!verify_id.empty()) throw flp::Error(ErrorKind::ParseError, "give either an id or --all");
        reports = flp::verify_all(vopt, only);
      } else if (!verify_id.empty()) {
        if (!verify_params.empty()) {
          reports = flp::verify_entry(flp::make_radius_entry(verify_id, parse_params(verify_params)), vopt);
        } else {
          reports = flp::verify_all(vopt, verify_id);
        }
      } else {
        throw flp::Error(ErrorKind::ParseError, "verify needs an id or --all");
      }
      emit(flp::to_jsonl(reports), verify_out);
      return report_exit(reports);
    }

    if (*certify) {
      std::ifstream in(series_file);
      const flp::PowerSeries f = flp::series_from_csv(in);
      const auto rep = flp::certify_sufficient_condition(flp::AnalyticSample{f, 1.0}, t, copt);
      std::cout << flp::to_json(rep).dump() << '\n';
      return report_exit({rep});
    }

    if (*plot) {
      if (plot_kind == "region") spec.kind = flp::PlotKind::Region;
      if (plot_kind == "map-image") spec.kind = flp::PlotKind::MapImage;
      if (plot_kind == "discs") spec.kind = flp::PlotKind::Discs;
      if (plot_kind == "corollary-figure") spec.kind = flp::PlotKind::CorollaryFigure;
      spec.map = flp::parse_target(plot_map);
      spec.format = plot_format == "svg" ? flp::PlotFormat::Svg : flp::PlotFormat::Csv;
      emit(flp::render_plot(spec), plot_out);
      return kExitPass;
    }
  } catch (const flp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::UnknownTarget:
      case ErrorKind::UnknownId:
      case ErrorKind::ParamRange:
      case ErrorKind::ParseError:
      case ErrorKind::DomainError:
      case ErrorKind::CenterOutsideRange:
        return kExitUsage;
      default:
        return kExitFail;
    }
  }
  return kExitUsage;
}
