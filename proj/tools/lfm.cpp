// Command-line front end. Every subcommand prints the same JSON payload the
// HTTP API returns for the matching endpoint.
#include <fstream>
#include <iostream>

#include "lfm/core/error.hpp"
#include "lfm/lf/spec_io.hpp"
#include "lfm/service/http_api.hpp"
#include "lfm/service/project.hpp"
#include "lfm/service/store.hpp"

// httplib drags in <resolv.h>, whose `_res` macro breaks Eigen's product
// kernels, so Eigen (via the project headers) has to come first.
#include <CLI11.hpp>
#include <httplib.h>

using namespace lfm;
using namespace lfm::service;
using nlohmann::json;

namespace {

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json rows_json(const std::vector<SampleRow>& rows, SampleKind kind) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r, kind));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly supervised entity-matching workbench"};
  app.require_subcommand(1);
  std::string dir = ".";
  app.add_option("-p,--project", dir, "Project directory")->capture_default_str();

  auto* init = app.add_subcommand("init", "Create a project: ingest, block, generate LFs, fit");
  std::string left, right, id_column = "id", config_path, truth_path;
  init->add_option("--left", left, "Left table CSV")->required()->check(CLI::ExistingFile);
  init->add_option("--right", right, "Right table CSV")->required()->check(CLI::ExistingFile);
  init->add_option("--id-column", id_column, "Shared id column")->capture_default_str();
  init->add_option("--config", config_path, "Config JSON")->check(CLI::ExistingFile);
  init->add_option("--truth", truth_path, "Known matches (left_id,right_id), evaluation only")
      ->check(CLI::ExistingFile);

  auto* stats = app.add_subcommand("stats", "EM stats and per-LF stats");

  auto* lf_cmd = app.add_subcommand("lf", "Manage labeling functions");
  lf_cmd->require_subcommand(1);
  auto* lf_add = lf_cmd->add_subcommand("add", "Add or replace an LF from a JSON spec file");
  std::string spec_path;
  lf_add->add_option("spec", spec_path, "LF spec JSON")->required()->check(CLI::ExistingFile);
  auto* lf_rm = lf_cmd->add_subcommand("rm", "Delete an LF");
  std::string lf_name;
  lf_rm->add_option("name", lf_name)->required();
  auto* lf_ls = lf_cmd->add_subcommand("ls", "List LFs");
  auto* lf_show = lf_cmd->add_subcommand("show", "Print one LF spec");
  lf_show->add_option("name", lf_name)->required();
  auto* lf_try = lf_cmd->add_subcommand("try", "Evaluate a spec on one pair with a full trace");
  std::string left_id, right_id;
  lf_try->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  lf_try->add_option("left_id", left_id)->required();
  lf_try->add_option("right_id", right_id)->required();

  auto* apply = app.add_subcommand("apply", "Apply LFs incrementally and fit the model");

  auto* sample = app.add_subcommand("sample", "Smart or precision sample of pairs");
  std::string kind = "smart";
  std::size_t n = 20;
  sample->add_option("--kind", kind)->check(CLI::IsMember({"smart", "precision"}))->capture_default_str();
  sample->add_option("-n", n)->check(CLI::PositiveNumber)->capture_default_str();

  auto* label = app.add_subcommand("label", "Label a candidate pair");
  std::string value;
  label->add_option("left_id", left_id)->required();
  label->add_option("right_id", right_id)->required();
  label->add_option("value", value)->required()->check(CLI::IsMember({"match", "non-match", "clear"}));

  auto* drill = app.add_subcommand("drill", "False-positive or false-negative drilldown for an LF");
  std::string drill_kind = "fp";
  drill->add_option("name", lf_name)->required();
  drill->add_option("--kind", drill_kind)->check(CLI::IsMember({"fp", "fn"}))->capture_default_str();

  auto* exp = app.add_subcommand("export", "Predicted matches as CSV (left_id,right_id,gamma)");
  std::string out_path;
  exp->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*init) {
      ProjectConfig config;
      if (!config_path.empty()) config = config_from_json(json::parse(read_text(config_path)));
      std::optional<std::string> truth;
      if (!truth_path.empty()) truth = truth_path;
      auto project = Project::create(dir, left, right, id_column, config, truth);
      print(to_json(project->stats()));
      return 0;
    }
    if (*serve) {
      Workbench workbench(dir);
      httplib::Server server;
      install_routes(server, workbench);
      std::cerr << "listening on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return 1;
      }
      return 0;
    }

    auto project = Project::open(dir);
    if (*stats) {
      print(to_json(project->stats()));
    } else if (*lf_add) {
      const auto result = project->upsert_lf(lf::parse_spec_text(read_text(spec_path)));
      if (!result.ok()) {
        print({{"error", "validation_failed"}, {"diagnostics", to_json(result.diagnostics)}});
        return 2;
      }
      print({{"version", result.version}});
    } else if (*lf_rm) {
      project->delete_lf(lf_name);
      print({{"deleted", lf_name}});
    } else if (*lf_ls) {
      json out = json::array();
      for (const auto& e : project->list_lfs()) out.push_back(to_json(e));
      print(out);
    } else if (*lf_show) {
      print(to_json(project->get_lf(lf_name)));
    } else if (*lf_try) {
      const auto spec = lf::parse_spec_text(read_text(spec_path));
      print(to_json(project->dry_run(spec, {left_id, right_id})));
    } else if (*apply) {
      print(to_json(project->apply_and_fit()));
    } else if (*sample) {
      const auto k = parse_sample_kind(kind);
      print(rows_json(project->sample(k, n), k));
    } else if (*label) {
      print(to_json(project->label_pair({left_id, right_id}, parse_label_value(value))));
    } else if (*drill) {
      print(rows_json(project->drilldown(lf_name, parse_drilldown_kind(drill_kind)), SampleKind::precision));
    } else if (*exp) {
      if (out_path.empty()) {
        project->export_matches(std::cout);
      } else {
        std::ostringstream buf;
        project->export_matches(buf);
        atomic_write(out_path, buf.str());
      }
    }
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
