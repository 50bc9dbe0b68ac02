#include "lfm/service/http_api.hpp"

#include <sstream>

#include <httplib.h>

#include "lfm/core/error.hpp"
#include "lfm/lf/spec_io.hpp"

namespace lfm::service {

using nlohmann::json;

namespace {

constexpr std::string_view kLfPrefix = "/api/lfs/";

ApiResponse json_response(const json& body, int status = 200) {
  return {status, "application/json", body.dump()};
}

ApiResponse error_response(int status, const std::string& code, const std::string& message) {
  return json_response({{"error", code}, {"message", message}}, status);
}

json parse_body(const ApiRequest& req) {
  try {
    return json::parse(req.body);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("request body is not valid JSON: ") + e.what());
  }
}

std::string require_string(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    throw Error(Errc::invalid_argument, std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

std::string query_or(const ApiRequest& req, const std::string& key, const std::string& fallback) {
  auto it = req.query.find(key);
  return it == req.query.end() ? fallback : it->second;
}

std::size_t parse_count(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw Error(Errc::invalid_argument, "n must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

json rows_json(const std::vector<SampleRow>& rows, SampleKind kind) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r, kind));
  return out;
}

}  // namespace

int http_status(Errc code) {
  switch (code) {
    case Errc::file_not_found:
    case Errc::unknown_lf:
    case Errc::unknown_pair:
      return 404;
    case Errc::no_usable_lfs:
    case Errc::model_not_fit:
    case Errc::no_predicted_matches:
      return 409;
    case Errc::validation_failed:
      return 422;
    case Errc::io_error:
      return 500;
    default:
      return 400;
  }
}

Workbench::Workbench(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (Project::exists(dir_)) project_ = Project::open(dir_);
}

Project* Workbench::project() {
  std::lock_guard lock(create_mutex_);
  return project_.get();
}

Project& Workbench::require_project() {
  Project* p = project();
  if (!p) throw Error(Errc::file_not_found, "no project yet; POST /api/project first");
  return *p;
}

ApiResponse Workbench::handle(const ApiRequest& request) {
  try {
    return route(request);
  } catch (const Error& e) {
    return error_response(http_status(e.code()), errc_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

ApiResponse Workbench::route(const ApiRequest& req) {
  const std::string& m = req.method;
  const std::string& path = req.path;

  if (path == "/api/project" && m == "POST") {
    const json body = parse_body(req);
    ProjectConfig config = body.contains("config") ? config_from_json(body.at("config")) : ProjectConfig{};
    std::optional<std::string> truth;
    if (body.contains("truth_path")) truth = require_string(body, "truth_path");
    std::lock_guard lock(create_mutex_);
    if (project_) return error_response(409, "project_exists", "this server already hosts a project");
    project_ = Project::create(dir_, require_string(body, "left_path"), require_string(body, "right_path"),
                               require_string(body, "id_column"), config, truth);
    return json_response(to_json(project_->stats()), 201);
  }
  if (path == "/api/stats" && m == "GET") return json_response(to_json(require_project().stats()));
  if (path == "/api/lfs" && m == "GET") {
    json out = json::array();
    for (const auto& e : require_project().list_lfs()) out.push_back(to_json(e));
    return json_response(out);
  }
  if (path == "/api/lfs/dry-run" && m == "POST") {
    const json body = parse_body(req);
    if (!body.contains("spec")) throw Error(Errc::invalid_argument, "missing field 'spec'");
    const auto spec = lf::spec_from_json(body.at("spec"));
    const auto trace = require_project().dry_run(
        spec, {require_string(body, "left_id"), require_string(body, "right_id")});
    return json_response(to_json(trace));
  }
  if (path.starts_with(kLfPrefix) && path.size() > kLfPrefix.size()) {
    const std::string name = path.substr(kLfPrefix.size());
    if (m == "GET") return json_response(to_json(require_project().get_lf(name)));
    if (m == "DELETE") {
      require_project().delete_lf(name);
      return json_response({{"deleted", name}});
    }
    if (m == "PUT") {
      json body = parse_body(req);
      if (!body.is_object()) throw Error(Errc::parse_error, "LF spec must be a JSON object");
      if (!body.contains("name")) body["name"] = name;
      const auto spec = lf::spec_from_json(body);
      if (spec.name != name) {
        throw Error(Errc::invalid_argument, "spec name '" + spec.name + "' does not match URL '" + name + "'");
      }
      const auto result = require_project().upsert_lf(spec);
      if (!result.ok()) {
        return json_response({{"error", "validation_failed"}, {"diagnostics", to_json(result.diagnostics)}},
                             422);
      }
      return json_response({{"name", name}, {"version", result.version}});
    }
  }
  if (path == "/api/apply" && m == "POST") return json_response(to_json(require_project().apply_and_fit()));
  if (path == "/api/sample" && m == "GET") {
    const auto kind = parse_sample_kind(query_or(req, "kind", "smart"));
    const auto n = parse_count(query_or(req, "n", "20"));
    return json_response(rows_json(require_project().sample(kind, n), kind));
  }
  if (path == "/api/label" && m == "POST") {
    const json body = parse_body(req);
    const auto value = parse_label_value(require_string(body, "label"));
    const auto em = require_project().label_pair(
        {require_string(body, "left_id"), require_string(body, "right_id")}, value);
    return json_response(to_json(em));
  }
  if (path == "/api/drilldown" && m == "GET") {
    auto it = req.query.find("lf");
    if (it == req.query.end()) throw Error(Errc::invalid_argument, "missing query parameter 'lf'");
    const auto kind = parse_drilldown_kind(query_or(req, "kind", "fp"));
    return json_response(rows_json(require_project().drilldown(it->second, kind), SampleKind::precision));
  }
  if (path == "/api/export" && m == "GET") {
    std::ostringstream out;
    require_project().export_matches(out);
    return {200, "text/csv", out.str()};
  }
  return error_response(404, "not_found", m + " " + path + " is not an endpoint");
}

void install_routes(httplib::Server& server, Workbench& workbench) {
  auto forward = [&workbench](const httplib::Request& req, httplib::Response& res) {
    ApiRequest api{req.method, req.path, {}, req.body};
    for (const auto& [k, v] : req.params) api.query[k] = v;
    const auto out = workbench.handle(api);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  const std::string any = R"(/api/.*)";
  server.Get(any, forward);
  server.Post(any, forward);
  server.Put(any, forward);
  server.Delete(any, forward);
}

}  // namespace lfm::service
