#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "lfm/service/project.hpp"

namespace httplib {
class Server;
}

namespace lfm::service {

struct ApiRequest {
  std::string method;  // GET, POST, PUT, DELETE
  std::string path;    // e.g. /api/lfs/name_overlap
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Transport-independent request handling for one project directory. Bodies
// are JSON except the export, which is CSV. Errors come back as
// {"error": <code>, "message": <text>} with a 4xx status.
class Workbench {
 public:
  // Opens the project in `dir` if one exists; otherwise waits for POST /api/project.
  explicit Workbench(std::filesystem::path dir);

  ApiResponse handle(const ApiRequest& request);

  // nullptr until a project exists.
  Project* project();

 private:
  ApiResponse route(const ApiRequest& request);
  Project& require_project();

  std::filesystem::path dir_;
  std::mutex create_mutex_;
  std::unique_ptr<Project> project_;
};

int http_status(Errc code);

// Registers every endpoint on `server`, forwarding to `workbench`.
void install_routes(httplib::Server& server, Workbench& workbench);

}  // namespace lfm::service
