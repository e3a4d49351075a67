#pragma once

#include "pareto/barcodes.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace pareto {

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// The immutable state behind serve mode: one diagram and everything derived
// from it. The representative family is computed on first request.
class Session {
 public:
  explicit Session(SingularValueDiagram d);

  // Transport-independent request handling, safe to call concurrently.
  HttpResponse handle(std::string_view method, std::string_view path, const std::string& body) const;

  const SingularValueDiagram& diagram() const { return diagram_; }

 private:
  HttpResponse post_path(const std::string& body) const;
  HttpResponse post_equivalence(const std::string& body) const;
  HttpResponse rep_paths() const;

  SingularValueDiagram diagram_;
  std::optional<Arrangement> arr_;
  std::optional<RegionLabeling> lab_;
  std::optional<Error> arr_error_, lab_error_;
  std::string diagram_json_, arrangement_json_, labeling_json_, svg_;
  mutable std::once_flag rep_once_;
  mutable HttpResponse rep_response_;
};

// Localhost HTTP front end for a Session.
class HttpServer {
 public:
  explicit HttpServer(const Session& session);
  ~HttpServer();

  // Binds 127.0.0.1; port 0 picks a free port. Returns the bound port or -1.
  int bind(int port);
  // Blocks until stop() is called.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pareto
