#include "pareto/server.hpp"
#include "pareto/json_io.hpp"
#include "pareto/svg.hpp"

#include <httplib.h>

namespace pareto {
namespace {

HttpResponse json_response(const Json& j, int status = 200) { return {status, "application/json", j.dump(2) + "\n"}; }

HttpResponse error_response(const Error& e) { return json_response(error_json(e), 422); }

HttpResponse malformed(const std::string& what) {
  return json_response(Json{{"error", {{"code", "malformed-json"}, {"message", what}}}}, 400);
}

}  // namespace

Session::Session(SingularValueDiagram d) : diagram_(std::move(d)) {
  diagram_json_ = to_json(diagram_).dump(2) + "\n";
  try {
    arr_.emplace(build_arrangement(diagram_));
    arrangement_json_ = to_json(*arr_).dump(2) + "\n";
  } catch (const Error& e) {
    arr_error_ = e;
    return;
  }
  try {
    lab_.emplace(propagate_labels(*arr_, diagram_));
    labeling_json_ = to_json(*arr_, *lab_).dump(2) + "\n";
  } catch (const Error& e) {
    lab_error_ = e;
  }
  svg_ = svg_arrangement(*arr_, lab_ ? &*lab_ : nullptr);
}

HttpResponse Session::rep_paths() const {
  std::call_once(rep_once_, [&] {
    try {
      rep_response_ = json_response(to_json(rep_family(*arr_, *lab_)));
    } catch (const Error& e) {
      rep_response_ = error_response(e);
    }
  });
  return rep_response_;
}

HttpResponse Session::post_path(const std::string& body) const {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    return malformed(e.what());
  }
  try {
    if (!j.is_object() || !j.contains("waypoints"))
      throw Error(ErrorCode::InvalidInput, "expected {\"waypoints\": [[x, y], ...]}");
    const PersistencePath path = make_path(*arr_, *lab_, points_from_json(j.at("waypoints")));
    const Barcode bc = compute_barcode(path);
    const PoincarePolynomial total = diagram_.total_poly ? *diagram_.total_poly : lab_->labels[size_t(arr_->top_face())];
    return json_response(
        Json{{"path", to_json(path)}, {"barcode", to_json(bc)}, {"report", to_json(morse_report(path, total, diagram_.n))}});
  } catch (const Error& e) {
    return error_response(e);
  } catch (const Json::exception& e) {
    return error_response(Error(ErrorCode::InvalidInput, e.what()));
  }
}

HttpResponse Session::post_equivalence(const std::string& body) const {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    return malformed(e.what());
  }
  try {
    if (!j.is_object() || !j.contains("paths") || !j.at("paths").is_array())
      throw Error(ErrorCode::InvalidInput, "expected {\"paths\": [{\"waypoints\": ...}, ...]}");
    std::vector<Barcode> bcs;
    for (const auto& p : j.at("paths")) bcs.push_back(compute_barcode(path_from_json(p, *arr_, *lab_)));
    return json_response(Json{{"classes", equivalence_classes(bcs)}});
  } catch (const Error& e) {
    return error_response(e);
  } catch (const Json::exception& e) {
    return error_response(Error(ErrorCode::InvalidInput, e.what()));
  }
}

HttpResponse Session::handle(std::string_view method, std::string_view path, const std::string& body) const {
  if (method == "GET" && path == "/diagram") return {200, "application/json", diagram_json_};
  const bool known = path == "/arrangement" || path == "/labeling" || path == "/rep-paths" ||
                     path == "/svg/arrangement" || path == "/path" || path == "/equivalence";
  if (!known)
    return json_response(Json{{"error", {{"code", "not-found"}, {"message", std::string(path)}}}}, 404);
  if (arr_error_) return error_response(*arr_error_);
  if (method == "GET" && path == "/arrangement") return {200, "application/json", arrangement_json_};
  if (method == "GET" && path == "/svg/arrangement") return {200, "image/svg+xml", svg_};
  if (lab_error_) return error_response(*lab_error_);
  if (method == "GET" && path == "/labeling") return {200, "application/json", labeling_json_};
  if (method == "GET" && path == "/rep-paths") return rep_paths();
  if (method == "POST" && path == "/path") return post_path(body);
  if (method == "POST" && path == "/equivalence") return post_equivalence(body);
  return json_response(Json{{"error", {{"code", "method-not-allowed"}, {"message", std::string(method)}}}}, 405);
}

struct HttpServer::Impl {
  explicit Impl(const Session& s) : session(s) {}
  const Session& session;
  httplib::Server server;
};

HttpServer::HttpServer(const Session& session) : impl_(std::make_unique<Impl>(session)) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = impl_->session.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  impl_->server.Get(R"(/.*)", route);
  impl_->server.Post(R"(/.*)", route);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(int port) {
  if (port == 0) return impl_->server.bind_to_any_port("127.0.0.1");
  return impl_->server.bind_to_port("127.0.0.1", port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace pareto
