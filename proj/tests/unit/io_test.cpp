#include "pareto/cli.hpp"
#include "pareto/generators.hpp"
#include "pareto/json_io.hpp"
#include "pareto/server.hpp"

#include <gtest/gtest.h>
#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

using namespace pareto;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "pareto");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Json, DiagramRoundTrip) {
  for (const auto& name : example_names()) {
    SCOPED_TRACE(name);
    const auto d = example_by_name(name);
    const Json j = to_json(d);
    const auto back = diagram_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(back.arcs.size(), d.arcs.size());
    EXPECT_EQ(back.effects, d.effects);
  }
}

TEST(Json, SchemaErrorsAreInvalidInput) {
  Json j = to_json(gen_sphere_projection());
  j["arcs"][0].erase("index");
  try {
    diagram_from_json(j);
    FAIL() << "arc without index accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
  EXPECT_THROW(diagram_from_json(Json::array()), Error);
}

TEST(Json, ModelRoundTrip) {
  const auto m = octahedron_model();
  const auto back = model_from_json(Json::parse(to_json(m).dump()));
  ASSERT_EQ(back.size(), m.size());
  for (size_t c = 0; c < m.size(); ++c) {
    EXPECT_EQ(back.dim(static_cast<int>(c)), m.dim(static_cast<int>(c)));
    EXPECT_EQ(back.boundary(static_cast<int>(c)), m.boundary(static_cast<int>(c)));
  }
}

TEST(Json, PathFromWaypoints) {
  const auto d = gen_cupped_sphere();
  const auto arr = build_arrangement(d);
  const auto lab = propagate_labels(arr, d);
  const auto fam = rep_family(arr, lab);
  ASSERT_FALSE(fam.paths.empty());
  const auto& p = fam.paths.back();
  const auto again = path_from_json(Json{{"waypoints", to_json(p)["waypoints"]}}, arr, lab);
  EXPECT_EQ(again.key_sequence(), p.key_sequence());
  const auto realized = path_from_json(to_json(p), arr, lab);
  EXPECT_EQ(realized.key_sequence(), p.key_sequence());
}

TEST(Cli, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
}

TEST(Cli, ExampleThenLabel) {
  const auto ex = cli({"example", "cupped-sphere"});
  ASSERT_EQ(ex.code, 0) << ex.err;
  const auto lab = cli({"label"}, ex.out);
  ASSERT_EQ(lab.code, 0) << lab.err;
  EXPECT_NE(lab.out.find("1+t^2"), std::string::npos);
}

TEST(Cli, ValidateReportsFailures) {
  EXPECT_EQ(cli({"validate"}, cli({"example", "sphere"}).out).code, 0);
  Json j = Json::parse(cli({"example", "sphere"}).out);
  j["arcs"][0]["index"]["j"] = 7;
  EXPECT_EQ(cli({"validate"}, j.dump()).code, 1);
  const auto bad = cli({"validate"}, "{not json");
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("error["), std::string::npos);
}

TEST(Cli, CyclicRepPathsNonEmpty) {
  const auto ex = cli({"example", "cyclic-solid-torus"});
  ASSERT_EQ(ex.code, 0) << ex.err;
  const auto paths = cli({"paths", "--rep"}, ex.out);
  ASSERT_EQ(paths.code, 0) << paths.err;
  const Json j = Json::parse(paths.out);
  EXPECT_FALSE(j.at("paths").empty());
}

TEST(Cli, BarcodeAndReportFromPath) {
  const auto ex = cli({"example", "sphere"}).out;
  const auto fam = Json::parse(cli({"paths", "--rep"}, ex).out);
  const std::string path = (std::filesystem::temp_directory_path() / "pareto_cli_path.json").string();
  std::ofstream(path) << fam.at("paths").at(0).dump();
  const auto bc = cli({"barcode", "--path", path}, ex);
  ASSERT_EQ(bc.code, 0) << bc.err;
  EXPECT_TRUE(Json::parse(bc.out).contains("bars"));
  const auto rep = cli({"report", "--path", path, "--json"}, ex);
  ASSERT_EQ(rep.code, 0) << rep.err;
  EXPECT_TRUE(Json::parse(rep.out).at("conley_ok").get<bool>());
  std::remove(path.c_str());
}

TEST(Server, SessionRoutes) {
  const Session s(gen_cupped_sphere());
  EXPECT_EQ(s.handle("GET", "/diagram", "").status, 200);
  EXPECT_EQ(s.handle("GET", "/nowhere", "").status, 404);
  EXPECT_EQ(s.handle("DELETE", "/labeling", "").status, 405);
  const auto lab = s.handle("GET", "/labeling", "");
  ASSERT_EQ(lab.status, 200);
  EXPECT_NE(lab.body.find("1+t^2"), std::string::npos);
  EXPECT_EQ(s.handle("GET", "/svg/arrangement", "").content_type, "image/svg+xml");
  const Json rep = Json::parse(s.handle("GET", "/rep-paths", "").body);
  ASSERT_FALSE(rep.at("paths").empty());
  const Json wp{{"waypoints", rep["paths"][0]["waypoints"]}};
  const auto post = s.handle("POST", "/path", wp.dump());
  ASSERT_EQ(post.status, 200) << post.body;
  EXPECT_TRUE(Json::parse(post.body).contains("barcode"));
  EXPECT_EQ(s.handle("POST", "/path", "{oops").status, 400);
  EXPECT_EQ(s.handle("POST", "/path", "{}").status, 422);
  const auto eq = s.handle("POST", "/equivalence", Json{{"paths", {wp, wp}}}.dump());
  ASSERT_EQ(eq.status, 200) << eq.body;
  EXPECT_EQ(Json::parse(eq.body).at("classes"), Json::parse("[[0, 1]]"));
}

TEST(Server, GreenRouteHasBarsInDimensionsZeroAndTwo) {
  const Session s(gen_cupped_sphere());
  const Json rep = Json::parse(s.handle("GET", "/rep-paths", "").body);
  const Json* green = nullptr;
  for (const auto& p : rep.at("paths"))
    if (p.at("crossings").size() == 2) green = &p;
  ASSERT_NE(green, nullptr);
  const auto res = s.handle("POST", "/path", Json{{"waypoints", (*green)["waypoints"]}}.dump());
  ASSERT_EQ(res.status, 200) << res.body;
  const Json bars = Json::parse(res.body).at("barcode").at("bars");
  for (size_t q = 0; q < bars.size(); ++q) EXPECT_EQ(bars[q].empty(), q == 1) << q;
}

TEST(Server, NonMonotoneWaypointsAreOrderError) {
  const Session s(gen_cupped_sphere());
  const auto res = s.handle("POST", "/path", R"({"waypoints": [[1.0, 1.0], [-1.0, -1.0]]})");
  EXPECT_EQ(res.status, 422);
  EXPECT_EQ(Json::parse(res.body).at("error").at("code"), "order");
}

TEST(Server, KleinLabelingHasOnePlusFourT) {
  const Session s(gen_klein());
  EXPECT_NE(s.handle("GET", "/labeling", "").body.find("\"1+4t\""), std::string::npos);
}

TEST(Server, InvalidDiagramReportsError) {
  auto d = gen_sphere_projection();
  d.effects.clear();
  const Session s(d);
  EXPECT_EQ(s.handle("GET", "/arrangement", "").status, 200);
  const auto lab = s.handle("GET", "/labeling", "");
  EXPECT_EQ(lab.status, 422);
  EXPECT_NE(lab.body.find("incomplete"), std::string::npos);
}

TEST(Server, RealSocket) {
  const Session s(gen_sphere_projection());
  HttpServer server(s);
  const int port = server.bind(0);
  ASSERT_GT(port, 0);
  std::thread t([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/labeling");
  for (int k = 0; k < 50 && !res; ++k) {
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
    res = client.Get("/labeling");
  }
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_NE(res->body.find("1+t^2"), std::string::npos);
  const auto post = client.Post("/path", "[", "application/json");
  ASSERT_TRUE(post);
  EXPECT_EQ(post->status, 400);
  server.stop();
  t.join();
}
