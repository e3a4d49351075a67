#include "pareto/cli.hpp"

#include "pareto/generators.hpp"
#include "pareto/json_io.hpp"
#include "pareto/server.hpp"
#include "pareto/svg.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace pareto {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& file, std::istream& in) {
  std::ostringstream buf;
  if (file.empty() || file == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(file, std::ios::binary);
  if (!f) throw IoError("cannot open '" + file + "'");
  buf << f.rdbuf();
  return buf.str();
}

Json read_json(const std::string& file, std::istream& in) { return Json::parse(read_text(file, in)); }

void write_text(const std::string& file, const std::string& text, std::ostream& out) {
  if (file.empty() || file == "-") {
    out << text;
    return;
  }
  std::ofstream f(file, std::ios::binary);
  if (!f) throw IoError("cannot write '" + file + "'");
  f << text;
}

void write_json(const std::string& file, const Json& j, std::ostream& out) { write_text(file, j.dump(2) + "\n", out); }

HttpServer* g_server = nullptr;
extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pareto persistence engine for 2-Morse singular-value diagrams", "pareto"};
  app.require_subcommand(1);
  std::string eps_text;
  app.add_option("--eps", eps_text, "relative geometric tolerance (overrides PARETO_EPS)");
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for randomized probes");

  std::string input, output, svg_out, path_file, waypoints_file, model_out, arrangement_file, example_name;
  bool infer = false, rep = false, as_json = false;
  int random_count = 0, port = 8080;
  size_t max_paths = 10000, cap = 20;

  auto* validate = app.add_subcommand("validate", "check a diagram against the genericity rules");
  validate->add_option("diagram", input, "diagram JSON (default stdin)");
  validate->add_flag("--json", as_json, "emit violations as JSON");

  auto* critical = app.add_subcommand("critical", "emit the Pareto critical set");
  critical->add_option("diagram", input);
  critical->add_option("-o,--output", output);

  auto* arrange = app.add_subcommand("arrange", "build the planar arrangement");
  arrange->add_option("diagram", input);
  arrange->add_option("-o,--output", output);
  arrange->add_option("--svg", svg_out, "write an SVG rendering");

  auto* label = app.add_subcommand("label", "label regions with Poincare polynomials");
  label->add_option("diagram", input);
  label->add_option("-o,--output", output);
  label->add_flag("--infer-effects", infer, "enumerate consistent create/kill assignments");
  label->add_option("--cap", cap, "maximum number of unannotated keys for inference");
  label->add_option("--svg", svg_out);

  auto* paths = app.add_subcommand("paths", "persistence paths");
  paths->add_option("diagram", input);
  paths->add_option("-o,--output", output);
  auto* rep_flag = paths->add_flag("--rep", rep, "representative family");
  auto* wp_opt = paths->add_option("--waypoints", waypoints_file, "route a path through waypoints");
  auto* rnd_opt = paths->add_option("--random", random_count, "emit N random persistence paths");
  paths->add_option("--max-paths", max_paths);
  paths->add_option("--svg", svg_out);
  rep_flag->excludes(wp_opt)->excludes(rnd_opt);
  wp_opt->excludes(rnd_opt);

  auto* barcode = app.add_subcommand("barcode", "path-wise barcode");
  barcode->add_option("diagram", input);
  barcode->add_option("--path", path_file, "path JSON")->required();
  barcode->add_option("-o,--output", output);
  barcode->add_option("--svg", svg_out);

  auto* report = app.add_subcommand("report", "Morse-Conley and Morse inequality report");
  report->add_option("diagram", input);
  report->add_option("--path", path_file, "path JSON")->required();
  report->add_flag("--json", as_json);

  auto* example = app.add_subcommand("example", "emit a built-in example diagram");
  example->add_option("name", example_name)->required()->check(CLI::IsMember(example_names()));
  example->add_option("-o,--output", output);
  example->add_option("--model", model_out, "write the companion sampled model");

  auto* oracle = app.add_subcommand("oracle", "brute-force sublevel homology per face");
  oracle->add_option("model", input)->required();
  oracle->add_option("--arrangement", arrangement_file, "arrangement JSON")->required();
  oracle->add_option("-o,--output", output);

  auto* serve = app.add_subcommand("serve", "serve a diagram over localhost HTTP");
  serve->add_option("diagram", input);
  serve->add_option("--port", port, "port (0 picks a free one)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << "\n" << app.help();
    return 2;
  }

  if (!eps_text.empty()) {
    const double v = std::strtod(eps_text.c_str(), nullptr);
    if (!(v > 0.0)) {
      err << "error[usage]: --eps must be positive\n";
      return 2;
    }
    ::setenv("PARETO_EPS", eps_text.c_str(), 1);
  }

  auto load_diagram = [&] { return diagram_from_json(read_json(input, in)); };

  try {
    if (*validate) {
      const auto v = validate_diagram(load_diagram());
      if (as_json) {
        out << to_json(v).dump(2) << "\n";
      } else {
        for (const auto& x : v) out << x.rule << ": " << x.message << "\n";
        if (v.empty()) out << "ok\n";
      }
      return v.empty() ? 0 : 1;
    }
    if (*critical) {
      write_json(output, to_json(compute_critical_set(load_diagram())), out);
      return 0;
    }
    if (*arrange) {
      const auto arr = build_arrangement(load_diagram());
      write_json(output, to_json(arr), out);
      if (!svg_out.empty()) write_text(svg_out, svg_arrangement(arr), out);
      return 0;
    }
    if (*label) {
      const auto d = load_diagram();
      const auto arr = build_arrangement(d);
      if (infer) {
        Json sols = Json::array();
        for (const auto& effects : infer_effects(arr, d, cap)) {
          const auto lab = propagate_labels(arr, effects, d.total_poly);
          sols.push_back(to_json(arr, lab));
        }
        write_json(output, Json{{"solutions", sols}, {"count", sols.size()}}, out);
        return 0;
      }
      const auto lab = propagate_labels(arr, d);
      write_json(output, to_json(arr, lab), out);
      if (!svg_out.empty()) write_text(svg_out, svg_arrangement(arr, &lab), out);
      return 0;
    }
    if (*paths) {
      const auto d = load_diagram();
      const auto arr = build_arrangement(d);
      const auto lab = propagate_labels(arr, d);
      std::vector<PersistencePath> drawn;
      if (!waypoints_file.empty()) {
        const auto p = path_from_json(read_json(waypoints_file, in), arr, lab);
        write_json(output, to_json(p), out);
        drawn.push_back(p);
      } else if (random_count > 0) {
        std::mt19937_64 rng(seed);
        PathFamily fam;
        for (int k = 0; k < random_count; ++k) fam.paths.push_back(random_path(arr, lab, rng));
        write_json(output, to_json(fam), out);
        drawn = fam.paths;
      } else {
        const auto fam = rep_family(arr, lab, max_paths);
        write_json(output, to_json(fam), out);
        drawn = fam.paths;
      }
      if (!svg_out.empty()) write_text(svg_out, svg_arrangement(arr, &lab, drawn), out);
      return 0;
    }
    if (*barcode || *report) {
      const auto d = load_diagram();
      const auto arr = build_arrangement(d);
      const auto lab = propagate_labels(arr, d);
      const auto p = path_from_json(read_json(path_file, in), arr, lab);
      if (*barcode) {
        const auto b = compute_barcode(p);
        write_json(output, to_json(b), out);
        if (!svg_out.empty()) write_text(svg_out, svg_barcode(b), out);
        return 0;
      }
      const auto r = morse_report(p, lab.labels[static_cast<size_t>(arr.top_face())], d.n);
      if (as_json)
        out << to_json(r).dump(2) << "\n";
      else
        out << format_report(r);
      return 0;
    }
    if (*example) {
      write_json(output, to_json(example_by_name(example_name)), out);
      if (!model_out.empty()) {
        if (example_name == "rotational")
          write_json(model_out, to_json(rotational_model({{1.0, 3.0}, {0, 2}, 2, 256})), out);
        else if (example_name == "sphere")
          write_json(model_out, to_json(sphere_projection_model()), out);
        else
          throw Error(ErrorCode::InvalidInput, "no sampled model for example '" + example_name + "'");
      }
      return 0;
    }
    if (*oracle) {
      const auto model = model_from_json(read_json(input, in));
      const auto arr = read_json(arrangement_file, in);
      if (!arr.contains("faces") || !arr["faces"].is_array())
        throw Error(ErrorCode::InvalidInput, "arrangement JSON has no faces");
      Json faces = Json::array();
      for (const auto& f : arr["faces"]) {
        const auto s = points_from_json(Json::array({f.at("sample")}));
        const auto p = betti(model, sublevel_complex(model, s.at(0)));
        Json coeffs = Json::array();
        for (int c : p.coeffs()) coeffs.push_back(c);
        faces.push_back({{"face", f.at("id")}, {"sample", f.at("sample")}, {"coeffs", coeffs}, {"label", p.to_string()}});
      }
      write_json(output, Json{{"faces", faces}}, out);
      return 0;
    }
    if (*serve) {
      Session session(load_diagram());
      HttpServer server(session);
      const int bound = server.bind(port);
      if (bound < 0) throw IoError("cannot bind 127.0.0.1:" + std::to_string(port));
      err << "serving on http://127.0.0.1:" << bound << "\n";
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      server.listen();
      g_server = nullptr;
      return 0;
    }
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 3;
  } catch (const Json::parse_error& e) {
    err << "error[malformed-json]: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    err << "error[invalid-input]: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "error[io]: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace pareto
