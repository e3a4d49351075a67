#include "pareto/svg.hpp"

#include <cstdio>
#include <cstdint>
#include <sstream>

namespace pareto {
namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 20.0;

const char* kDimColor[] = {"#2e8b57", "#8b4513", "#00bcd4", "#7a7a7a"};

const char* dim_color(int q) { return kDimColor[std::min(q, 3)]; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct View {
  Frame f;
  double scale;
  Vec2 map(Vec2 p) const { return {kMargin + (p.x - f.x0) * scale, kMargin + (f.y1 - p.y) * scale}; }
};

std::string polyline_attr(const View& v, const std::vector<Vec2>& pts) {
  std::string s;
  for (Vec2 p : pts) {
    const Vec2 q = v.map(p);
    s += num(q.x) + "," + num(q.y) + " ";
  }
  if (!s.empty()) s.pop_back();
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

// Pale fill keyed by label text, stable across runs.
std::string fill_for(const std::string& label) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : label) h = (h ^ c) * 1099511628211ull;
  const int r = 200 + static_cast<int>(h % 50), g = 200 + static_cast<int>((h / 50) % 50),
            b = 200 + static_cast<int>((h / 2500) % 50);
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string svg_arrangement(const Arrangement& arr, const RegionLabeling* lab, const std::vector<PersistencePath>& paths) {
  const double w = arr.frame.x1 - arr.frame.x0, h = arr.frame.y1 - arr.frame.y0;
  const View view{arr.frame, (kSize - 2 * kMargin) / std::max(w, h)};
  const double width = w * view.scale + 2 * kMargin, height = h * view.scale + 2 * kMargin;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
  for (size_t f = 0; f < arr.faces.size(); ++f) {
    const auto& face = arr.faces[f];
    std::string d = "M " + polyline_attr(view, face.outer) + " Z";
    for (const auto& hole : face.holes) d += " M " + polyline_attr(view, hole) + " Z";
    const std::string label = lab ? lab->labels[f].to_string() : std::to_string(f);
    out << "<path d=\"" << d << "\" fill=\"" << (lab ? fill_for(label) : "#f4f4f4")
        << "\" fill-rule=\"evenodd\" stroke=\"none\" data-face=\"" << f << "\"/>\n";
  }
  for (const auto& e : arr.edges) {
    if (e.is_frame()) {
      out << "<polyline points=\"" << polyline_attr(view, e.points) << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
      continue;
    }
    const ParetoArc& pa = arr.pareto[static_cast<size_t>(e.pareto)];
    std::string color = "#555";
    if (lab) {
      const auto it = lab->edge_effects.find(e.piece_key());
      if (it != lab->edge_effects.end()) color = it->second.effect == Effect::Create ? "#1f4fd1" : "#d12f1f";
    }
    out << "<polyline points=\"" << polyline_attr(view, e.points) << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\"" << (pa.kind == ParetoKind::Corner ? "" : " stroke-dasharray=\"6 4\"")
        << " data-key=\"" << escape(e.piece_key()) << "\"/>\n";
  }
  for (const auto& p : paths)
    out << "<polyline points=\"" << polyline_attr(view, p.realization)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (size_t f = 0; f < arr.faces.size(); ++f) {
    const Vec2 q = view.map(arr.faces[f].sample);
    const std::string label = lab ? lab->labels[f].to_string() : std::to_string(f);
    out << "<text x=\"" << num(q.x) << "\" y=\"" << num(q.y)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << escape(label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_barcode(const Barcode& b) {
  const double width = 640, left = 40, right = 20, row = 14;
  int rows = 0;
  for (const auto& d : b.dims) rows += static_cast<int>(d.size()) + 1;
  const double height = 30 + row * std::max(rows, 1);
  const double span = width - left - right;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
  out << "<line x1=\"" << num(left) << "\" y1=\"20\" x2=\"" << num(left + span)
      << "\" y2=\"20\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  double y = 20 + row;
  for (size_t q = 0; q < b.dims.size(); ++q) {
    if (b.dims[q].empty()) continue;
    out << "<text x=\"4\" y=\"" << num(y + 4) << "\" font-family=\"sans-serif\" font-size=\"11\">H" << q << "</text>\n";
    for (const auto& bar : b.dims[q]) {
      const double x0 = left + bar.birth * span;
      const double x1 = bar.death ? left + *bar.death * span : left + span;
      out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y)
          << "\" stroke=\"" << dim_color(static_cast<int>(q)) << "\" stroke-width=\"6\""
          << (bar.death ? "" : " stroke-linecap=\"square\"") << "/>\n";
      y += row;
    }
    y += row;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pareto
