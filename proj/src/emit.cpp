#include "knotchar/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "knotchar/error.hpp"

namespace knotchar {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string num(std::int64_t x) { return std::to_string(x); }

std::string complex_json(Complex z) { return "[" + num(z.real()) + ", " + num(z.imag()) + "]"; }

std::string point_json(const CharPoint& p) {
  return "[" + complex_json(p.a) + ", " + complex_json(p.b) + ", " + complex_json(p.c) + "]";
}

std::string_view endpoint_name(Endpoint e) { return e == Endpoint::R0 ? "r0" : "r1"; }

std::string px(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// JSON reading helpers.
using nlohmann::json;

Complex read_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::InvalidInput, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

CharPoint read_point(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::InvalidInput, "expected 3 coordinates");
  return {read_complex(j[0]), read_complex(j[1]), read_complex(j[2])};
}

}  // namespace

std::string emit_json(const VarietyDescription& v) {
  std::string out = "{\n";
  out += "  \"m\": " + num(v.kt.m()) + ",\n";
  out += "  \"n\": " + num(v.kt.n()) + ",\n";
  out += "  \"components\": [";
  std::size_t line_index = 0;
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    const ComponentId& c = v.components[i];
    out += i == 0 ? "\n" : ",\n";
    if (c.is_red()) {
      out += "    {\"type\": \"red\"}";
      continue;
    }
    const IrrLine& line = v.lines.at(line_index++);
    out += "    {\n";
    out += "      \"type\": \"irr\",\n";
    out += "      \"k\": " + num(c.k) + ",\n";
    out += "      \"kp\": " + num(c.kp) + ",\n";
    out += "      \"lambda\": " + complex_json(line.lambda) + ",\n";
    out += "      \"mu\": " + complex_json(line.mu) + ",\n";
    out += "      \"psi_base\": " + point_json(line.base) + ",\n";
    out += "      \"psi_dir\": " + point_json(line.direction) + ",\n";
    out += "      \"intersections\": [";
    bool first = true;
    for (const IntersectionRecord& rec : v.intersections) {
      if (!(rec.component == c)) continue;
      out += first ? "\n" : ",\n";
      first = false;
      out += "        {\"endpoint\": \"" + std::string(endpoint_name(rec.endpoint)) + "\", ";
      out += "\"l_raw\": " + num(rec.index.raw) + ", ";
      out += "\"l_folded\": " + num(rec.index.folded) + ", ";
      out += "\"s\": " + num(rec.s) + ", ";
      out += "\"psi\": " + point_json(rec.point) + "}";
    }
    out += first ? "]\n" : "\n      ]\n";
    out += "    }";
  }
  out += v.components.empty() ? "],\n" : "\n  ],\n";
  out += "  \"counts\": {\"irr_lines\": " + num(v.counts.irr_lines) +
         ", \"intersection_points\": " + num(v.counts.intersection_points) + "}\n";
  out += "}\n";
  return out;
}

VarietyDescription parse_variety_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    VarietyDescription v{validate_knot(doc.at("m").get<std::int64_t>(), doc.at("n").get<std::int64_t>()),
                         {}, {}, {}, {}};
    for (const json& comp : doc.at("components")) {
      const std::string type = comp.at("type").get<std::string>();
      if (type == "red") {
        v.components.push_back(ComponentId::red());
        continue;
      }
      if (type != "irr") throw Error(ErrorCode::InvalidInput, "unknown component type " + type);
      const ComponentId c = ComponentId::irr(comp.at("k").get<std::int64_t>(),
                                             comp.at("kp").get<std::int64_t>());
      validate_component(v.kt, c);
      v.components.push_back(c);
      v.lines.push_back({c, read_complex(comp.at("lambda")), read_complex(comp.at("mu")),
                         read_point(comp.at("psi_base")), read_point(comp.at("psi_dir"))});
      for (const json& rec : comp.at("intersections")) {
        const std::string endpoint = rec.at("endpoint").get<std::string>();
        if (endpoint != "r0" && endpoint != "r1") {
          throw Error(ErrorCode::InvalidInput, "unknown endpoint " + endpoint);
        }
        v.intersections.push_back(
            {c, endpoint == "r0" ? Endpoint::R0 : Endpoint::R1,
             {rec.at("l_raw").get<std::int64_t>(), rec.at("l_folded").get<std::int64_t>()},
             rec.at("s").get<double>(), read_point(rec.at("psi"))});
      }
    }
    const json& counts = doc.at("counts");
    v.counts = {counts.at("irr_lines").get<std::int64_t>(),
                counts.at("intersection_points").get<std::int64_t>()};
    return v;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, e.what());
  }
}

std::string emit_svg(const VarietyDescription& v, const FigureSpec& f) {
  if (!(f.s_max > f.s_min) || f.width <= 0 || f.height <= 0) {
    throw Error(ErrorCode::WindowTooSmall, "empty figure window");
  }
  for (const IntersectionRecord& rec : v.intersections) {
    if (rec.s < f.s_min || rec.s > f.s_max) {
      throw Error(ErrorCode::WindowTooSmall, "s = " + num(rec.s) + " lies outside [" +
                                                 num(f.s_min) + ", " + num(f.s_max) + "]");
    }
  }

  const double margin = 20.0;
  const double axis_y = f.height - 50.0;
  const double top = 40.0;
  auto x_of = [&](double s) {
    return margin + (s - f.s_min) / (f.s_max - f.s_min) * (f.width - 2.0 * margin);
  };

  // Endpoints per line, in line order.
  std::map<std::pair<std::int64_t, std::int64_t>, std::pair<double, double>> spans;
  for (const IntersectionRecord& rec : v.intersections) {
    auto& span = spans[{rec.component.k, rec.component.kp}];
    (rec.endpoint == Endpoint::R0 ? span.first : span.second) = rec.s;
  }
  double widest = 0.0;
  for (const auto& [key, span] : spans) {
    widest = std::max(widest, std::abs(x_of(span.first) - x_of(span.second)) / 2.0);
  }
  // Arcs are semicircles unless the tallest would leave the canvas.
  const double squash = widest > 0.0 ? std::min(1.0, (axis_y - top) / widest) : 1.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(f.width) + "\" height=\"" + std::to_string(f.height) + "\" viewBox=\"0 0 " +
         std::to_string(f.width) + " " + std::to_string(f.height) + "\">\n";
  out += "  <title>X(G(" + num(v.kt.m()) + "," + num(v.kt.n()) + "))</title>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "  <g id=\"red\">\n";
  out += "    <line x1=\"" + px(x_of(f.s_min)) + "\" y1=\"" + px(axis_y) + "\" x2=\"" +
         px(x_of(f.s_max)) + "\" y2=\"" + px(axis_y) +
         "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out += "    <text x=\"" + px(x_of(f.s_max)) + "\" y=\"" + px(axis_y - 8.0) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">X_red</text>\n";
  out += "  </g>\n";

  out += "  <g id=\"irr\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\">\n";
  for (const IrrLine& line : v.lines) {
    const auto [s0, s1] = spans[{line.component.k, line.component.kp}];
    const double xa = x_of(std::min(s0, s1));
    const double xb = x_of(std::max(s0, s1));
    const double rx = (xb - xa) / 2.0;
    const double ry = rx * squash;
    out += "    <path d=\"M " + px(xa) + " " + px(axis_y) + " A " + px(rx) + " " + px(ry) +
           " 0 0 1 " + px(xb) + " " + px(axis_y) + "\"/>\n";
    out += "    <text x=\"" + px((xa + xb) / 2.0) + "\" y=\"" + px(axis_y - ry - 4.0) +
           "\" stroke=\"none\" fill=\"steelblue\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"middle\">(" +
           num(line.component.k) + "," + num(line.component.kp) + ")</text>\n";
  }
  out += "  </g>\n";

  out += "  <g id=\"intersections\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (const IntersectionRecord& rec : v.intersections) {
    char label[32];
    std::snprintf(label, sizeof label, "%.3f", rec.s);
    const double x = x_of(rec.s);
    out += "    <circle cx=\"" + px(x) + "\" cy=\"" + px(axis_y) + "\" r=\"4\" fill=\"crimson\"/>\n";
    out += "    <text x=\"" + px(x) + "\" y=\"" + px(axis_y + 18.0) + "\">" + label + "</text>\n";
  }
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace knotchar
