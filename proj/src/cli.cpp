#include "knotchar/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotchar/emit.hpp"
#include "knotchar/error.hpp"
#include "knotchar/reps.hpp"
#include "knotchar/suite.hpp"
#include "knotchar/variety.hpp"

namespace knotchar {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

void print_point(std::ostream& out, const CharPoint& p) {
  out << "a = " << fmt(p.a) << "\n"
      << "b = " << fmt(p.b) << "\n"
      << "c = " << fmt(p.c) << "\n";
}

void print_matrix(std::ostream& out, const char* name, const Mat2& m) {
  out << name << " = [[" << fmt(m.a) << ", " << fmt(m.b) << "], [" << fmt(m.c) << ", "
      << fmt(m.d) << "]]\n";
}

void print_matches(std::ostream& out, const std::vector<PointMatch>& matches) {
  if (matches.empty()) {
    out << "no match: point is not on the curve\n";
    return;
  }
  for (const PointMatch& m : matches) {
    out << m.component.label() << (m.component.is_red() ? " s = " : " r = ") << fmt(m.parameter)
        << "\n";
  }
}

void print_components(std::ostream& out, const VarietyDescription& v) {
  out << "knot (" << v.kt.m() << "," << v.kt.n() << "): " << v.counts.irr_lines
      << " irreducible lines, " << v.counts.intersection_points << " intersection points\n";
  out << "Red\n";
  for (const IrrLine& line : v.lines) {
    out << line.component.label() << " lambda = " << fmt(line.lambda) << " mu = " << fmt(line.mu)
        << "\n";
    for (const IntersectionRecord& rec : v.intersections) {
      if (!(rec.component == line.component)) continue;
      out << "  " << (rec.endpoint == Endpoint::R0 ? "r0" : "r1") << ": l = " << rec.index.raw
          << " (folded " << rec.index.folded << ") s = " << fmt(rec.s) << " psi = (" << fmt(rec.point.a)
          << ", " << fmt(rec.point.b) << ", " << fmt(rec.point.c) << ")\n";
    }
  }
}

std::int64_t as_integer(double x, const char* what) {
  if (std::nearbyint(x) != x) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an integer");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character varieties of torus knot groups <x, y | x^m = y^n>", "knotchar"};
  app.fallthrough();
  app.require_subcommand(1);

  Tolerances tol;
  std::uint64_t seed = 0;
  app.add_option("--tol", tol.membership, "Membership tolerance (CharPoint metric)")
      ->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();

  std::int64_t m = 0;
  std::int64_t n = 0;
  auto add_knot = [&](CLI::App* sub) {
    sub->add_option("M", m, "First exponent")->required();
    sub->add_option("N", n, "Second exponent")->required();
  };

  auto* components = app.add_subcommand("components", "List components and intersection points");
  add_knot(components);
  bool as_json = false;
  components->add_flag("--json", as_json, "Emit JSON");

  auto* psi = app.add_subcommand("psi", "Evaluate the trace map on a family parameter");
  add_knot(psi);
  std::vector<double> red_args;
  std::vector<double> irr_args;
  auto* red_opt = psi->add_option("--red", red_args, "T_RE T_IM")->expected(2);
  auto* irr_opt = psi->add_option("--irr", irr_args, "K KP R_RE R_IM")->expected(4);
  red_opt->excludes(irr_opt);

  auto* classify = app.add_subcommand("classify", "Find the components through a point of C^3");
  add_knot(classify);
  std::vector<double> coords;
  classify->add_option("coords", coords, "A_RE A_IM B_RE B_IM C_RE C_IM")->expected(6)->required();

  auto* verify = app.add_subcommand("verify", "Run the randomized verification suite");
  add_knot(verify);
  std::int64_t samples = 100;
  verify->add_option("--samples", samples, "Samples per check")->capture_default_str();

  auto* figure = app.add_subcommand("figure", "Write an SVG diagram of the variety");
  add_knot(figure);
  std::string output;
  FigureSpec spec;
  figure->add_option("-o,--output", output, "Output SVG file")->required();
  figure->add_option("--width", spec.width)->capture_default_str();
  figure->add_option("--height", spec.height)->capture_default_str();
  figure->add_option("--smin", spec.s_min)->capture_default_str();
  figure->add_option("--smax", spec.s_max)->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Print a random conjugated representation");
  add_knot(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const KnotType kt = validate_knot(m, n);

    if (components->parsed()) {
      const VarietyDescription v = enumerate_variety(kt);
      if (as_json) {
        out << emit_json(v);
      } else {
        print_components(out, v);
      }
      return kExitOk;
    }

    if (psi->parsed()) {
      if (red_args.empty() == irr_args.empty()) {
        err << "psi: exactly one of --red or --irr is required\n";
        return kExitUsage;
      }
      if (!red_args.empty()) {
        print_point(out, psi_red(kt, {red_args[0], red_args[1]}));
      } else {
        const ComponentId c =
            ComponentId::irr(as_integer(irr_args[0], "K"), as_integer(irr_args[1], "KP"));
        print_point(out, psi_irr(kt, {c, {irr_args[2], irr_args[3]}}));
      }
      return kExitOk;
    }

    if (classify->parsed()) {
      const CharPoint q{{coords[0], coords[1]}, {coords[2], coords[3]}, {coords[4], coords[5]}};
      print_matches(out, classify_point(kt, q, tol));
      return kExitOk;
    }

    if (verify->parsed()) {
      const SuiteReport report = run_suite(kt, samples, seed, tol);
      out << format_report(report);
      return report.all_passed() ? kExitOk : kExitFailed;
    }

    if (figure->parsed()) {
      const std::string svg = emit_svg(enumerate_variety(kt), spec);
      std::ofstream file(output, std::ios::binary);
      if (!file || !(file << svg)) {
        err << "figure: cannot write " << output << "\n";
        return kExitUsage;
      }
      out << "wrote " << output << "\n";
      return kExitOk;
    }

    if (sample->parsed()) {
      auto rng = sample_rng(seed, 0);
      const std::vector<ComponentId> comps = enumerate_components(kt);
      std::uniform_int_distribution<std::size_t> pick(0, comps.size() - 1);
      const ComponentId c = comps[pick(rng)];
      RepPair base = c.is_red() ? build_reducible(kt, random_t(rng, kt))
                                : build_irreducible(kt, {c, random_r(rng)});
      const RepPair p = conjugate_pair(base, random_unimodular(rng));
      out << "component " << c.label() << "\n";
      print_matrix(out, "A", p.A);
      print_matrix(out, "B", p.B);
      out << "relation defect = " << fmt(relation_defect(p)) << "\n";
      const ReducibilityVerdict verdict = classify_reducibility(p, tol);
      if (verdict.reducible) {
        out << "reducible (" << to_string(verdict.reason) << ") s = " << fmt(semisimplify(p, tol))
            << "\n";
      } else {
        const IrredParam canon = double_ratio(p, tol);
        out << "irreducible " << canon.component.label() << " r = " << fmt(canon.r) << "\n";
      }
      const CharPoint q = psi_of_pair(p);
      print_point(out, q);
      print_matches(out, classify_point(kt, q, tol));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace knotchar
