// Copyright 2026 The quadpara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// quadpara: largest contained quadrilateral and smallest enclosing
// parallelogram of a convex polygon.
//
// Exit codes: 0 success, 1 verification or linearity failure, 2 invalid
// input or arguments, 3 internal sweep overrun.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadpara/extremal.hpp"
#include "quadpara/io.hpp"
#include "quadpara/oracle.hpp"
#include "quadpara/polygen.hpp"

namespace {

using nlohmann::json;
using namespace quadpara;

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOverrun = 3;

struct Options {
  std::vector<std::string> inputs;
  std::vector<double> dir;
  std::uint64_t seed = 1;
  int n = 8;
  std::string kind;  // default: random-hull, or lattice for bench
  std::int64_t coord_range = 1000;
  double tol = kDefaultTolerance;
  bool assert_linear = false;
  double budget = 64.0;
  std::string out;
  std::string expect;
  std::vector<int> sizes{1000, 10000, 100000, 1000000};
  bool timing = false;
};

bool relative_equal(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Canonical representative of an undirected direction: upper half-plane.
Direction canonical(Vec v) {
  if (v.y < 0.0 || (v.y == 0.0 && v.x < 0.0)) v = -v;
  return Direction(v);
}

void emit(const json& doc) {
  const std::string text = io::dump(doc);
  std::fwrite(text.data(), 1, text.size(), stdout);
}

int run_extremes(const Options& opt, bool quad, bool para) {
  const std::string& path = opt.inputs.front();
  const ConvexPolygon poly = io::load_polygon(path);
  const auto start = std::chrono::steady_clock::now();
  const ExtremesReport report = combined_extremes(poly);
  const auto stop = std::chrono::steady_clock::now();

  json doc = {{"input", path}, {"n", poly.size()}, {"predicate_count", report.predicate_count}};
  if (quad) {
    doc["max_quad"] = io::to_json(report.max_quad);
    doc["quad_certificate"] = io::to_json(report.quad_certificate);
  }
  if (para) {
    doc["min_para"] = io::to_json(report.min_para);
    doc["para_certificate"] = io::to_json(report.para_certificate);
  }
  if (opt.timing) {
    doc["wall_time_s"] = std::chrono::duration<double>(stop - start).count();
  }
  emit(doc);
  return 0;
}

int cmd_anchored(const Options& opt) {
  const ConvexPolygon poly = io::load_polygon(opt.inputs.front());
  const Direction u = canonical({opt.dir.at(0), opt.dir.at(1)});
  const AnchoredPair pair = anchored_conjugate_pair(poly, u);
  const ConjugateCertificate cert = verify_conjugate_pair(pair.quad, pair.para, u, poly, opt.tol);
  json doc = {{"input", opt.inputs.front()},
              {"anchor", io::to_json(u.vec())},
              {"quad", io::to_json(pair.quad)},
              {"para", io::to_json(pair.para)},
              {"area_ratio", pair.para.area / pair.quad.area},
              {"certificate", io::to_json(cert)["checks"]},
              {"valid", cert.valid()}};
  emit(doc);
  return 0;
}

struct CheckRow {
  std::string name;
  std::string status;  // PASS, FAIL or SKIP
  std::string detail;
};

std::vector<CheckRow> verify_one(const std::string& path, const Options& opt, const json* expect) {
  std::vector<CheckRow> rows;
  const ConvexPolygon poly = io::load_polygon(path);
  const std::size_t n = poly.size();
  const ExtremesReport report = combined_extremes(poly);
  auto row = [&](std::string name, bool ok, std::string detail) {
    rows.push_back({std::move(name), ok ? "PASS" : "FAIL", std::move(detail)});
  };
  auto pair_detail = [](double a, double b) {
    return io::format_double(a) + " vs " + io::format_double(b);
  };
  constexpr double kAgree = 1e-12;

  const ConjugateCertificate qc = verify_conjugate_pair(
      report.quad_certificate.quad, report.quad_certificate.para, report.quad_certificate.anchor,
      poly, opt.tol);
  const ConjugateCertificate pc = verify_conjugate_pair(
      report.para_certificate.quad, report.para_certificate.para, report.para_certificate.anchor,
      poly, opt.tol);
  row("quad_certificate", qc.valid(), "tol " + io::format_double(opt.tol));
  row("para_certificate", pc.valid(), "tol " + io::format_double(opt.tol));

  const QuadResult sweep_quad = largest_quadrilateral(poly);
  row("quad_vertex_sweep", relative_equal(sweep_quad.area, report.max_quad.area, kAgree),
      pair_detail(sweep_quad.area, report.max_quad.area));
  const ParaResult sweep_para = smallest_parallelogram(poly);
  row("para_edge_sweep", relative_equal(sweep_para.area, report.min_para.area, kAgree),
      pair_detail(sweep_para.area, report.min_para.area));

  if (n <= oracle::kQuadOracleMaxN) {
    const double a = oracle::brute_largest_quad(poly).area;
    row("quad_oracle", relative_equal(a, report.max_quad.area, kAgree),
        pair_detail(a, report.max_quad.area));
  } else {
    rows.push_back({"quad_oracle", "SKIP",
                    "n=" + std::to_string(n) + " > " + std::to_string(oracle::kQuadOracleMaxN)});
  }
  if (n <= oracle::kParaOracleMaxN) {
    const double a = oracle::brute_smallest_para(poly).area;
    row("para_oracle", relative_equal(a, report.min_para.area, kAgree),
        pair_detail(a, report.min_para.area));
  } else {
    rows.push_back({"para_oracle", "SKIP",
                    "n=" + std::to_string(n) + " > " + std::to_string(oracle::kParaOracleMaxN)});
  }
  row("duality", report.min_para.area / 2 <= report.max_quad.area,
      pair_detail(report.min_para.area / 2, report.max_quad.area));
  row("predicate_budget", static_cast<double>(report.predicate_count) <= opt.budget * n,
      std::to_string(report.predicate_count) + " <= " + io::format_double(opt.budget) + "n");

  if (expect != nullptr) {
    auto compare = [&](const char* section) {
      const std::string name = std::string("expect_") + section;
      if (!expect->contains(section)) return;
      const json& e = (*expect)[section];
      if (!e.contains("area") || !e["area"].is_number()) {
        row(name, false, "missing area");
        return;
      }
      const double want = e["area"].get<double>();
      const double got = std::string(section) == "max_quad" ? report.max_quad.area
                                                            : report.min_para.area;
      row(name, relative_equal(want, got, kAgree), pair_detail(want, got));
    };
    compare("max_quad");
    compare("min_para");
    if (!expect->contains("max_quad") && !expect->contains("min_para")) {
      row("expect", false, "report has neither max_quad nor min_para");
    }
  }
  return rows;
}

int cmd_verify(const Options& opt) {
  json expect;
  if (!opt.expect.empty()) {
    std::ifstream in(opt.expect);
    if (!in) throw io::ParseError(0, "cannot open " + opt.expect);
    try {
      expect = json::parse(in);
    } catch (const json::parse_error& e) {
      throw io::ParseError(0, opt.expect + ": invalid JSON: " + e.what());
    }
  }
  std::ostringstream table;
  bool all_ok = true;
  for (const std::string& path : opt.inputs) {
    const auto rows = verify_one(path, opt, opt.expect.empty() ? nullptr : &expect);
    table << path << "\n";
    for (const CheckRow& r : rows) {
      char line[256];
      std::snprintf(line, sizeof line, "  %-18s %-4s  %s\n", r.name.c_str(), r.status.c_str(),
                    r.detail.c_str());
      table << line;
      if (r.status == "FAIL") all_ok = false;
    }
  }
  table << (all_ok ? "verify: ok\n" : "verify: MISMATCH\n");
  std::cout << table.str();
  return all_ok ? 0 : kExitMismatch;
}

GenSpec gen_spec(const Options& opt, int n) {
  GenSpec spec;
  spec.kind = parse_gen_kind(opt.kind);
  spec.n = n;
  spec.seed = opt.seed;
  spec.coord_range = opt.coord_range;
  return spec;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  out.close();
  return static_cast<bool>(out);
}

int cmd_gen(const Options& opt) {
  const GenSpec spec = gen_spec(opt, opt.n);
  const ConvexPolygon poly = generate(spec);
  const std::string text = io::format_polygon_text(
      poly, {"kind=" + opt.kind + " n=" + std::to_string(opt.n) + " seed=" +
             std::to_string(opt.seed) + " coord_range=" + std::to_string(opt.coord_range)});
  if (opt.out.empty()) {
    std::cout << text;
  } else if (!write_file(opt.out, text)) {
    std::cerr << "error: cannot write " << opt.out << "\n";
    return kExitInvalid;
  }
  return 0;
}

int cmd_bench(const Options& opt) {
  bool ok = true;
  std::printf("%10s %10s %14s %10s %12s\n", "n", "vertices", "predicates", "per_n", "wall_ms");
  for (int n : opt.sizes) {
    if (n < 3) throw GeometryError(ErrorCode::kTooFewVertices, "bench sizes must be >= 3");
    const ConvexPolygon poly = generate(gen_spec(opt, n));
    const auto start = std::chrono::steady_clock::now();
    const ExtremesReport report = combined_extremes(poly);
    const auto stop = std::chrono::steady_clock::now();
    const double per_n = static_cast<double>(report.predicate_count) / poly.size();
    std::printf("%10d %10zu %14llu %10.3f %12.3f\n", n, poly.size(),
                static_cast<unsigned long long>(report.predicate_count), per_n,
                std::chrono::duration<double, std::milli>(stop - start).count());
    if (per_n > opt.budget) ok = false;
  }
  if (opt.assert_linear) {
    std::printf("linearity (<= %gn): %s\n", opt.budget, ok ? "ok" : "FAILED");
    return ok ? 0 : kExitMismatch;
  }
  return 0;
}

int cmd_svg(const Options& opt) {
  const ConvexPolygon poly = io::load_polygon(opt.inputs.front());
  const std::string svg = io::render_svg(poly, combined_extremes(poly));
  if (opt.out.empty()) {
    std::cout << svg;
  } else if (!write_file(opt.out, svg)) {
    std::cerr << "error: cannot write " << opt.out << "\n";
    return kExitInvalid;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largest contained quadrilateral and smallest enclosing parallelogram"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* cmd, bool many = false) {
    auto* o = cmd->add_option("--input,-i", opt.inputs, "polygon file (.json or text)")->required();
    if (!many) o->expected(1);
  };
  auto add_gen = [&](CLI::App* cmd) {
    cmd->add_option("--kind", opt.kind, "regular, random-hull, parallel-edges or lattice");
    cmd->add_option("--seed", opt.seed, "generator seed");
    cmd->add_option("--coord-range", opt.coord_range, "coordinate bound for random-hull");
  };

  CLI::App* quad = app.add_subcommand("quad", "largest contained quadrilateral");
  CLI::App* para = app.add_subcommand("para", "smallest enclosing parallelogram");
  CLI::App* both = app.add_subcommand("both", "both optima with certificates");
  for (CLI::App* cmd : {quad, para, both}) {
    add_input(cmd);
    cmd->add_flag("--timing", opt.timing, "include wall time in the report");
  }

  CLI::App* anchored = app.add_subcommand("anchored", "conjugate pair anchored to a direction");
  add_input(anchored);
  anchored->add_option("--dir", opt.dir, "direction X Y")->expected(2)->required();
  anchored->add_option("--tol", opt.tol, "relative certificate tolerance");

  CLI::App* verify = app.add_subcommand("verify", "recompute, certify and compare with oracles");
  add_input(verify, true);
  verify->add_option("--tol", opt.tol, "relative certificate tolerance");
  verify->add_option("--budget", opt.budget, "predicate budget per vertex");
  verify->add_option("--expect", opt.expect, "report whose areas must match");

  CLI::App* gen = app.add_subcommand("gen", "generate a polygon");
  add_gen(gen);
  gen->add_option("--n", opt.n, "vertex count");
  gen->add_option("--out,-o", opt.out, "output path (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "predicate counts and timings");
  add_gen(bench);
  bench->add_option("--sizes", opt.sizes, "vertex counts")->delimiter(',');
  bench->add_flag("--assert-linear", opt.assert_linear, "fail if predicates exceed budget*n");
  bench->add_option("--budget", opt.budget, "predicate budget per vertex");

  CLI::App* svg = app.add_subcommand("svg", "SVG figure of P, F and G");
  add_input(svg);
  svg->add_option("--out,-o", opt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }
  if (opt.kind.empty()) opt.kind = bench->parsed() ? "lattice" : "random-hull";

  try {
    if (quad->parsed()) return run_extremes(opt, true, false);
    if (para->parsed()) return run_extremes(opt, false, true);
    if (both->parsed()) return run_extremes(opt, true, true);
    if (anchored->parsed()) return cmd_anchored(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (gen->parsed()) return cmd_gen(opt);
    if (bench->parsed()) return cmd_bench(opt);
    if (svg->parsed()) return cmd_svg(opt);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kSweepOverrun ? kExitOverrun : kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
