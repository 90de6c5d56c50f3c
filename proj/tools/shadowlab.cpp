#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/generators.hpp"
#include "shadowlab/image_complex.hpp"
#include "shadowlab/json_io.hpp"
#include "shadowlab/relations.hpp"
#include "shadowlab/svg.hpp"

namespace {

using namespace shadowlab;
using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& output_path, const std::string& text) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
  out << text;
}

int thread_budget(long trials) {
  long n = static_cast<long>(std::thread::hardware_concurrency());
  if (n <= 0) n = 4;
  if (const char* env = std::getenv("SHADOWLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) n = v;
  }
  if (n > trials) n = trials;
  if (n > 256) n = 256;
  return static_cast<int>(n < 1 ? 1 : n);
}

int cmd_analyze(const std::string& input, const std::string& output, bool as_json) {
  PLClosedCurve curve = curve_from_json(slurp(input));
  if (!validate_simple(curve))
    throw std::invalid_argument("analyze: input curve is not simple");
  auto classes = shadow_classes(curve);  // throws TheoremViolationError on >= 3 paths

  int path_count = 0;
  std::ostringstream text;
  json j;
  j["dimension"] = curve.dimension();
  j["vertices"] = curve.size();
  j["axes"] = json::array();
  text << "curve: " << curve.size() << " vertices in R^" << curve.dimension() << "\n";
  for (std::size_t axis = 1; axis <= curve.dimension(); ++axis) {
    const auto& cls = classes[axis - 1];
    json ja;
    ja["axis"] = axis;
    ja["class"] = to_string(cls.tag);
    text << "axis " << axis << ": " << to_string(cls.tag);
    if (cls.tag == TopologyTag::SimplePath) {
      ++path_count;
      ShadowSplit split = split_top_bottom(curve, static_cast<int>(axis));
      text << "  split a=" << split.a.str() << " a~=" << split.a_tilde.str();
      ja["split_a"] = split.a.str();
      ja["split_a_tilde"] = split.a_tilde.str();
    }
    text << "\n";
    j["axes"].push_back(std::move(ja));
  }
  text << "simple-path shadows: " << path_count << " (bound: 2)\n";
  j["simple_path_count"] = path_count;
  j["bound"] = 2;
  emit(output, as_json ? j.dump(2) + "\n" : text.str());
  return 0;
}

int cmd_verify_theorem(long trials, long seed, long dimension, long resolution,
                       const std::string& output, bool as_json) {
  struct TrialResult {
    int count = -1;       // simple-path shadows; -1 when not run
    bool exhausted = false;
    bool violation = false;
  };
  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  std::atomic<long> next{0};
  auto worker = [&]() {
    while (true) {
      long i = next.fetch_add(1);
      if (i >= trials) return;
      TrialResult& r = results[static_cast<std::size_t>(i)];
      try {
        PLClosedCurve curve = gen_random_knot(static_cast<int>(dimension),
                                              static_cast<int>(resolution),
                                              static_cast<unsigned long>(seed + i));
        auto classes = shadow_classes(curve);
        int count = 0;
        for (const auto& cls : classes)
          if (cls.tag == TopologyTag::SimplePath) ++count;
        r.count = count;
      } catch (const GeneratorExhaustedError&) {
        r.exhausted = true;
      } catch (const TheoremViolationError&) {
        r.violation = true;
      }
    }
  };
  int nthreads = thread_budget(trials);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::vector<long> histogram(3, 0);
  long exhausted = 0;
  bool violation = false;
  std::ostringstream text;
  text << "verify-theorem: trials=" << trials << " dimension=" << dimension
       << " resolution=" << resolution << " seed=" << seed << "\n";
  for (long i = 0; i < trials; ++i) {
    const TrialResult& r = results[static_cast<std::size_t>(i)];
    if (r.exhausted) {
      ++exhausted;
      text << "trial " << i << ": generator exhausted (seed " << (seed + i) << ")\n";
    } else if (r.violation || r.count > 2) {
      violation = true;
      text << "trial " << i << ": THEOREM VIOLATION (3 or more simple-path shadows, seed "
           << (seed + i) << ")\n";
    } else {
      ++histogram[static_cast<std::size_t>(r.count)];
    }
  }
  text << "simple-path count histogram:\n";
  for (int c = 0; c <= 2; ++c) text << "  " << c << ": " << histogram[static_cast<std::size_t>(c)] << "\n";
  text << "exhausted: " << exhausted << "\n";
  text << "result: " << (violation ? "VIOLATION" : "OK (all trials within the bound of 2)") << "\n";

  json j;
  j["trials"] = trials;
  j["dimension"] = dimension;
  j["resolution"] = resolution;
  j["seed"] = seed;
  j["histogram"] = {{"0", histogram[0]}, {"1", histogram[1]}, {"2", histogram[2]}};
  j["exhausted"] = exhausted;
  j["ok"] = !violation;
  emit(output, as_json ? j.dump(2) + "\n" : text.str());
  if (violation) throw TheoremViolationError("verify-theorem observed 3+ simple-path shadows");
  return 0;
}

int cmd_compose_demo(const std::string& output, bool as_json) {
  std::ostringstream text;
  json j;
  j["cases"] = json::array();
  text << "compose-demo: products of winding curves through the middle coordinate\n";

  auto run_case = [&](long a, long b1, long b2, long c) {
    TorusCurve psi1(PLCircleMap::winding(a), PLCircleMap::winding(b1));
    TorusCurve psi2(PLCircleMap::winding(b2), PLCircleMap::winding(c));
    text << "case: degrees (" << a << "," << b1 << ") * (" << b2 << "," << c << ")\n";
    json jc;
    jc["degrees"] = {a, b1, b2, c};
    try {
      ComposedCurve composed = compose_relation_curves(psi1, psi2);
      auto deg = torus_degree(composed.curve);
      bool ok = deg.first == composed.k * a / b1 && deg.second == composed.k * c / b2 &&
                composed.k % 2 != 0;
      text << "  constructed k = " << composed.k << "\n";
      text << "  output degree = (" << deg.first << ", " << deg.second << ")\n";
      text << "  expected (k*" << a << "/" << b1 << ", k*" << c << "/" << b2 << ") = ("
           << (composed.k * a / b1) << ", " << (composed.k * c / b2) << ")  "
           << (ok ? "OK" : "MISMATCH") << "\n";
      jc["k"] = composed.k;
      jc["degree"] = {deg.first, deg.second};
      jc["ok"] = ok;
      if (!ok) throw std::logic_error("compose-demo: degree formula violated");
    } catch (const std::invalid_argument& e) {
      text << "  rejected: " << e.what() << "\n";
      jc["rejected"] = e.what();
    }
    j["cases"].push_back(std::move(jc));
  };

  run_case(1, 3, 5, 2);  // k = 15, output (5, 6)
  run_case(5, 2, 1, 3);  // swapped order: middle degree 2 is even, rejected
  run_case(2, 5, 3, 1);  // roles exchanged: k = 15, output (6, 5)

  emit(output, as_json ? j.dump(2) + "\n" : text.str());
  return 0;
}

int cmd_fixedpoint_demo(const std::string& epsilon_str, const std::string& output, bool as_json) {
  Rational epsilon = Rational::parse(epsilon_str);
  if (epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");

  // Three synthetic near-diagonal relation curves of degree (1,-1).
  TorusCurve psi1(
      PLCircleMap({Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)},
                  {Rational(0), Rational(3, 8), Rational(1, 2), Rational(5, 8)}, 1),
      PLCircleMap({Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)},
                  {Rational(0), Rational(-1, 8), Rational(-1, 2), Rational(-7, 8)}, -1));
  TorusCurve psi2(
      PLCircleMap({Rational(0), Rational(1, 3), Rational(2, 3)},
                  {Rational(0), Rational(1, 2), Rational(3, 4)}, 1),
      PLCircleMap({Rational(0), Rational(1, 3), Rational(2, 3)},
                  {Rational(0), Rational(-3, 8), Rational(-1, 2)}, -1));
  TorusCurve psi3(PLCircleMap({Rational(0), Rational(1, 2)}, {Rational(0), Rational(5, 8)}, 1),
                  PLCircleMap({Rational(0), Rational(1, 2)}, {Rational(0), Rational(-1, 4)}, -1));

  FixedPointCertificate cert = find_triple_fixed_point(psi1, psi2, psi3, epsilon);

  std::ostringstream text;
  text << "fixedpoint-demo: synthetic relation triple, each of degree (1,-1)\n";
  text << "composite winding k = " << cert.k << " (degree (" << cert.k << "," << -cert.k
       << "))\n";
  text << "diagonal parameter t* = " << cert.t_diagonal.str() << "\n";
  text << "traced parameters: " << cert.t_psi1.str() << ", " << cert.t_psi2.str() << ", "
       << cert.t_psi3.str() << "\n";
  text << "chain positions: q0=" << cert.q0.str() << " q1=" << cert.q1.str()
       << " q2=" << cert.q2.str() << "\n";
  text << "residuals: r0=" << cert.r0.str() << " (exact), |r1|=" << cert.r1.abs().str()
       << " <= nu1=" << cert.nu1.str() << ", |r2|=" << cert.r2.abs().str()
       << " <= nu2=" << cert.nu2.str() << "\n";
  emit(output, as_json ? certificate_to_json(cert) : text.str());
  return 0;
}

int cmd_gen(const std::string& kind, long dimension, long resolution, long seed,
            const std::string& output) {
  PLClosedCurve curve = [&] {
    if (kind == "planar-circle")
      return gen_planar_circle(static_cast<int>(dimension), static_cast<int>(resolution));
    if (kind == "tree-shadow") return gen_tree_shadow_curve();
    if (kind == "random-knot")
      return gen_random_knot(static_cast<int>(dimension), static_cast<int>(resolution),
                             static_cast<unsigned long>(seed));
    throw std::invalid_argument("unknown generator kind: " + kind +
                                " (expected planar-circle, tree-shadow, or random-knot)");
  }();
  emit(output, curve_to_json(curve));
  return 0;
}

int cmd_plot(const std::string& input, long axis, const std::string& output) {
  PLClosedCurve curve = curve_from_json(slurp(input));
  if (curve.dimension() != 3)
    throw std::invalid_argument("plot: only 3-dimensional curves have planar shadows, got d=" +
                                std::to_string(curve.dimension()));
  if (axis < 1 || axis > static_cast<long>(curve.dimension()))
    throw std::invalid_argument("plot: axis " + std::to_string(axis) + " out of range 1.." +
                                std::to_string(curve.dimension()));
  auto complex = build_image_complex(project(curve, static_cast<int>(axis)));
  emit(output, shadow_svg(complex));
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"coordinate shadows of piecewise-linear closed curves"};
  app.require_subcommand(1);

  std::string input, output, epsilon = "1/1000";
  long trials = 1000, seed = 1, dimension = 3, resolution = 12, axis = 1;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "classify every coordinate shadow of a curve");
  analyze->add_option("--input", input, "curve JSON file")->required();
  analyze->add_option("--output", output, "write the report here instead of stdout");
  analyze->add_flag("--json", as_json, "machine-readable report");

  auto* verify = app.add_subcommand(
      "verify-theorem", "random curves, checking every one has at most 2 path shadows");
  verify->add_option("--trials", trials, "number of random curves")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "base seed; trial i uses seed+i");
  verify->add_option("--dimension", dimension, "ambient dimension")->check(CLI::Range(3L, 16L));
  verify->add_option("--resolution", resolution, "vertices per curve")
      ->check(CLI::Range(4L, 4096L));
  verify->add_option("--output", output, "write the report here instead of stdout");
  verify->add_flag("--json", as_json, "machine-readable report");

  auto* compose_demo =
      app.add_subcommand("compose-demo", "worked composite-degree example (k=15)");
  compose_demo->add_option("--output", output, "write the report here instead of stdout");
  compose_demo->add_flag("--json", as_json, "machine-readable report");

  auto* fp_demo = app.add_subcommand(
      "fixedpoint-demo", "trace a near-fixed point through a synthetic relation triple");
  fp_demo->add_option("--epsilon", epsilon, "membership tolerance p/q (certificate field)");
  fp_demo->add_option("--output", output, "write the report here instead of stdout");
  fp_demo->add_flag("--json", as_json, "machine-readable report");

  auto* gen = app.add_subcommand("gen", "emit a generated curve as JSON");
  std::string kind;
  gen->add_option("kind", kind, "planar-circle | tree-shadow | random-knot")->required();
  gen->add_option("--dimension", dimension, "ambient dimension")->check(CLI::Range(2L, 16L));
  gen->add_option("--resolution", resolution, "vertex count")->check(CLI::Range(3L, 4096L));
  gen->add_option("--seed", seed, "random-knot seed");
  gen->add_option("--output", output, "write the curve here instead of stdout");

  auto* plot = app.add_subcommand("plot", "render one shadow of a 3-d curve as SVG");
  plot->add_option("--input", input, "curve JSON file")->required();
  plot->add_option("--axis", axis, "axis to project out, 1-based")->required();
  plot->add_option("--output", output, "SVG output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (analyze->parsed()) return cmd_analyze(input, output, as_json);
  if (verify->parsed())
    return cmd_verify_theorem(trials, seed, dimension, resolution, output, as_json);
  if (compose_demo->parsed()) return cmd_compose_demo(output, as_json);
  if (fp_demo->parsed()) return cmd_fixedpoint_demo(epsilon, output, as_json);
  if (gen->parsed()) return cmd_gen(kind, dimension, resolution, seed, output);
  if (plot->parsed()) return cmd_plot(input, axis, output);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const shadowlab::TheoremViolationError& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
