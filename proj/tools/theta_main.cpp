#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "theta/checks.hpp"
#include "theta/corpus.hpp"
#include "theta/dsl.hpp"
#include "theta/errors.hpp"
#include "theta/lifts.hpp"
#include "theta/occurrence.hpp"
#include "theta/rearrange.hpp"
#include "theta/render.hpp"
#include "theta/ring.hpp"

namespace {

using namespace theta;

std::string slurp_input(const std::string& path) {
  std::ostringstream os;
  if (path.empty() || path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw error("cannot open input file '" + path + "'");
    os << in.rdbuf();
  }
  return os.str();
}

HalfInt parse_half_arg(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) return HalfInt(std::stoi(text));
  if (text.substr(slash + 1) != "2")
    throw invalid_parameter_error("half-integers are written as k/2");
  return HalfInt::halves(std::stoi(text.substr(0, slash)));
}

Segment parse_segment_arg(const std::string& text, Form* form) {
  std::string t = text;
  if (t.size() < 4 || (t[0] != 'D' && t[0] != 'Z') || t[1] != '[' ||
      t.back() != ']')
    throw invalid_parameter_error("segment syntax is D[a,b] or Z[a,b]");
  *form = t[0] == 'D' ? Form::Delta : Form::Zeta;
  std::string body = t.substr(2, t.size() - 3);
  size_t comma = body.find(',');
  if (comma == std::string::npos)
    throw invalid_parameter_error("segment syntax is D[a,b] or Z[a,b]");
  return Segment(parse_half_arg(body.substr(0, comma)),
                 parse_half_arg(body.substr(comma + 1)));
}

// A module whose block carries the deltas and at most one zeta of an
// algorithm output.
Rearranged rearranged_from_module(const StandardModule& m) {
  Rearranged r;
  r.alpha = m.block.alpha;
  std::optional<Segment> zeta;
  for (const auto& f : m.block.factors) {
    if (f.kind == GLFactor::Kind::Zeta) {
      if (zeta) throw invalid_parameter_error("more than one zeta factor");
      zeta = f.seg;
    } else {
      (zeta ? r.suffix : r.prefix).push_back(f.seg);
    }
  }
  if (!zeta) {
    HalfInt k = r.prefix.empty() ? m.block.alpha : r.prefix.front().b;
    r.zeta = Segment::empty_at(k + 1);
    r.k = k;
    r.iterations = 0;
  } else {
    r.zeta = *zeta;
    r.k = zeta->b;
    r.iterations = (r.k - (zeta->a - 1)).whole();
  }
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"theta-segment-calculus: standard-module rearrangement, "
               "first occurrence and theta lifts"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string input_path;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--input", input_path, "module source file (default stdin)");

  auto* cmd_parse = app.add_subcommand("parse", "validate and echo a module");
  auto* cmd_sort = app.add_subcommand("sort", "sort the alpha-block");

  auto* cmd_alg = app.add_subcommand("alg", "run the rearrangement algorithm");
  std::string k_text;
  bool want_trace = false;
  cmd_alg->add_option("--k", k_text, "initial exponent k")->required();
  cmd_alg->add_flag("--trace", want_trace, "print the per-line trace");

  auto* cmd_invert =
      app.add_subcommand("invert", "invert an algorithm output");
  auto* cmd_occ = app.add_subcommand("occurrence", "first-occurrence report");

  auto* cmd_lift = app.add_subcommand("lift", "theta lift at one level");
  int level = 0;
  std::string tower_text = "down";
  bool normalize = false;
  cmd_lift->add_option("--level", level, "target level l = n + eps - m")
      ->required();
  cmd_lift->add_option("--tower", tower_text, "down|up")->required();
  cmd_lift->add_flag("--normalize", normalize,
                     "expand below-first-occurrence tempered slots");

  auto* cmd_lifts = app.add_subcommand("lifts", "lifts on both towers");
  bool lifts_all = false;
  int depth = 3;
  cmd_lifts->add_flag("--all", lifts_all, "list lifts on both towers");
  cmd_lifts->add_option("--depth", depth, "levels per tower (default 3)");

  auto* cmd_ring = app.add_subcommand("ring", "m*/M* of one segment");
  std::string ring_op, ring_seg;
  cmd_ring->add_option("op", ring_op, "mstar|Mstar")->required();
  cmd_ring->add_option("segment", ring_seg, "D[a,b] or Z[a,b]")->required();

  auto* cmd_enum = app.add_subcommand("enumerate", "corpus blocks");
  int max_segments = 4;
  std::string max_end_text = "3", alpha_text = "0";
  cmd_enum->add_option("--max-segments", max_segments);
  cmd_enum->add_option("--max-end", max_end_text,
                       "endpoint bound (integer or k/2)");
  cmd_enum->add_option("--alpha", alpha_text, "0 or 1/2");

  auto* cmd_check = app.add_subcommand("check", "run a property suite");
  std::string suite;
  int jobs = 0;
  int chk_max_segments = 4;
  std::string chk_max_end = "3";
  cmd_check->add_option("suite", suite, "suite name")->required();
  cmd_check->add_option("--jobs", jobs, "worker threads (default: all)");
  cmd_check->add_option("--max-segments", chk_max_segments);
  cmd_check->add_option("--max-end", chk_max_end);

  CLI11_PARSE(app, argc, argv);

  auto read_module = [&] { return parse_module(slurp_input(input_path)); };

  if (*cmd_parse) {
    StandardModule m = read_module();
    std::cout << (as_json ? render_module_json(m) : render_module_dsl(m))
              << "\n";
    return 0;
  }

  if (*cmd_sort) {
    StandardModule m = read_module();
    m.block = sort_block(m.block);
    std::cout << (as_json ? render_module_json(m) : render_module_dsl(m))
              << "\n";
    return 0;
  }

  if (*cmd_alg) {
    StandardModule m = read_module();
    HalfInt k = parse_half_arg(k_text);
    AlgTrace trace;
    Rearranged r = run_algorithm(m.block, k, want_trace, &trace);
    if (want_trace) {
      std::cout << render_trace(trace, m.tempered);
    } else if (as_json) {
      std::cout << render_rearranged_json(r) << "\n";
    } else {
      std::cout << render_rearranged_pretty(r, m.tempered) << "\n";
    }
    return 0;
  }

  if (*cmd_invert) {
    StandardModule m = read_module();
    Rearranged r = rearranged_from_module(m);
    auto block = invert(r);
    if (!block) {
      std::cout << "NotAnOutput\n";
      return 0;
    }
    StandardModule out = m;
    out.block = *block;
    std::cout << (as_json ? render_module_json(out) : render_module_dsl(out))
              << "\n";
    return 0;
  }

  if (*cmd_occ) {
    StandardModule m = read_module();
    OccurrenceReport rep = first_occurrence(m);
    std::cout << (as_json ? render_occurrence_json(rep) + "\n"
                          : render_occurrence_pretty(rep));
    return 0;
  }

  if (*cmd_lift) {
    StandardModule m = read_module();
    Tower tower = tower_text == "up" ? Tower::Up : Tower::Down;
    LiftResult r = lift(m, level, tower);
    if (!r.zero && normalize) r.module = normalize_lift(*r.module);
    std::cout << (as_json ? render_lift_json(r) + "\n"
                          : render_lift_pretty(r) + "\n");
    return 0;
  }

  if (*cmd_lifts) {
    (void)lifts_all;
    StandardModule m = read_module();
    OccurrenceReport rep = first_occurrence(m);
    for (Tower tower : {Tower::Down, Tower::Up}) {
      int fo = tower == Tower::Down ? rep.l_down : rep.l_up;
      for (int i = 0; i < depth; ++i) {
        int lvl = fo - 2 * i;
        LiftResult r = lift(m, lvl, tower);
        std::cout << "tower=" << (tower == Tower::Down ? "down" : "up")
                  << " level=" << lvl << ": "
                  << (as_json ? render_lift_json(r) : render_lift_pretty(r))
                  << "\n";
      }
    }
    return 0;
  }

  if (*cmd_ring) {
    Form form = Form::Delta;
    Segment seg = parse_segment_arg(ring_seg, &form);
    RingElement e;
    if (ring_op == "mstar")
      e = m_star(seg, form);
    else if (ring_op == "Mstar")
      e = M_star(seg, form);
    else
      throw invalid_parameter_error("ring op must be mstar or Mstar");
    std::cout << render_ring_element(e);
    return 0;
  }

  if (*cmd_enum) {
    CorpusBounds bounds;
    bounds.max_segments = max_segments;
    bounds.max_end = parse_half_arg(max_end_text);
    bounds.alpha = parse_half_arg(alpha_text);
    for_each_block(bounds, [&](const AlphaBlock& b) {
      std::string line;
      for (size_t i = 0; i < b.factors.size(); ++i) {
        if (i) line += " x ";
        line += render_segment_dsl(b.factors[i].seg);
      }
      std::cout << (line.empty() ? "1" : line) << "\n";
    });
    return 0;
  }

  if (*cmd_check) {
    CorpusBounds bounds;
    bounds.max_segments = chk_max_segments;
    bounds.max_end = parse_half_arg(chk_max_end);
    CheckReport rep = run_check(suite, bounds, jobs);
    std::cout << rep.suite << ": " << rep.instances << " instances, "
              << rep.counterexamples.size() << " counterexamples\n";
    for (const auto& c : rep.counterexamples) std::cout << c << "\n";
    return rep.ok() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const theta::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
