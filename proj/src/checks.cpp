#include "theta/checks.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "theta/dsl.hpp"
#include "theta/errors.hpp"
#include "theta/lifts.hpp"
#include "theta/occurrence.hpp"
#include "theta/rearrange.hpp"
#include "theta/render.hpp"
#include "theta/ring.hpp"

namespace theta {

std::vector<std::string> check_suite_names() {
  return {"reversibility", "equivalence", "occurrence-oracle",
          "conservation", "roundtrip",    "ring"};
}

int occurrence_oracle_f(const std::vector<Segment>& sorted_block, int l,
                        bool mult_even) {
  if (l == -1) return 0;
  const size_t r = sorted_block.size();
  const HalfInt bottom = HalfInt::halves(l + 1);
  const HalfInt banned = HalfInt::halves(1 - l);
  int best = 0;
  // right-to-left reading of the sorted block
  std::vector<Segment> seq(sorted_block.rbegin(), sorted_block.rend());
  for (size_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<Segment> sub;
    for (size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) sub.push_back(seq[i]);
    bool ok = !sub.front().empty() && sub.front().b == bottom;
    if (ok && l > 0 && mult_even && sub.front().a == banned) ok = false;
    for (size_t i = 0; ok && i + 1 < sub.size(); ++i) {
      if (sub[i + 1].b != sub[i].b + 1) ok = false;
      if (!(sub[i].a < sub[i + 1].a)) ok = false;
    }
    if (ok) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

std::vector<Segment> ladder_oracle(const std::vector<Segment>& sorted_block,
                                   HalfInt k) {
  const size_t r = sorted_block.size();
  // shortest segment ending in k
  std::optional<Segment> top;
  for (const auto& s : sorted_block)
    if (!s.empty() && s.b == k && (!top || s.a > top->a)) top = s;
  if (!top) return {};

  auto rung_excluded = [](const Segment& s) {
    return (s.a + s.b).doubled() == 2 &&
           !(s.a == HalfInt::halves(1) && s.b == HalfInt::halves(1));
  };

  std::vector<Segment> best;
  auto better = [&](const std::vector<Segment>& cand) {
    if (cand.size() != best.size()) return cand.size() > best.size();
    // minimize widths, top rung first
    for (size_t i = 0; i < cand.size(); ++i) {
      size_t j = cand.size() - 1 - i;
      if (cand[j].a != best[j].a) return cand[j].a > best[j].a;
    }
    return false;
  };
  std::vector<Segment> seq(sorted_block.rbegin(), sorted_block.rend());
  for (size_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<Segment> sub;  // bottom-up
    for (size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) sub.push_back(seq[i]);
    if (sub.back() != *top) continue;
    bool ok = true;
    for (size_t i = 0; ok && i + 1 < sub.size(); ++i) {
      if (sub[i + 1].b != sub[i].b + 1 || !(sub[i].a < sub[i + 1].a))
        ok = false;
    }
    for (size_t i = 0; ok && i + 1 < sub.size(); ++i)
      if (rung_excluded(sub[i])) ok = false;  // every rung below the top
    if (ok && (best.empty() || better(sub))) best = sub;
  }
  return best;
}

namespace {

StandardModule module_for(const AlphaBlock& block, int l,
                          std::map<int, int> mult,
                          std::optional<int> n = std::nullopt) {
  StandardModule m;
  m.pair = block.alpha == HalfInt(0) ? DualPair::SpOeven : DualPair::MpOodd;
  m.side = Side::W;
  m.block = block;
  m.tempered = TemperedToken::atom("tau", l, std::move(mult), Side::W);
  m.n = n;
  m.epsilon = 1;
  return m;
}

std::vector<int> l_sweep(HalfInt alpha) {
  if (alpha == HalfInt(0)) return {-1, 1, 3, 5};
  return {0, 2, 4};
}

struct Sink {
  long long instances = 0;
  std::vector<std::string> bad;

  void count() { ++instances; }
  void fail(const StandardModule& m, const std::string& note) {
    bad.push_back(render_module_dsl(m) + "  # " + note);
  }
  void fail_text(const std::string& text) { bad.push_back(text); }
};

std::string block_source(const AlphaBlock& block) {
  int l = block.alpha == HalfInt(0) ? -1 : 0;
  return render_module_dsl(module_for(block, l, {}));
}

// Distinct ends of the non-empty segments; each admits >= 1 iteration.
std::vector<HalfInt> admissible_ks(const AlphaBlock& block) {
  std::set<int> ends;
  for (const auto& f : block.factors)
    if (!f.seg.empty()) ends.insert(f.seg.b.doubled());
  std::vector<HalfInt> out;
  for (int d : ends) out.push_back(HalfInt::halves(d));
  return out;
}

void check_reversibility(const AlphaBlock& block, Sink& sink) {
  if (!block_positive(block)) return;
  for (HalfInt k : admissible_ks(block)) {
    sink.count();
    Rearranged r = run_algorithm(block, k);
    if (r.iterations < 1) {
      sink.fail_text(block_source(block) + "  # k=" + k.str() +
                     " ran zero iterations unexpectedly");
      continue;
    }
    auto inv = invert(r);
    if (!inv)
      sink.fail_text(block_source(block) + "  # k=" + k.str() +
                     " invert reports NotAnOutput");
    else if (!(*inv == block))
      sink.fail_text(block_source(block) + "  # k=" + k.str() +
                     " invert(run_algorithm) differs from the input");
  }
}

void check_equivalence(const AlphaBlock& block, Sink& sink) {
  if (!block_positive(block)) return;
  for (HalfInt k : admissible_ks(block)) {
    sink.count();
    Rearranged a = run_algorithm(block, k);
    Rearranged b = ladder_transform(block, k);
    if (!(a == b)) {
      sink.fail_text(block_source(block) + "  # k=" + k.str() +
                     " run_algorithm != ladder_transform");
      continue;
    }
    int len = len_k(block, k);
    if (len != a.iterations ||
        len != longest_ladder(block, k).length())
      sink.fail_text(block_source(block) + "  # k=" + k.str() +
                     " len_k disagrees with iterations/ladder length");
  }
}

void check_occurrence_oracle(const AlphaBlock& block, Sink& sink) {
  if (!block_positive(block)) return;
  std::vector<Segment> segs = delta_segments(block);
  for (int l : l_sweep(block.alpha)) {
    std::vector<std::map<int, int>> mults;
    if (l > 0)
      mults = {{{l, 1}}, {{l, 2}}};
    else
      mults = {{}};
    for (auto& mult : mults) {
      sink.count();
      bool even = l > 0 && mult.at(l) % 2 == 0;
      StandardModule m = module_for(block, l, mult);
      OccurrenceReport rep = first_occurrence(m);
      int oracle = occurrence_oracle_f(segs, l, even);
      if (rep.f != oracle)
        sink.fail(m, "f=" + std::to_string(rep.f) + " oracle=" +
                         std::to_string(oracle));
    }
  }
}

void check_conservation(const AlphaBlock& block, Sink& sink) {
  if (!block_positive(block)) return;
  for (int l : l_sweep(block.alpha)) {
    std::map<int, int> mult;
    if (l > 0) mult[l] = 1;
    sink.count();
    StandardModule m = module_for(block, l, mult, 9);
    OccurrenceReport rep = first_occurrence(m);
    if (rep.l_up + rep.l_down != -2)
      sink.fail(m, "l_up + l_down != -2");
    else if (!rep.m_down || !rep.m_up ||
             *rep.m_down + *rep.m_up != 2 * 9 + 2 * m.epsilon + 2)
      sink.fail(m, "dimension conservation fails");
  }
}

void check_roundtrip(const AlphaBlock& block, Sink& sink) {
  if (!block_positive(block)) return;
  const int kappa = block.alpha == HalfInt(0) ? 1 : 2;
  for (int l : l_sweep(block.alpha)) {
    std::vector<std::map<int, int>> mults;
    if (l > 0)
      mults = {{{l, 1}}, {{l, 2}}};
    else
      mults = {{}};
    for (auto& mult : mults) {
      StandardModule m = module_for(block, l, mult);
      OccurrenceReport rep = first_occurrence(m);
      int floor_level = rep.l_up - 4;
      for (Tower tower : {Tower::Down, Tower::Up}) {
        int start = tower == Tower::Down ? (kappa == 1 ? -1 : -2) : rep.l_up;
        for (int level = start; level >= floor_level; level -= 2) {
          if (level >= 0) continue;
          sink.count();
          try {
            if (!round_trip(m, level, tower))
              sink.fail(m, std::string("round trip fails at tower=") +
                               (tower == Tower::Down ? "down" : "up") +
                               " level=" + std::to_string(level));
          } catch (const error& e) {
            sink.fail(m, std::string("round trip error at tower=") +
                             (tower == Tower::Down ? "down" : "up") +
                             " level=" + std::to_string(level) + ": " +
                             e.what());
          }
        }
      }
    }
  }
}

// ---- ring suite ----------------------------------------------------------

using ThreeLeg = std::map<std::tuple<std::string, std::string, std::string>,
                          Coeff>;

ThreeLeg expand_left(const RingElement& e) {
  ThreeLeg out;
  for (const auto& [t, c] : e.terms()) {
    RingElement inner = m_star_word(t.left);
    for (const auto& [t2, c2] : inner.terms()) {
      auto key = std::make_tuple(render_word(t2.left),
                                 render_word(t2.right.word),
                                 render_word(t.right.word));
      out[key] += c * c2;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

ThreeLeg expand_right(const RingElement& e) {
  ThreeLeg out;
  for (const auto& [t, c] : e.terms()) {
    RingElement inner = m_star_word(t.right.word);
    for (const auto& [t2, c2] : inner.terms()) {
      auto key = std::make_tuple(render_word(t.left), render_word(t2.left),
                                 render_word(t2.right.word));
      out[key] += c * c2;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

void check_ring_coassoc(Sink& sink) {
  for (Form form : {Form::Delta, Form::Zeta}) {
    for (int a2 = -6; a2 <= 6; ++a2) {
      for (int w = 1; w <= 4; ++w) {
        sink.count();
        Segment seg(HalfInt::halves(a2), HalfInt::halves(a2) + (w - 1));
        RingElement e = m_star(seg, form);
        if (expand_left(e) != expand_right(e))
          sink.fail_text("ring  # coassociativity fails on " +
                         render_segment_dsl(seg, form));
      }
    }
  }
}

void check_ring_grading(Sink& sink) {
  std::vector<Segment> pool{Segment(0, 0), Segment(0, 1), Segment(-1, 1),
                            Segment(1, 2), Segment(2, 2)};
  for (const auto& s1 : pool)
    for (const auto& s2 : pool)
      for (const auto& s3 : pool) {
        sink.count();
        RingElement p =
            mult(m_star(s1, Form::Delta),
                 mult(m_star(s2, Form::Zeta), m_star(s3, Form::Delta)));
        int want = s1.length() + s2.length() + s3.length();
        for (const auto& [t, c] : p.terms()) {
          if (t.left.degree() + t.right.word.degree() != want) {
            sink.fail_text("ring  # grading fails on a product of " +
                           render_segment_dsl(s1) + " " +
                           render_segment_dsl(s2, Form::Zeta) + " " +
                           render_segment_dsl(s3));
            break;
          }
        }
        // term count of m*: width + 2
        if (m_star(s1, Form::Delta).term_count() !=
            static_cast<size_t>(s1.length() + 1))
          sink.fail_text("ring  # m* term count fails on " +
                         render_segment_dsl(s1));
        // M* lattice size: (w+1)(w+2)/2 counted with multiplicity
        int w = s1.length();
        if (M_star(s1, Form::Delta).coeff_total() !=
            Coeff((w + 1) * (w + 2) / 2))
          sink.fail_text("ring  # M* lattice count fails on " +
                         render_segment_dsl(s1));
      }
}

void check_ring_case1(const AlphaBlock& block, Sink& sink) {
  if (!block_positive(block)) return;
  for (HalfInt k : admissible_ks(block)) {
    Rearranged r = run_algorithm(block, k);
    std::vector<GLFactor> seq = r.factors();
    for (int guard = 0; guard < 64; ++guard) {
      ReduceStep step = reduce_step(seq, block.alpha);
      if (step.kind == ReduceCase::Base) break;
      if (step.kind == ReduceCase::NotAnOutput) {
        sink.fail_text(block_source(block) + "  # k=" + k.str() +
                       " reduce_step reports NotAnOutput");
        break;
      }
      if (step.kind == ReduceCase::Case1) {
        sink.count();
        GLWord target;
        for (const auto& d : step.delta)
          target.append(Form::Delta, d.contragredient());
        std::vector<std::pair<Form, Segment>> factors;
        for (const auto& f : seq)
          factors.emplace_back(
              f.kind == GLFactor::Kind::Zeta ? Form::Zeta : Form::Delta,
              f.seg);
        if (count_leading(factors, target) != 1)
          sink.fail_text(block_source(block) + "  # k=" + k.str() +
                         " count_leading != 1 in a Case-1 step");
      }
      seq = step.residual;
    }
  }
}

// ---- runner ---------------------------------------------------------------

template <typename PerBlock>
CheckReport run_over_blocks(const std::string& suite,
                            const CorpusBounds& bounds, int jobs,
                            PerBlock per_block) {
  std::vector<AlphaBlock> blocks;
  for (HalfInt alpha : {HalfInt(0), HalfInt::halves(1)}) {
    CorpusBounds b = bounds;
    b.alpha = alpha;
    for (const auto& blk : enumerate_corpus(b)) blocks.push_back(blk);
  }

  unsigned n_jobs = jobs > 0 ? static_cast<unsigned>(jobs)
                             : std::max(1u, std::thread::hardware_concurrency());
  n_jobs = std::min<unsigned>(n_jobs, 64);

  std::vector<Sink> sinks(n_jobs);
  std::atomic<size_t> next{0};
  auto worker = [&](unsigned id) {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= blocks.size()) return;
      per_block(blocks[i], sinks[id]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_jobs; ++i) pool.emplace_back(worker, i);
  worker(0);
  for (auto& t : pool) t.join();

  CheckReport rep;
  rep.suite = suite;
  for (auto& s : sinks) {
    rep.instances += s.instances;
    for (auto& b : s.bad) rep.counterexamples.push_back(std::move(b));
  }
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
  return rep;
}

}  // namespace

CheckReport run_check(const std::string& suite, const CorpusBounds& bounds,
                      int jobs) {
  if (suite == "reversibility")
    return run_over_blocks(suite, bounds, jobs, check_reversibility);
  if (suite == "equivalence")
    return run_over_blocks(suite, bounds, jobs, check_equivalence);
  if (suite == "occurrence-oracle")
    return run_over_blocks(suite, bounds, jobs, check_occurrence_oracle);
  if (suite == "conservation")
    return run_over_blocks(suite, bounds, jobs, check_conservation);
  if (suite == "roundtrip")
    return run_over_blocks(suite, bounds, jobs, check_roundtrip);
  if (suite == "ring") {
    CorpusBounds small = bounds;
    small.max_segments = std::min(bounds.max_segments, 3);
    small.max_end = std::min(bounds.max_end, HalfInt(2));
    CheckReport rep = run_over_blocks(suite, small, jobs, check_ring_case1);
    Sink extra;
    check_ring_coassoc(extra);
    check_ring_grading(extra);
    rep.instances += extra.instances;
    for (auto& b : extra.bad) rep.counterexamples.push_back(std::move(b));
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
    return rep;
  }
  throw invalid_parameter_error("unknown suite '" + suite +
                                "'; expected one of reversibility, "
                                "equivalence, occurrence-oracle, "
                                "conservation, roundtrip, ring");
}

}  // namespace theta
