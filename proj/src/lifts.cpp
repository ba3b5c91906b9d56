#include "theta/lifts.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "theta/errors.hpp"

namespace theta {

bool is_exceptional_steinberg(const Segment& seg, int l) {
  if (seg.empty()) return false;
  return seg.b == HalfInt::halves(l - 1);
}

namespace {

// ---- case (1) ladder search --------------------------------------------

struct LadderSearch {
  std::map<int, std::set<int>> starts;  // doubled end -> doubled starts
  std::map<std::pair<int, int>, int> memo;

  explicit LadderSearch(const std::vector<Segment>& segs) {
    for (const auto& s : segs)
      if (!s.empty()) starts[s.b.doubled()].insert(s.a.doubled());
  }

  // Longest ladder below and including a rung with start c at end d.
  int down_best(int d, int c) {
    auto key = std::make_pair(d, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int out = 1;
    if (auto lower = starts.find(d - 2); lower != starts.end())
      for (int c2 : lower->second)
        if (c2 < c) out = std::max(out, 1 + down_best(d - 2, c2));
    memo[key] = out;
    return out;
  }

  int longest_from_top(int d_top) {
    int best = 0;
    if (auto it = starts.find(d_top); it != starts.end())
      for (int c : it->second) best = std::max(best, down_best(d_top, c));
    return best;
  }

  // All ladders of exactly `len` rungs topped at d_top, each returned
  // top-down as doubled starts.
  void enumerate(int d_top, int len, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    walk(d_top, len, 1 << 30, cur, out);
  }

 private:
  void walk(int d, int remaining, int upper_c, std::vector<int>& cur,
            std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    auto it = starts.find(d);
    if (it == starts.end()) return;
    for (int c : it->second) {
      if (c >= upper_c) continue;
      if (down_best(d, c) < remaining) continue;
      cur.push_back(c);
      walk(d - 2, remaining - 1, c, cur, out);
      cur.pop_back();
    }
  }
};

std::vector<Segment> rungs_from_starts(const std::vector<int>& topdown,
                                       int d_top_doubled) {
  std::vector<Segment> rungs;  // bottom-up
  for (size_t i = 0; i < topdown.size(); ++i) {
    int d = d_top_doubled - 2 * static_cast<int>(i);
    rungs.push_back(Segment(HalfInt::halves(topdown[i]), HalfInt::halves(d)));
  }
  std::reverse(rungs.begin(), rungs.end());
  return rungs;
}

// Width-minimizing choice: compare start sequences from the top; larger
// starts (narrower rungs) win.
bool narrower(const std::vector<int>& x, const std::vector<int>& y) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] > y[i];
  }
  return false;
}

std::vector<Segment> remove_segments(std::vector<Segment> from,
                                     const std::vector<Segment>& victims) {
  for (const auto& v : victims)
    from.erase(std::find(from.begin(), from.end(), v));
  return from;
}

StandardModule flip_module(const StandardModule& m, int level,
                           std::vector<Segment> segs, TemperedToken tempered) {
  StandardModule out;
  out.pair = m.pair;
  out.side = flip(m.side);
  out.xi = m.xi;
  out.block = make_delta_block(m.block.alpha, sort_segments(std::move(segs)));
  out.tempered = simplify_tempered(tempered);
  out.epsilon = -m.epsilon;
  if (m.n) out.n = *m.n + m.epsilon - level;
  return out;
}

// Going-down tower, positive level: Theorem "appearance", case (1).
LiftResult lift_down_low(const StandardModule& m, int level) {
  const TemperedToken& tau = m.tempered;
  std::vector<Segment> segs = delta_segments(m.block);

  if (level == 0)
    return LiftResult::make(
        flip_module(m, level, segs, TemperedToken::lift(tau, 0)), level,
        Tower::Down);

  const int d_top = level - 1;  // doubled value of (level-1)/2
  LadderSearch search(segs);
  int t = search.longest_from_top(d_top);

  if (t == 0) {
    auto nz = theta_nonzero(tau, level);
    if (!nz)
      throw attributes_required_error(
          "cannot decide theta_l(tau) != 0 for the tempered part");
    if (!*nz) throw error("occurrence gate passed but theta_l(tau) = 0");
    return LiftResult::make(
        flip_module(m, level, segs, TemperedToken::lift(tau, level)), level,
        Tower::Down);
  }

  {
    auto nz = theta_nonzero(tau, level - 2 * t);
    if (!nz)
      throw attributes_required_error(
          "cannot decide theta_{l-2t}(tau) != 0 for the tempered part");
    if (!*nz)
      throw error("occurrence gate passed but no admissible ladder exists");
  }

  std::vector<std::vector<int>> cands;
  search.enumerate(d_top, t, cands);

  const int d1 = d_top - 2 * (t - 1);       // doubled bottom end
  const int st_start = 2 - d1;              // doubled 1 - d_1
  auto pick = [&](bool exclude_st) -> std::optional<std::vector<int>> {
    std::optional<std::vector<int>> best;
    for (const auto& c : cands) {
      if (exclude_st && c.back() == st_start) continue;
      if (!best || narrower(c, *best)) best = c;
    }
    return best;
  };

  auto best_all = pick(false);
  std::vector<int> chosen = *best_all;
  if (level - 2 * t > 0) {
    auto best_nonst = pick(true);
    if (best_nonst && *best_nonst != *best_all) {
      // The choice depends on the multiplicity parity at l - 2t.
      auto par = mult_parity(tau, level - 2 * t);
      if (!par)
        throw attributes_required_error(
            "ladder choice needs the parity of m_phi(chi_V S_" +
            std::to_string(level - 2 * t) + ")");
      if (*par == Parity::Even) chosen = *best_nonst;
    }
  }

  std::vector<Segment> rungs = rungs_from_starts(chosen, d_top);
  const Segment& bottom = rungs.front();
  bool st_branch = level - 2 * t > 0 &&
                   bottom == Segment(HalfInt::halves(2 - d1),
                                     HalfInt::halves(d1));

  std::vector<Segment> rest = remove_segments(segs, rungs);
  TemperedToken new_tau = tau;
  if (!st_branch) {
    for (const auto& r : rungs) {
      Segment s(r.a, r.b - 1);
      if (!s.empty()) rest.push_back(s);
    }
    new_tau = TemperedToken::lift(tau, level - 2 * t);
  } else {
    for (size_t i = 1; i < rungs.size(); ++i) {
      Segment s(rungs[i].a, rungs[i].b - 1);
      if (!s.empty()) rest.push_back(s);
    }
    int l0 = level - 2 * t;
    new_tau = TemperedToken::lift(
        TemperedToken::st_wrap(l0 + 1, tau), l0 + 2);
  }
  return LiftResult::make(flip_module(m, level, rest, new_tau), level,
                          Tower::Down);
}

// Going-down tower, negative level (case 2); also serves the l(tau) = -1
// corner of the going-up tower, which the theorem routes here.
LiftResult lift_down_high(const StandardModule& m, int level, Tower tower) {
  const int l = -level;
  const int kappa = m.kappa();
  std::vector<Segment> segs = delta_segments(m.block);
  for (int x = 3 - kappa; x <= l - 1; x += 2)
    segs.push_back(Segment(HalfInt::halves(x), HalfInt::halves(x)));
  return LiftResult::make(
      flip_module(m, level, segs,
                  TemperedToken::lift(m.tempered, kappa - 2)),
      level, tower);
}

// Going-up tower (case 3).
LiftResult lift_up(const StandardModule& m, int level) {
  const TemperedToken& tau = m.tempered;
  auto l0_opt = known_l_down(tau);
  if (!l0_opt)
    throw attributes_required_error(
        "the going-up construction needs an exact l(tau)");
  const int l0 = *l0_opt;
  if (l0 == -1) return lift_down_high(m, level, Tower::Up);

  const int l = -level;
  const int t = (l - l0) / 2 - 1;
  std::vector<Segment> segs = delta_segments(m.block);

  std::optional<Parity> par;
  if (l0 > 0) {
    par = mult_parity(tau, l0);
    if (!par)
      throw attributes_required_error(
          "the going-up construction needs the parity of m_phi(chi_V S_" +
          std::to_string(l0) + ")");
  }
  const bool even = par && *par == Parity::Even;

  // Width-maximizing ladder with d_1' = (l0+1)/2, padded with empty
  // segments above the longest available one. With even multiplicity the
  // bottom rung may not be the Steinberg segment [(1-l0)/2, (l0+1)/2]: the
  // back lift puts the inserted St factor underneath it, so the stretched
  // rung must start strictly above (1-l0)/2.
  std::vector<Segment> rungs;
  for (int i = 0; i < t; ++i) {
    HalfInt d = HalfInt::halves(l0 + 1 + 2 * i);
    std::optional<Segment> best;
    if (rungs.empty() || !rungs.back().empty()) {
      for (const auto& s : segs) {
        if (s.empty() || s.b != d) continue;
        if (!rungs.empty() && !(s.a > rungs.back().a)) continue;
        if (rungs.empty() && even && s.a == HalfInt::halves(1 - l0)) continue;
        if (!best || s.a < best->a) best = s;
      }
    }
    rungs.push_back(best ? *best : Segment::empty_at(d + 1));
  }

  std::vector<Segment> real_rungs;
  for (const auto& r : rungs)
    if (!r.empty()) real_rungs.push_back(r);
  std::vector<Segment> rest = remove_segments(segs, real_rungs);
  for (const auto& r : rungs) rest.push_back(Segment(r.a, r.b + 1));

  TemperedToken lifted = TemperedToken::lift(tau, -2 - l0);
  TemperedToken new_tau = lifted;
  if (even) {
    rest.push_back(Segment(HalfInt::halves(1 - l0), HalfInt::halves(l0 + 1)));
    new_tau = TemperedToken::sigma_of(lifted);
  }
  return LiftResult::make(flip_module(m, level, rest, new_tau), level,
                          Tower::Up);
}

}  // namespace

LiftResult lift(const StandardModule& m, int level, Tower tower) {
  validate_module(m);
  if ((level - m.kappa()) % 2 != 0)
    throw level_parity_error("level " + std::to_string(level) +
                             " has the wrong parity for kappa = " +
                             std::to_string(m.kappa()));

  auto [lo, hi] = occurrence_level_bounds(m);
  int fo_lo = lo, fo_hi = hi;
  if (tower == Tower::Up) {
    fo_lo = -hi - 2;
    fo_hi = -lo - 2;
  }
  if (level > fo_hi) return LiftResult::make_zero(level, tower);
  if (level > fo_lo)
    throw attributes_required_error(
        "cannot decide whether the level exceeds the first occurrence; the "
        "tempered attributes only give bounds");

  if (tower == Tower::Down)
    return level >= 0 ? lift_down_low(m, level)
                      : lift_down_high(m, level, Tower::Down);
  return lift_up(m, level);
}

bool round_trip(const StandardModule& m, int level, Tower tower) {
  if (level >= 0) return true;
  LiftResult there = lift(m, level, tower);
  if (there.zero)
    throw invalid_parameter_error("round_trip level is past first occurrence");
  LiftResult back = lift(*there.module, -level, Tower::Down);
  if (back.zero) return false;
  StandardModule expected = m;
  expected.tempered = simplify_tempered(expected.tempered);
  return modules_equal(*back.module, expected);
}

StandardModule normalize_lift(const StandardModule& m) {
  const TemperedToken& t = m.tempered;
  if (t.kind() != TemperedToken::Kind::Lift) return m;
  auto l_in = known_l_down(t.inner());
  if (!l_in) return m;
  int j = t.level();
  if (j < 0 || j >= *l_in || (j - *l_in) % 2 != 0) return m;
  // theta_j(tau) for 0 <= j < l(tau) sits below the first occurrence; its
  // standard module is the character chain over the first-occurrence lift.
  StandardModule out = m;
  std::vector<Segment> segs = delta_segments(m.block);
  for (int x = j + 1; x <= *l_in - 1; x += 2)
    segs.push_back(Segment(HalfInt::halves(x), HalfInt::halves(x)));
  out.block = make_delta_block(m.block.alpha, sort_segments(segs));
  out.tempered = TemperedToken::lift(t.inner(), *l_in);
  return out;
}

}  // namespace theta
