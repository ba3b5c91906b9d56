#include "theta/occurrence.hpp"

#include <algorithm>
#include <map>

#include "theta/errors.hpp"

namespace theta {

// Chains are built upward over (end, start) states: from a rung with start c
// at end d, the next rung is any segment [c', d+1] with c' > c.
int longest_chain(const std::vector<Segment>& segs, HalfInt bottom_end,
                  std::optional<HalfInt> banned_bottom_start,
                  std::vector<Segment>* witness) {
  std::map<int, std::vector<HalfInt>> starts;  // doubled end -> starts
  for (const auto& s : segs) {
    if (s.empty()) continue;
    starts[s.b.doubled()].push_back(s.a);
  }
  std::map<std::pair<int, int>, int> memo;  // (doubled end, doubled start)
  auto best = [&](auto&& self, HalfInt d, HalfInt c) -> int {
    auto key = std::make_pair(d.doubled(), c.doubled());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int out = 1;
    if (auto up = starts.find((d + 1).doubled()); up != starts.end())
      for (HalfInt c2 : up->second)
        if (c2 > c) out = std::max(out, 1 + self(self, d + 1, c2));
    memo[key] = out;
    return out;
  };

  int f = 0;
  HalfInt best_bottom = bottom_end;  // start of the winning bottom rung
  if (auto it = starts.find(bottom_end.doubled()); it != starts.end()) {
    for (HalfInt c : it->second) {
      if (banned_bottom_start && c == *banned_bottom_start) continue;
      int len = best(best, bottom_end, c);
      if (len > f) {
        f = len;
        best_bottom = c;
      }
    }
  }

  if (witness) {
    witness->clear();
    if (f > 0) {
      HalfInt d = bottom_end, c = best_bottom;
      int remaining = f;
      witness->push_back(Segment(c, d));
      while (--remaining > 0) {
        for (HalfInt c2 : starts[(d + 1).doubled()]) {
          if (c2 > c && best(best, d + 1, c2) == remaining) {
            witness->push_back(Segment(c2, d + 1));
            d = d + 1;
            c = c2;
            break;
          }
        }
      }
    }
  }
  return f;
}

namespace {

struct Scenario {
  int l;                            // l(tau) in this scenario
  std::optional<Parity> parity;     // m_phi(chi S_l) parity, if derivable
};

std::vector<Scenario> tempered_scenarios(const TemperedToken& t) {
  auto bounds = l_down_bounds(t);
  if (!bounds)
    throw attributes_required_error(
        "l(tau) is not derivable for this tempered token");
  std::vector<Scenario> out{{bounds->first, mult_parity(t, bounds->first)}};
  if (bounds->second != bounds->first)
    out.push_back({bounds->second, mult_parity(t, bounds->second)});
  return out;
}

// f interval for one scenario. The parity is consulted only when the
// filtered and unfiltered chain lengths differ.
std::pair<int, int> f_bounds(const std::vector<Segment>& segs,
                             const Scenario& sc) {
  if (sc.l == -1) return {0, 0};
  HalfInt bottom_end = HalfInt::halves(sc.l + 1);
  int f_plain = longest_chain(segs, bottom_end, std::nullopt);
  if (sc.l <= 0) return {f_plain, f_plain};
  HalfInt banned = HalfInt::halves(1 - sc.l);
  int f_filtered = longest_chain(segs, bottom_end, banned);
  if (f_filtered == f_plain) return {f_plain, f_plain};
  if (!sc.parity)
    return {f_filtered, f_plain};
  return sc.parity == Parity::Even ? std::make_pair(f_filtered, f_filtered)
                                   : std::make_pair(f_plain, f_plain);
}

}  // namespace

std::pair<int, int> occurrence_level_bounds(const StandardModule& m) {
  validate_module(m);
  std::vector<Segment> segs = delta_segments(m.block);
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& sc : tempered_scenarios(m.tempered)) {
    auto [flo, fhi] = f_bounds(segs, sc);
    int llo = sc.l + 2 * flo, lhi = sc.l + 2 * fhi;
    if (first) {
      lo = llo;
      hi = lhi;
      first = false;
    } else {
      lo = std::min(lo, llo);
      hi = std::max(hi, lhi);
    }
  }
  return {lo, hi};
}

OccurrenceReport first_occurrence(const StandardModule& m) {
  validate_module(m);
  auto scenarios = tempered_scenarios(m.tempered);
  if (scenarios.size() != 1)
    throw attributes_required_error(
        "first occurrence needs an exact l(tau); this tempered token only "
        "carries bounds");
  const Scenario& sc = scenarios.front();
  std::vector<Segment> segs = delta_segments(m.block);

  OccurrenceReport rep;
  if (sc.l == -1) {
    rep.f = 0;
    rep.l_down = -1;
    rep.l_up = -1;
  } else {
    auto [flo, fhi] = f_bounds(segs, sc);
    if (flo != fhi)
      throw attributes_required_error(
          "condition (iv) needs the parity of m_phi(chi_V S_" +
          std::to_string(sc.l) + "), which the mult map does not provide");
    HalfInt bottom_end = HalfInt::halves(sc.l + 1);
    std::optional<HalfInt> banned;
    if (sc.l > 0 && sc.parity && *sc.parity == Parity::Even)
      banned = HalfInt::halves(1 - sc.l);
    rep.f = longest_chain(segs, bottom_end, banned, &rep.witness);
    rep.l_down = sc.l + 2 * rep.f;
    rep.l_up = -rep.l_down - 2;
  }

  if (m.n) {
    rep.m_down = *m.n + m.epsilon - rep.l_down;
    rep.m_up = *m.n + m.epsilon - rep.l_up;
  }
  return rep;
}

LevelSet nonzero_levels(const StandardModule& m, Tower tower) {
  OccurrenceReport rep = first_occurrence(m);
  LevelSet out;
  out.tower = tower;
  out.kappa = m.kappa();
  out.max_level = tower == Tower::Down ? rep.l_down : rep.l_up;
  return out;
}

}  // namespace theta
