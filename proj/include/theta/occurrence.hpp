#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "theta/standard_module.hpp"

namespace theta {

enum class Tower { Down, Up };

// First-occurrence data of a module on the paired Witt towers. l_up is tied
// to l_down by the conservation relation l_up = -l_down - 2; the dimension
// forms m_down/m_up are filled in when the module carries its rank datum n.
struct OccurrenceReport {
  int f = 0;
  int l_down = 0;
  int l_up = 0;
  std::optional<int> m_down;
  std::optional<int> m_up;
  std::vector<Segment> witness;  // one maximal subsequence, bottom-up
};

// Computes f as the longest subsequence of the sorted block (read right to
// left) with consecutive ends, strictly increasing starts, bottom end
// (l+1)/2, and - when l > 0 and m_phi(chi_V S_l) is even - bottom start
// different from (1-l)/2. Then l(pi) = l + 2f. Throws
// attributes_required_error when the tempered attributes the theorem needs
// are not available.
OccurrenceReport first_occurrence(const StandardModule& m);

// Nonzero levels on a tower: every level of the right parity at or below the
// first occurrence (tower property).
struct LevelSet {
  Tower tower = Tower::Down;
  int max_level = 0;
  int kappa = 1;
  bool contains(int level) const {
    return level <= max_level && (level - kappa) % 2 == 0;
  }
};

LevelSet nonzero_levels(const StandardModule& m, Tower tower);

// Interval [lo, hi] for l(pi) used by the lift gate when the tempered part
// carries only bounded attributes; collapses to a point when the data is
// exact.
std::pair<int, int> occurrence_level_bounds(const StandardModule& m);

// Longest admissible chain over plain segments, exposed for lifts and the
// tests' exhaustive oracle.
int longest_chain(const std::vector<Segment>& segs, HalfInt bottom_end,
                  std::optional<HalfInt> banned_bottom_start,
                  std::vector<Segment>* witness = nullptr);

}  // namespace theta
