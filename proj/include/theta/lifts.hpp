#pragma once

#include <optional>
#include <vector>

#include "theta/occurrence.hpp"
#include "theta/standard_module.hpp"

namespace theta {

// Result of a theta lift: Zero past the first occurrence, otherwise the
// standard module of the lift (side flipped, block kept sorted).
struct LiftResult {
  bool zero = true;
  std::optional<StandardModule> module;
  int level = 0;
  Tower tower = Tower::Down;

  static LiftResult make_zero(int level, Tower tower) {
    return {true, std::nullopt, level, tower};
  }
  static LiftResult make(StandardModule m, int level, Tower tower) {
    return {false, std::move(m), level, tower};
  }
};

// Standard module of theta_level(m) on the chosen tower.
//  * level >= 0, going down: consume the longest ladder ending at (level-1)/2
//    whose depth keeps the tempered lift nonzero; widths minimized; the
//    exceptional-Steinberg bottom diverts into the St-wrapped branch.
//  * level < 0, going down: insert the character chain
//    |.|^{(3-kappa)/2} ... |.|^{(level's l-1)/2}.
//  * level < 0, going up: stretch the width-maximizing ladder above
//    (l(tau)+1)/2, padding with empty segments; the even-multiplicity branch
//    inserts St_{l(tau)+1} nu^{1/2} and wraps the tempered part in sigma.
// Throws level_parity_error on a level outside the pair's parity class and
// attributes_required_error when a needed tempered attribute is missing.
LiftResult lift(const StandardModule& m, int level, Tower tower);

// delta = St_k nu^{(l-k)/2}, i.e. the segment ends in (l-1)/2.
bool is_exceptional_steinberg(const Segment& seg, int l);

// Lift at a negative level, lift back at the opposite level on the
// going-down tower, simplify, compare with the input. Nonnegative levels
// return true vacuously.
bool round_trip(const StandardModule& m, int level, Tower tower);

// Optional display normalization: a tempered slot theta_j(tau) with
// 0 <= j < l(tau) is not tempered; expand it into the character chain
// |.|^{(j+1)/2} ... |.|^{(l(tau)-1)/2} over theta_{l(tau)}(tau).
StandardModule normalize_lift(const StandardModule& m);

}  // namespace theta
