#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/block.hpp"
#include "theta/tempered.hpp"

namespace theta {

// Which dual pair the module lives in. kappa = 1 for Sp/O(even), where all
// levels are odd and alpha = 0; kappa = 2 for Mp/O(odd), with even levels
// and alpha = 1/2.
enum class DualPair { SpOeven, MpOodd };

constexpr int kappa_of(DualPair p) { return p == DualPair::SpOeven ? 1 : 2; }

// Full Langlands datum: chi Xi x chi A |x tau with the Xi factors opaque,
// A the alpha-block and tau a tempered token. side selects the chi_V/chi_W
// twist; n is an optional rank datum and epsilon the sign entering
// l = n + epsilon - m.
struct StandardModule {
  DualPair pair = DualPair::SpOeven;
  Side side = Side::W;
  std::vector<std::string> xi;
  AlphaBlock block{HalfInt(0), {}};
  TemperedToken tempered =
      TemperedToken::atom("tau", -1, {}, Side::W);
  std::optional<int> n;
  int epsilon = 1;

  int kappa() const { return kappa_of(pair); }
};

constexpr int default_epsilon(Side side) { return side == Side::W ? 1 : -1; }

// Checks every invariant: alpha/kappa parity, block validity, positivity of
// the block exponents, tempered side and level parity where derivable.
void validate_module(const StandardModule& m);

bool modules_equal(const StandardModule& x, const StandardModule& y);

}  // namespace theta
