#pragma once

#include <optional>
#include <vector>

#include "theta/segment.hpp"

namespace theta {

enum class Form { Delta, Zeta };

// One GL-factor of a standard module or of an intermediate algorithm state.
// Delta and Zeta factors carry a single segment. LQ is the transient factor
// L(zeta(e+1,k) x delta(b,e)) of algorithm lines 5-8; it requires the two
// segments to be adjacent end-to-start.
struct GLFactor {
  enum class Kind { Delta, Zeta, LQ };

  Kind kind;
  Segment seg;                       // Delta/Zeta segment; LQ: the zeta part
  std::optional<Segment> lq_delta;   // LQ: the delta part

  static GLFactor delta(Segment s) { return {Kind::Delta, s, std::nullopt}; }
  static GLFactor zeta(Segment s) { return {Kind::Zeta, s, std::nullopt}; }
  static GLFactor lq(Segment zeta_seg, Segment delta_seg);

  friend bool operator==(const GLFactor&, const GLFactor&) = default;
};

// The alpha-block: GL-factors with trivial cuspidal support and exponents in
// alpha + Z, alpha in {0, 1/2}.
struct AlphaBlock {
  HalfInt alpha;
  std::vector<GLFactor> factors;

  friend bool operator==(const AlphaBlock&, const AlphaBlock&) = default;
};

AlphaBlock make_delta_block(HalfInt alpha, const std::vector<Segment>& segs);

// Checks exponent-class membership and the alpha in {0, 1/2} restriction.
void validate_block(const AlphaBlock& block);

// All factors as plain segments; throws unsupported_form_error unless every
// factor is a Delta.
std::vector<Segment> delta_segments(const AlphaBlock& block);

// Non-increasing left to right under compare_lex.
bool is_sorted_run(const std::vector<Segment>& segs);
bool is_sorted_block(const AlphaBlock& block);

// Stable sort per eq_order, largest segment leftmost. Delta factors only.
AlphaBlock sort_block(const AlphaBlock& block);
std::vector<Segment> sort_segments(std::vector<Segment> segs);

// Every non-empty segment satisfies a + b > 0, the positivity every
// alpha-block of a genuine standard module has.
bool block_positive(const AlphaBlock& block);

}  // namespace theta
