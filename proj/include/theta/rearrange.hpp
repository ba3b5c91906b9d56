#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "theta/block.hpp"

namespace theta {

// Output shape of the rearrangement algorithm:
//   delta(a_r,b_r) x ... x delta(a_j,b_j) x zeta(b_j+1,k)
//     x delta(a_{j-1},b_{j-1}) x ... x delta(a_1,b_1)
// prefix and suffix hold the deltas left and right of the zeta, with empty
// deltas dropped. iterations = k - b_j; a zero-iteration run keeps the block
// in prefix with the empty zeta [k+1,k] on the far right.
struct Rearranged {
  HalfInt alpha;
  std::vector<Segment> prefix;
  Segment zeta = Segment::empty_at(HalfInt(0));
  std::vector<Segment> suffix;
  HalfInt k;
  int iterations = 0;

  std::vector<GLFactor> factors() const;

  friend bool operator==(const Rearranged&, const Rearranged&) = default;
};

// Segments [c_1,d_1],...,[c_t,d_t] with d_i = d_{i-1} + 1 and c_{i-1} < c_i,
// stored bottom-up (rungs[0] = [c_1,d_1]). Empty segments may appear as
// padding rungs.
struct Ladder {
  std::vector<Segment> rungs;
  int length() const { return static_cast<int>(rungs.size()); }
  friend bool operator==(const Ladder&, const Ladder&) = default;
};

// Per-iteration record of the working state after pseudocode lines 5-9,
// plus the line-10 selection.
struct AlgIteration {
  GLFactor l_factor = GLFactor::delta(Segment::empty_at(HalfInt(0)));
  std::vector<GLFactor> after6;
  std::vector<GLFactor> after7;
  std::vector<GLFactor> after8;
  std::vector<GLFactor> after9;
  // Line-10 result: (a, e, b) for the next iteration, or nullopt = exit.
  std::optional<std::array<HalfInt, 3>> next_aeb;
};

struct AlgTrace {
  std::vector<GLFactor> input;
  HalfInt k;
  std::optional<Segment> initial;  // [b_0, k]; nullopt when no segment ends in k
  std::vector<AlgIteration> iterations;
  std::vector<GLFactor> output;
};

// Lines 1-13 of the algorithm, applied to a sorted all-Delta block.
// Throws precondition_error when the block is unsorted or k is in the wrong
// class. When no segment ends in k the block is returned unchanged with an
// empty zeta (zero iterations).
Rearranged run_algorithm(const AlphaBlock& block, HalfInt k,
                         bool want_trace = false,
                         AlgTrace* trace_out = nullptr);

// The longest ladder topped by the shortest segment ending in k, width-
// minimizing among maximal ones; rungs below the top avoid start+end = 1
// except [1/2,1/2]. Empty when no segment ends in k.
Ladder longest_ladder(const AlphaBlock& block, HalfInt k);

// The ladder expression of the algorithm: shorten each rung, keep the block
// sorted, insert zeta(k-t+1, k) after every copy of the shortened bottom
// rung.
Rearranged ladder_transform(const AlphaBlock& block, HalfInt k);

// Number of iterations the algorithm performs with input k.
int len_k(const AlphaBlock& block, HalfInt k);

// Inverse transformation: rebuilds the unique standard-module block whose
// algorithm output is r, or nullopt when r fails the recognizability tests.
// Throws validation_error on structurally malformed input.
std::optional<AlphaBlock> invert(const Rearranged& r);

// The ladder the inverse transformation selects (maximizing widths, padded
// with empty segments); exposed for the T-transformation and tests.
Ladder inverse_ladder(const Rearranged& r);

// T(shorten, shift): truncate zeta(b_j+1, k) to zeta(b'+1, k) with
// b' = k - shorten, and insert it `shift` positions to the right of the
// altered segment ending in b'.
std::vector<GLFactor> transform_T(const Rearranged& r, int shorten, int shift);

// One reduction step from the proof of the unique-quotient property.
enum class ReduceCase { Case1, Case21, Case22, Base, NotAnOutput };

struct ReduceStep {
  ReduceCase kind = ReduceCase::Base;
  std::vector<Segment> delta;       // extracted factors
  std::vector<GLFactor> residual;   // remaining sequence
};

ReduceStep reduce_step(const std::vector<GLFactor>& factors, HalfInt alpha);

}  // namespace theta
