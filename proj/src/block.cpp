#include "theta/block.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

GLFactor GLFactor::lq(Segment zeta_seg, Segment delta_seg) {
  if (zeta_seg.a != delta_seg.b + 1)
    throw validation_error("LQ factor needs zeta start = delta end + 1, got "
                           "zeta [" + zeta_seg.a.str() + "," + zeta_seg.b.str() +
                           "], delta [" + delta_seg.a.str() + "," +
                           delta_seg.b.str() + "]");
  return {Kind::LQ, zeta_seg, delta_seg};
}

AlphaBlock make_delta_block(HalfInt alpha, const std::vector<Segment>& segs) {
  AlphaBlock b{alpha, {}};
  b.factors.reserve(segs.size());
  for (const auto& s : segs) b.factors.push_back(GLFactor::delta(s));
  validate_block(b);
  return b;
}

void validate_block(const AlphaBlock& block) {
  if (block.alpha != HalfInt(0) && block.alpha != HalfInt::halves(1))
    throw validation_error("alpha must be 0 or 1/2, got " + block.alpha.str());
  for (const auto& f : block.factors) {
    if (!same_class(f.seg.a, block.alpha))
      throw validation_error("factor exponent " + f.seg.a.str() +
                             " is not in class alpha = " + block.alpha.str());
    if (f.kind == GLFactor::Kind::LQ && !same_class(f.lq_delta->a, block.alpha))
      throw validation_error("LQ delta part is not in class alpha");
  }
}

std::vector<Segment> delta_segments(const AlphaBlock& block) {
  std::vector<Segment> out;
  out.reserve(block.factors.size());
  for (const auto& f : block.factors) {
    if (f.kind != GLFactor::Kind::Delta)
      throw unsupported_form_error(
          "operation is defined on Delta factors only");
    out.push_back(f.seg);
  }
  return out;
}

bool is_sorted_run(const std::vector<Segment>& segs) {
  for (size_t i = 1; i < segs.size(); ++i)
    if (compare_lex(segs[i - 1], segs[i]) == std::strong_ordering::less)
      return false;
  return true;
}

bool is_sorted_block(const AlphaBlock& block) {
  return is_sorted_run(delta_segments(block));
}

std::vector<Segment> sort_segments(std::vector<Segment> segs) {
  std::stable_sort(segs.begin(), segs.end(),
                   [](const Segment& x, const Segment& y) {
                     return compare_lex(x, y) == std::strong_ordering::greater;
                   });
  return segs;
}

AlphaBlock sort_block(const AlphaBlock& block) {
  return make_delta_block(block.alpha, sort_segments(delta_segments(block)));
}

bool block_positive(const AlphaBlock& block) {
  for (const auto& f : block.factors) {
    if (f.kind == GLFactor::Kind::LQ) return false;
    if (f.seg.empty()) continue;
    if ((f.seg.a + f.seg.b).doubled() <= 0) return false;
  }
  return true;
}

}  // namespace theta
