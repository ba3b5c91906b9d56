#include "theta/segment.hpp"

#include "theta/errors.hpp"

namespace theta {

Segment::Segment(HalfInt a_, HalfInt b_) : a(a_), b(b_) {
  if (!same_class(a, b))
    throw validation_error("segment endpoints " + a.str() + ", " + b.str() +
                           " differ by a non-integer");
  if (b < a - 1)
    throw validation_error("segment [" + a.str() + "," + b.str() +
                           "] has negative length");
}

Segment Segment::empty_at(HalfInt a_) { return Segment(a_, a_ - 1); }

std::strong_ordering compare_lex(const Segment& s1, const Segment& s2) {
  if (!same_class(s1.b, s2.b))
    throw class_mismatch_error("cannot compare [" + s1.a.str() + "," +
                               s1.b.str() + "] with [" + s2.a.str() + "," +
                               s2.b.str() + "]: exponent classes differ");
  if (auto c = s1.b <=> s2.b; c != 0) return c;
  return s1.a <=> s2.a;
}

bool contains(const Segment& s1, const Segment& s2) {
  if (s1.empty() || s2.empty()) return false;
  if (!same_class(s1.a, s2.a))
    throw class_mismatch_error("contains: exponent classes differ");
  return s1.a <= s2.a && s2.b <= s1.b;
}

bool adjacent(const Segment& s1, const Segment& s2) {
  if (s1.empty() || s2.empty()) return false;
  if (!same_class(s1.a, s2.a))
    throw class_mismatch_error("adjacent: exponent classes differ");
  return s2.a == s1.b + 1 || s1.a == s2.b + 1;
}

bool linked(const Segment& s1, const Segment& s2) {
  if (s1.empty() || s2.empty()) return false;
  if (!same_class(s1.a, s2.a))
    throw class_mismatch_error("linked: exponent classes differ");
  if (contains(s1, s2) || contains(s2, s1)) return false;
  // union is a segment: overlap or touch end-to-start
  HalfInt lo = s1.a < s2.a ? s2.a : s1.a;
  HalfInt hi = s1.b < s2.b ? s1.b : s2.b;
  return lo <= hi + 1;
}

}  // namespace theta
