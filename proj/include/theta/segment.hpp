#pragma once

#include <compare>
#include <string>

#include "theta/half_int.hpp"

namespace theta {

// Cuspidal segment [a,b] with a,b in a common class mod Z and b >= a-1.
// The case b = a-1 is the empty segment (the identity of GL_0); empty
// segments with distinct a are distinct values and occupy distinct sort
// positions.
struct Segment {
  HalfInt a;
  HalfInt b;

  Segment(HalfInt a_, HalfInt b_);
  static Segment empty_at(HalfInt a_);

  bool empty() const { return b == a - 1; }
  // Number of exponents; 0 for the empty segment.
  int length() const { return (b - a).whole() + 1; }
  bool singleton() const { return a == b; }

  // [a,b]^vee = [-b,-a] (rho trivial, self-dual).
  Segment contragredient() const { return Segment(-b, -a); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Lexicographic order (eq_order): [a,b] < [c,d] iff b < d, or b = d and
// a < c. Empty segments compare through their conventional (a, a-1)
// coordinates. Throws class_mismatch_error when the segments live in
// different classes mod Z.
std::strong_ordering compare_lex(const Segment& s1, const Segment& s2);

// Zelevinsky predicates. linked/adjacent return false when either segment is
// empty; contains only holds between non-empty segments.
bool contains(const Segment& s1, const Segment& s2);
bool adjacent(const Segment& s1, const Segment& s2);
bool linked(const Segment& s1, const Segment& s2);

}  // namespace theta
