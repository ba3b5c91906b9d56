#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "theta/block.hpp"

namespace theta {

using Coeff = boost::multiprecision::cpp_int;

// Formal unexpanded product of delta/zeta factors in the Grothendieck ring
// R; multiplication is commutative there, so a word is a sorted multiset.
// Empty segments are the identity and are not stored.
struct GLWord {
  std::vector<std::pair<Form, Segment>> factors;

  static GLWord one() { return {}; }
  static GLWord single(Form f, Segment s);

  bool is_one() const { return factors.empty(); }
  int degree() const;
  void append(Form f, Segment s);
  void canonicalize();

  friend bool operator==(const GLWord&, const GLWord&) = default;
};
bool word_less(const GLWord& x, const GLWord& y);
GLWord concat(const GLWord& x, const GLWord& y);

// Right tensor leg: a plain word, a word trailing into the formal tempered
// tail tau^, or the wildcard for the unknown tempered Jacquet content. The
// wildcard absorbs concatenation.
struct Tail {
  enum class Kind { Plain, TauHat, Bottom };
  Kind kind = Kind::Plain;
  GLWord word;  // unused for Bottom

  friend bool operator==(const Tail&, const Tail&) = default;
};
bool tail_less(const Tail& x, const Tail& y);

struct RingTerm {
  GLWord left;
  Tail right;
  friend bool operator==(const RingTerm&, const RingTerm&) = default;
};
struct RingTermLess {
  bool operator()(const RingTerm& x, const RingTerm& y) const;
};

// Integer combination of left (x) right terms; zero coefficients are never
// stored.
class RingElement {
 public:
  static RingElement zero() { return {}; }
  // 1 (x) 1
  static RingElement unit();
  static RingElement term(GLWord left, Tail right, Coeff c = 1);

  void add(RingTerm t, const Coeff& c);
  const std::map<RingTerm, Coeff, RingTermLess>& terms() const {
    return terms_;
  }
  size_t term_count() const { return terms_.size(); }
  Coeff coeff_total() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::map<RingTerm, Coeff, RingTermLess> terms_;
};

RingElement add(const RingElement& x, const RingElement& y);
RingElement mult(const RingElement& x, const RingElement& y);

// m*(delta[a,b]) = sum_i delta[i+1,b] (x) delta[a,i]
// m*(zeta(a,b))  = sum_i zeta(a,i) (x) zeta(i+1,b)
RingElement m_star(const Segment& seg, Form form);
// m* of a formal product.
RingElement m_star_word(const GLWord& w);

// M*(delta[a,b]) = sum_{i,j} delta[-i,-a] x delta[j+1,b] (x) delta[i+1,j]
// M*(zeta(a,b))  = sum_{i,j} zeta(-b,-(j+1)) x zeta(a,i) (x) zeta(i+1,j)
RingElement M_star(const Segment& seg, Form form);

// prod_i M*(delta_i) multiplied onto the tempered tail 1 (x) tau^ + bottom.
RingElement mu_star_product(
    const std::vector<std::pair<Form, Segment>>& factors);

// Number of terms of mu_star_product(factors) whose left leg equals target.
// Wildcard-tailed terms never count: completing their left leg would need a
// factor ending in a negative exponent, which Casselman's criterion rules
// out for the tempered tail.
Coeff count_leading(const std::vector<std::pair<Form, Segment>>& factors,
                    const GLWord& target);

}  // namespace theta
