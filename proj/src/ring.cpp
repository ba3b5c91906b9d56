#include "theta/ring.hpp"

#include <algorithm>
#include <tuple>

#include "theta/errors.hpp"

namespace theta {

namespace {
auto factor_key(const std::pair<Form, Segment>& f) {
  return std::make_tuple(static_cast<int>(f.first), f.second.b.doubled(),
                         f.second.a.doubled());
}
}  // namespace

GLWord GLWord::single(Form f, Segment s) {
  GLWord w;
  w.append(f, s);
  return w;
}

int GLWord::degree() const {
  int d = 0;
  for (const auto& [form, seg] : factors) d += seg.length();
  return d;
}

void GLWord::append(Form f, Segment s) {
  if (s.empty()) return;
  factors.emplace_back(f, s);
  canonicalize();
}

void GLWord::canonicalize() {
  std::sort(factors.begin(), factors.end(),
            [](const auto& x, const auto& y) {
              return factor_key(x) < factor_key(y);
            });
}

bool word_less(const GLWord& x, const GLWord& y) {
  return std::lexicographical_compare(
      x.factors.begin(), x.factors.end(), y.factors.begin(), y.factors.end(),
      [](const auto& a, const auto& b) { return factor_key(a) < factor_key(b); });
}

GLWord concat(const GLWord& x, const GLWord& y) {
  GLWord out = x;
  out.factors.insert(out.factors.end(), y.factors.begin(), y.factors.end());
  out.canonicalize();
  return out;
}

bool tail_less(const Tail& x, const Tail& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.kind == Tail::Kind::Bottom) return false;
  return word_less(x.word, y.word);
}

bool RingTermLess::operator()(const RingTerm& x, const RingTerm& y) const {
  if (x.left != y.left) return word_less(x.left, y.left);
  return tail_less(x.right, y.right);
}

RingElement RingElement::unit() {
  return term(GLWord::one(), Tail{Tail::Kind::Plain, GLWord::one()});
}

RingElement RingElement::term(GLWord left, Tail right, Coeff c) {
  RingElement e;
  e.add(RingTerm{std::move(left), std::move(right)}, c);
  return e;
}

void RingElement::add(RingTerm t, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(t), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff RingElement::coeff_total() const {
  Coeff out = 0;
  for (const auto& [t, c] : terms_) out += abs(c);
  return out;
}

RingElement add(const RingElement& x, const RingElement& y) {
  RingElement out = x;
  for (const auto& [t, c] : y.terms()) out.add(t, c);
  return out;
}

static Tail tail_concat(const Tail& x, const Tail& y) {
  if (x.kind == Tail::Kind::Bottom || y.kind == Tail::Kind::Bottom)
    return Tail{Tail::Kind::Bottom, GLWord::one()};
  if (x.kind == Tail::Kind::TauHat && y.kind == Tail::Kind::TauHat)
    throw error("two tempered tails in one product");
  Tail out;
  out.kind = (x.kind == Tail::Kind::TauHat || y.kind == Tail::Kind::TauHat)
                 ? Tail::Kind::TauHat
                 : Tail::Kind::Plain;
  out.word = concat(x.word, y.word);
  return out;
}

RingElement mult(const RingElement& x, const RingElement& y) {
  RingElement out;
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms())
      out.add(RingTerm{concat(tx.left, ty.left),
                       tail_concat(tx.right, ty.right)},
              cx * cy);
  return out;
}

RingElement m_star(const Segment& seg, Form form) {
  RingElement out;
  if (seg.empty()) return RingElement::unit();
  const HalfInt a = seg.a, b = seg.b;
  for (HalfInt i = a - 1; i <= b; i = i + 1) {
    GLWord left, right;
    if (form == Form::Delta) {
      if (i < b) left.append(Form::Delta, Segment(i + 1, b));
      if (a <= i) right.append(Form::Delta, Segment(a, i));
    } else {
      if (a <= i) left.append(Form::Zeta, Segment(a, i));
      if (i < b) right.append(Form::Zeta, Segment(i + 1, b));
    }
    out.add(RingTerm{left, Tail{Tail::Kind::Plain, right}}, 1);
  }
  return out;
}

RingElement m_star_word(const GLWord& w) {
  RingElement out = RingElement::unit();
  for (const auto& [form, seg] : w.factors) out = mult(out, m_star(seg, form));
  return out;
}

RingElement M_star(const Segment& seg, Form form) {
  if (seg.empty()) return RingElement::unit();
  RingElement out;
  const HalfInt a = seg.a, b = seg.b;
  for (HalfInt i = a - 1; i <= b; i = i + 1) {
    for (HalfInt j = i; j <= b; j = j + 1) {
      GLWord left, right;
      if (form == Form::Delta) {
        if (a <= i) left.append(Form::Delta, Segment(-i, -a));
        if (j < b) left.append(Form::Delta, Segment(j + 1, b));
        if (i < j) right.append(Form::Delta, Segment(i + 1, j));
      } else {
        if (j < b) left.append(Form::Zeta, Segment(-b, -(j + 1)));
        if (a <= i) left.append(Form::Zeta, Segment(a, i));
        if (i < j) right.append(Form::Zeta, Segment(i + 1, j));
      }
      out.add(RingTerm{left, Tail{Tail::Kind::Plain, right}}, 1);
    }
  }
  return out;
}

RingElement mu_star_product(
    const std::vector<std::pair<Form, Segment>>& factors) {
  RingElement tail;
  tail.add(RingTerm{GLWord::one(), Tail{Tail::Kind::TauHat, GLWord::one()}}, 1);
  tail.add(RingTerm{GLWord::one(), Tail{Tail::Kind::Bottom, GLWord::one()}}, 1);
  RingElement out = tail;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out = mult(M_star(it->second, it->first), out);
  return out;
}

Coeff count_leading(const std::vector<std::pair<Form, Segment>>& factors,
                    const GLWord& target) {
  RingElement prod = mu_star_product(factors);
  Coeff out = 0;
  for (const auto& [t, c] : prod.terms()) {
    if (t.right.kind == Tail::Kind::Bottom) continue;  // Casselman exclusion
    if (t.left == target) out += 1;
  }
  return out;
}

}  // namespace theta
