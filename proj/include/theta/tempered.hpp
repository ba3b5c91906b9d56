#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace theta {

enum class Side { W, V };
constexpr Side flip(Side s) { return s == Side::W ? Side::V : Side::W; }

enum class Parity { Odd, Even };

// Symbolic tempered part of a standard module.
//
//   Atom(label, l, mult, side)   a named tempered representation with its
//                                first-occurrence level l = l(tau) on the
//                                going-down tower and the multiplicities
//                                m_phi(chi_V S_a) that enter the theorems
//   Lift(inner, level)           theta_level(inner); side flipped
//   StWrap(d, inner)             L(chi St_d nu^{1/2}; inner)
//   SigmaOf(inner)               the tempered part sigma with
//                                inner = L(chi St nu^{1/2}; sigma)
//
// Tokens are immutable values; copies share nodes.
class TemperedToken {
 public:
  enum class Kind { Atom, Lift, StWrap, SigmaOf };

  static TemperedToken atom(std::string label, int l_down,
                            std::map<int, int> mult, Side side);
  static TemperedToken lift(TemperedToken inner, int level);
  static TemperedToken st_wrap(int st_dim, TemperedToken inner);
  static TemperedToken sigma_of(TemperedToken inner);

  Kind kind() const;

  // Atom accessors.
  const std::string& label() const;
  int atom_l_down() const;
  const std::map<int, int>& mult() const;
  Side atom_side() const;

  // Lift / StWrap / SigmaOf accessors.
  TemperedToken inner() const;
  int level() const;    // Lift
  int st_dim() const;   // StWrap

  // Side of the representation the token denotes: the atom's side flipped
  // once per enclosing Lift.
  Side side() const;

  // Parity class of the dual pair the token lives in: 1 for Sp/O(even),
  // 2 for Mp/O(odd); read off the innermost atom.
  int kappa() const;

  friend bool operator==(const TemperedToken& x, const TemperedToken& y);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit TemperedToken(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

// --- attribute algebra -------------------------------------------------
//
// The engine only asserts attributes the source results state:
//   * an Atom carries l(tau) explicitly;
//   * theta_{s+1}(L(chi St_s nu^{1/2}; tau)) has l = s - 1, and S_{s-1}
//     appears in its parameter with even multiplicity;
//   * theta_{kappa-2}(tau) lifts back at 2 - kappa;
//   * theta_{-2-l0}(tau), the first lift on the going-up tower, lifts back
//     at l0 + 2;
//   * for sigma with theta_{-2-l0}(tau) = L(chi St_{l0+1} nu^{1/2}; sigma),
//     only the interval l(sigma) in [l0, l0+2] and oddness of
//     m_phi(chi S_{l0}) are forced, so sigma carries bounds, not a value.
// Everything else is unknown and surfaces as attributes_required_error at
// the point of use.

// Exact l(token) on its going-down tower, when derivable.
std::optional<int> known_l_down(const TemperedToken& t);

// [lo, hi] interval for l(token); wider than known_l_down only for SigmaOf.
std::optional<std::pair<int, int>> l_down_bounds(const TemperedToken& t);

// Is theta_level(token) nonzero on the token's going-down tower?
// nullopt = not derivable.
std::optional<bool> theta_nonzero(const TemperedToken& t, int level);

// Parity of m_phi(chi S_dim) for the token's parameter, when derivable.
std::optional<Parity> mult_parity(const TemperedToken& t, int dim);

// Rewrites to a normal form:
//   Lift(Lift(t, j), -j) -> t   for j in {kappa-2, -2-l(t)} or 0 <= j <= l(t)
//   StWrap(l0+1, SigmaOf(Lift(t, -2-l0))) -> Lift(t, -2-l0)
// applied bottom-up to a fixed point.
TemperedToken simplify_tempered(const TemperedToken& t);

// Structural validity of an Atom's attribute set (mult keys congruent to l
// mod 2, interior multiplicities odd, positive multiplicity at l).
void validate_atom_attributes(int l_down, const std::map<int, int>& mult);

}  // namespace theta
