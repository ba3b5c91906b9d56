#include "theta/tempered.hpp"

#include "theta/errors.hpp"

namespace theta {

struct TemperedToken::Node {
  Kind kind;
  // Atom
  std::string label;
  int l_down = 0;
  std::map<int, int> mult;
  Side side = Side::W;
  // Lift / StWrap / SigmaOf
  std::shared_ptr<const Node> inner;
  int level = 0;   // Lift
  int st_dim = 0;  // StWrap
};

TemperedToken TemperedToken::atom(std::string label, int l_down,
                                  std::map<int, int> mult, Side side) {
  validate_atom_attributes(l_down, mult);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->label = std::move(label);
  n->l_down = l_down;
  n->mult = std::move(mult);
  n->side = side;
  return TemperedToken(std::move(n));
}

TemperedToken TemperedToken::lift(TemperedToken inner, int level) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lift;
  n->inner = inner.node_;
  n->level = level;
  return TemperedToken(std::move(n));
}

TemperedToken TemperedToken::st_wrap(int st_dim, TemperedToken inner) {
  if (st_dim < 1)
    throw validation_error("StWrap dimension must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::StWrap;
  n->inner = inner.node_;
  n->st_dim = st_dim;
  return TemperedToken(std::move(n));
}

TemperedToken TemperedToken::sigma_of(TemperedToken inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SigmaOf;
  n->inner = inner.node_;
  return TemperedToken(std::move(n));
}

TemperedToken::Kind TemperedToken::kind() const { return node_->kind; }

const std::string& TemperedToken::label() const { return node_->label; }
int TemperedToken::atom_l_down() const { return node_->l_down; }
const std::map<int, int>& TemperedToken::mult() const { return node_->mult; }
Side TemperedToken::atom_side() const { return node_->side; }

TemperedToken TemperedToken::inner() const {
  return TemperedToken(node_->inner);
}
int TemperedToken::level() const { return node_->level; }
int TemperedToken::st_dim() const { return node_->st_dim; }

Side TemperedToken::side() const {
  switch (kind()) {
    case Kind::Atom:
      return node_->side;
    case Kind::Lift:
      return flip(inner().side());
    case Kind::StWrap:
    case Kind::SigmaOf:
      return inner().side();
  }
  return Side::W;
}

int TemperedToken::kappa() const {
  const Node* n = node_.get();
  while (n->kind != Kind::Atom) n = n->inner.get();
  // l(tau) = kappa mod 2; l = -1 forces kappa = 1.
  return (std::abs(n->l_down) % 2 == 1) ? 1 : 2;
}

bool operator==(const TemperedToken& x, const TemperedToken& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case TemperedToken::Kind::Atom:
      return x.label() == y.label() && x.atom_l_down() == y.atom_l_down() &&
             x.mult() == y.mult() && x.atom_side() == y.atom_side();
    case TemperedToken::Kind::Lift:
      return x.level() == y.level() && x.inner() == y.inner();
    case TemperedToken::Kind::StWrap:
      return x.st_dim() == y.st_dim() && x.inner() == y.inner();
    case TemperedToken::Kind::SigmaOf:
      return x.inner() == y.inner();
  }
  return false;
}

void validate_atom_attributes(int l_down, const std::map<int, int>& mult) {
  if (l_down < -1)
    throw validation_error("l(tau) must be >= -1, got " +
                           std::to_string(l_down));
  for (const auto& [dim, count] : mult) {
    if (dim <= 0 || count < 0)
      throw validation_error("multiplicity entries need dim > 0, count >= 0");
    if ((dim - l_down) % 2 != 0)
      throw validation_error("multiplicity key " + std::to_string(dim) +
                             " is not congruent to l(tau) = " +
                             std::to_string(l_down) + " mod 2");
    if (dim < l_down && dim > 0 && count % 2 == 0)
      throw validation_error("m_phi(chi S_" + std::to_string(dim) +
                             ") must be odd for 0 < a < l(tau)");
    if (dim == l_down && l_down > 0 && count < 1)
      throw validation_error("m_phi(chi S_l) must be positive at l = l(tau)");
  }
}

// True when the Lift node is theta_{s+1} of an StWrap of dimension s,
// i.e. the token the appendix computes: l(theta_{l-2t+2}(tau')) = l-2t.
static bool is_stwrap_first_lift(const TemperedToken& t) {
  return t.kind() == TemperedToken::Kind::Lift &&
         t.inner().kind() == TemperedToken::Kind::StWrap &&
         t.level() == t.inner().st_dim() + 1;
}

std::optional<int> known_l_down(const TemperedToken& t) {
  switch (t.kind()) {
    case TemperedToken::Kind::Atom:
      return t.atom_l_down();
    case TemperedToken::Kind::Lift: {
      if (is_stwrap_first_lift(t)) return t.inner().st_dim() - 1;
      const TemperedToken& in = t.inner();
      if (t.level() == in.kappa() - 2) return 2 - in.kappa();
      if (auto l0 = known_l_down(in); l0 && t.level() == -2 - *l0)
        return *l0 + 2;
      return std::nullopt;
    }
    case TemperedToken::Kind::StWrap:
    case TemperedToken::Kind::SigmaOf:
      return std::nullopt;
  }
  return std::nullopt;
}

// SigmaOf(Lift(tau, -2-l0)): the defining equation
// theta_{-2-l0}(tau) = L(chi St_{l0+1} nu^{1/2}; sigma) pins l(sigma) to
// either l0 (with m_phi(chi S_{l0}) odd) or l0+2; both are consistent with
// the occurrence theorem applied to the wrapped module, so only the interval
// is asserted.
static std::optional<int> sigma_base_l(const TemperedToken& t) {
  if (t.kind() != TemperedToken::Kind::SigmaOf) return std::nullopt;
  const TemperedToken& in = t.inner();
  if (in.kind() != TemperedToken::Kind::Lift) return std::nullopt;
  auto l0 = known_l_down(in.inner());
  if (l0 && in.level() == -2 - *l0 && *l0 > 0) return l0;
  return std::nullopt;
}

std::optional<std::pair<int, int>> l_down_bounds(const TemperedToken& t) {
  if (auto l = known_l_down(t)) return std::make_pair(*l, *l);
  if (auto l0 = sigma_base_l(t)) return std::make_pair(*l0, *l0 + 2);
  return std::nullopt;
}

std::optional<bool> theta_nonzero(const TemperedToken& t, int level) {
  auto b = l_down_bounds(t);
  if (!b) return std::nullopt;
  if (level <= b->first) return true;
  if (level > b->second) return false;
  return std::nullopt;
}

std::optional<Parity> mult_parity(const TemperedToken& t, int dim) {
  switch (t.kind()) {
    case TemperedToken::Kind::Atom: {
      auto it = t.mult().find(dim);
      if (it == t.mult().end()) return std::nullopt;
      return it->second % 2 == 0 ? Parity::Even : Parity::Odd;
    }
    case TemperedToken::Kind::Lift:
      if (is_stwrap_first_lift(t) && dim == t.inner().st_dim() - 1)
        return Parity::Even;
      return std::nullopt;
    case TemperedToken::Kind::SigmaOf:
      if (auto l0 = sigma_base_l(t); l0 && dim == *l0) return Parity::Odd;
      return std::nullopt;
    case TemperedToken::Kind::StWrap:
      return std::nullopt;
  }
  return std::nullopt;
}

// theta_{-j}(theta_j(t)) = t whenever the inner lift is reversible:
//   0 <= j <= l(t)  (below first occurrence on the going-down tower),
//   j = kappa - 2   (theta_{2-kappa}(theta_{kappa-2}(tau)) = tau),
//   j = -2 - l(t)   (first occurrence on the going-up tower).
static bool lift_reversible(const TemperedToken& t, int j) {
  if (j == t.kappa() - 2) return true;
  auto l = known_l_down(t);
  if (!l) return false;
  if (j == -2 - *l) return true;
  return j >= 0 && j <= *l && (j - *l) % 2 == 0;
}

TemperedToken simplify_tempered(const TemperedToken& t) {
  switch (t.kind()) {
    case TemperedToken::Kind::Atom:
      return t;
    case TemperedToken::Kind::Lift: {
      TemperedToken in = simplify_tempered(t.inner());
      if (in.kind() == TemperedToken::Kind::Lift &&
          in.level() == -t.level() && lift_reversible(in.inner(), in.level()))
        return in.inner();
      return TemperedToken::lift(in, t.level());
    }
    case TemperedToken::Kind::StWrap: {
      TemperedToken in = simplify_tempered(t.inner());
      // L(chi St_{l0+1} nu^{1/2}; sigma) = theta_{-2-l0}(tau) read backwards.
      if (in.kind() == TemperedToken::Kind::SigmaOf) {
        const TemperedToken& lifted = in.inner();
        if (lifted.kind() == TemperedToken::Kind::Lift) {
          auto l0 = known_l_down(lifted.inner());
          if (l0 && lifted.level() == -2 - *l0 && t.st_dim() == *l0 + 1)
            return lifted;
        }
      }
      return TemperedToken::st_wrap(t.st_dim(), in);
    }
    case TemperedToken::Kind::SigmaOf:
      return TemperedToken::sigma_of(simplify_tempered(t.inner()));
  }
  return t;
}

}  // namespace theta
