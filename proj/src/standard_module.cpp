#include "theta/standard_module.hpp"

#include "theta/errors.hpp"

namespace theta {

void validate_module(const StandardModule& m) {
  validate_block(m.block);
  const int kappa = m.kappa();
  const HalfInt expected_alpha =
      kappa == 1 ? HalfInt(0) : HalfInt::halves(1);
  if (m.block.alpha != expected_alpha)
    throw validation_error(
        "alpha = " + m.block.alpha.str() + " contradicts kappa = " +
        std::to_string(kappa) + " (alpha must be " + expected_alpha.str() +
        " since alpha = (l(tau)-1)/2 mod Z)");
  if (!block_positive(m.block))
    throw validation_error(
        "block factor violates a + b > 0; a standard module has strictly "
        "positive exponents");
  if (auto l = known_l_down(m.tempered)) {
    if (*l == -1 && kappa != 1)
      throw validation_error("l(tau) = -1 occurs only in the Sp/O(even) pair");
    if (*l >= 0 && (*l - kappa) % 2 != 0)
      throw validation_error("l(tau) = " + std::to_string(*l) +
                             " is not congruent to kappa = " +
                             std::to_string(kappa) + " mod 2");
  }
  if (m.tempered.side() != m.side)
    throw validation_error("tempered part lives on the wrong side");
  if (m.epsilon != 1 && m.epsilon != -1)
    throw validation_error("epsilon must be +1 or -1");
  if (m.n && *m.n < 0)
    throw validation_error("rank datum n must be nonnegative");
}

bool modules_equal(const StandardModule& x, const StandardModule& y) {
  return x.pair == y.pair && x.side == y.side && x.xi == y.xi &&
         x.block == y.block &&
         simplify_tempered(x.tempered) == simplify_tempered(y.tempered) &&
         x.n == y.n && x.epsilon == y.epsilon;
}

}  // namespace theta
