#include "rev/counteracts.hpp"

namespace rev {

bool counteracts_wrt(const TotalPreorder& order, const ModelSet& alpha,
                     const ModelSet& beta) {
  if (alpha.empty() || beta.empty())
    throw EmptyInputError("counteracts requires consistent arguments");
  return !min_models(order, alpha).intersects(beta) &&
         !min_models(order, beta).intersects(alpha);
}

bool counteracts(const TotalPreorder& state, const ModelSet& alpha,
                 const ModelSet& beta) {
  return counteracts_wrt(state, alpha, beta);
}

bool counteracts_via_witnesses(const TotalPreorder& state, const ModelSet& alpha,
                               const ModelSet& beta) {
  if (alpha.empty() || beta.empty())
    throw EmptyInputError("counteracts requires consistent arguments");
  ModelSet both = alpha & beta;
  if (both.empty()) return true;
  // All minimal (alpha & beta)-worlds share one rank; a witness is any world
  // strictly below it.
  int cutoff = state.rank(min_models(state, both).members().front());
  auto has_witness = [&](const ModelSet& side) {
    for (Valuation v : side.members())
      if (state.rank(v) < cutoff) return true;
    return false;
  };
  return has_witness(alpha) && has_witness(beta);
}

}  // namespace rev
