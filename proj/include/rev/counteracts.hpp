#pragma once

#include "rev/preorder.hpp"

namespace rev {

// alpha and beta counteract w.r.t. a state iff revising by either rules out
// the other; computed in the preorder form:
//   min(alpha) contains no beta-world and min(beta) contains no alpha-world.
bool counteracts(const TotalPreorder& state, const ModelSet& alpha, const ModelSet& beta);

// Witness form: there exist an alpha-world and a beta-world both strictly
// below every minimal (alpha & beta)-world. When alpha & beta is
// unsatisfiable the relation holds vacuously. Serves as an independent
// oracle for the preorder form.
bool counteracts_via_witnesses(const TotalPreorder& state, const ModelSet& alpha,
                               const ModelSet& beta);

// The same test against an arbitrary supplied preorder. On the single-level
// order it reduces to logical inconsistency of alpha and beta.
bool counteracts_wrt(const TotalPreorder& order, const ModelSet& alpha,
                     const ModelSet& beta);

}  // namespace rev
