#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobord/group.hpp"
#include "cobord/lazard.hpp"
#include "cobord/variety.hpp"

namespace cobord {

/// A variety together with a G-action whose fixed locus has the recorded
/// dimension (nullopt for an empty fixed locus). `provenance` names the
/// construction: "milnor-hypersurface", "generator-split",
/// "fixed-point-free-hypersurface" or "filtration-product".
struct ActionWitness {
    VarietyExpr variety;
    GroupDescriptor group;
    std::optional<int> fixed_dim;
    std::string provenance;
};

/// Fixed-locus dimension of the diagonal action on H_{m,n}.
int milnor_fixed_dim(int m, int n, int q);

/// Witness for H_{m,n} itself.
ActionWitness milnor_action(int m, int n, const GroupDescriptor& group);

/// (X_i^+, X_i^-): the positive and negative parts of the Milnor combination
/// behind the base generator l_i, so that [X_i^+] - [X_i^-] = l_i. A part may
/// be the empty variety.
std::pair<ActionWitness, ActionWitness> generator_action(const Lazard& lazard, int i, const GroupDescriptor& group);

/// Y_s = degree-p hypersurface in P^{p^s} with a fixed-point-free action;
/// needs rank >= s + 1 and p^s - 1 <= N.
ActionWitness landweber_variety(int s, const GroupDescriptor& group, int truncation = kDefaultTruncation);

/// Products of the X_i^+- with sum floor(i/q) <= d and sum i <= max_dim,
/// including the point. Products with an empty factor are left out.
std::vector<ActionWitness> filtration_family(const Lazard& lazard, int d, const GroupDescriptor& group, int max_dim);

}  // namespace cobord
