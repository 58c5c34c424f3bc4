#ifndef CLUSTERFORGE_CLUSTER_HPP
#define CLUSTERFORGE_CLUSTER_HPP

#include "clusterforge/laurent.hpp"
#include "clusterforge/quiver.hpp"

#include <vector>

namespace clusterforge {

/// A seed: antisymmetric exchange matrix plus the current cluster written
/// as Laurent polynomials in the initial variables.
struct Seed {
    IntMatrix b;
    std::vector<LaurentPolynomial> cluster;
};

Seed initial_seed(const Quiver& q);

/// Matrix mutation plus the exchange relation with exact Laurent division;
/// a division failure would contradict the Laurent phenomenon and is
/// reported as InconsistencyError.
Seed mutate(const Seed& s, size_t k);

/// All cluster variables reachable within `depth` mutations of the initial
/// seed, deduplicated by canonical form and sorted by canonical string.
std::vector<LaurentPolynomial> enumerate_cluster_variables(const Quiver& q, size_t depth);

/// Comparison of {X_M : M indecomposable rigid, dim in [-1, hi]} with the
/// BFS cluster variables whose denominator vectors lie in the same box.
struct RigidCorrespondenceReport {
    std::vector<LaurentPolynomial> from_modules;
    std::vector<LaurentPolynomial> from_mutation;
    bool equal = false;
};
RigidCorrespondenceReport rigid_correspondence_check(const Quiver& q, const DimVec& hi,
                                                     size_t depth = 6);

/// The canonical cluster-algebra isomorphism Phi_i attached to a sink i:
/// rewrites a Laurent polynomial through the substitution
/// u_i -> (prod_{j->i} u_j + 1)/u_i, exact division required.  The same
/// substitution is its own inverse.
LaurentPolynomial canonical_isomorphism(const Quiver& q, size_t sink,
                                        const LaurentPolynomial& f);

} // namespace clusterforge

#endif
