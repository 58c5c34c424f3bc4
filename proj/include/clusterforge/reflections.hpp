#ifndef CLUSTERFORGE_REFLECTIONS_HPP
#define CLUSTERFORGE_REFLECTIONS_HPP

#include "clusterforge/ccmap.hpp"

namespace clusterforge {

/// A sink together with the reflected quiver; the data shared by the BGP
/// functor, the extended functor and the compatibility verifier.
struct ReflectionContext {
    Quiver source;
    size_t sink = 0;
    Quiver target; // sigma_i(source)
};

ReflectionContext make_reflection(const Quiver& q, size_t sink);

/// Standard BGP reflection functor at a sink: the space at i becomes the
/// kernel of the summed incoming map and the reversed arrows are its
/// component projections.  S_i summands are annihilated.
Representation bgp_reflect(const ReflectionContext& ctx, const Representation& m);

/// Multiplicity of S_i as a direct summand (corank of the incoming map).
long long simple_summand_multiplicity(const Representation& m, size_t i);

/// Extended BGP functor on decorated objects:
///   modules (minus S_i summands)  ->  Sigma_i^+,
///   S_i -> P_i[1],  P_i[1] -> S_i,  P_j[1] -> P_j[1].
DecoratedObject extended_reflect(const ReflectionContext& ctx, const DecoratedObject& obj);

/// Exact check of Phi_i(X_M) = X_{R_i^+ M}.
bool verify_reflection_compatibility(const ReflectionContext& ctx, const DecoratedObject& obj);

} // namespace clusterforge

#endif
