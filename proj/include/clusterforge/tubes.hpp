#ifndef CLUSTERFORGE_TUBES_HPP
#define CLUSTERFORGE_TUBES_HPP

#include "clusterforge/ccmap.hpp"

#include <map>
#include <optional>
#include <vector>

namespace clusterforge {

/// An exceptional tube of an affine quiver, described at the level of the
/// dimension vectors of its quasi-simples: c(e_i) = e_{i-1} (indices mod p)
/// and the orbit sums to delta.
struct TubeDescriptor {
    size_t rank = 1;
    std::vector<DimVec> quasi_simple_dims;
    bool homogeneous() const { return rank == 1; }
};

/// The exceptional tubes of a quiver of affine type A~(r,s) (the tubes of
/// rank r and s; rank-1 entries omitted).  Quasi-simple dimension vectors
/// are found as thin defect-zero real roots grouped into Coxeter orbits
/// summing to delta.
std::vector<TubeDescriptor> exceptional_tubes(const Quiver& q);

/// The unique indecomposable with the given thin quasi-simple root (all
/// arrows identity on the support).
Representation quasi_simple_module(const Quiver& q, const DimVec& root);

/// A thin delta-dimensional module of an affine A~ quiver, certified
/// homogeneous (End = k, Hom(E, M) = 0 for every exceptional quasi-simple)
/// or classified as the exceptional M_E it equals.  lambda = nullopt means
/// the point at infinity.
struct RegularDeltaModule {
    Representation rep;
    bool homogeneous = false;
    std::optional<DimVec> exceptional_socle; // set when not homogeneous
};
RegularDeltaModule homogeneous_regular(const Quiver& q, const std::optional<Rat>& lambda);

/// Smallest integer lambda >= 1 whose M_lambda is certified homogeneous.
Rat first_homogeneous_lambda(const Quiver& q);

/// Characters X_{E_i^{(n)}} of a tube, computed from the quasi-simple
/// characters by the mesh recursion
///   X_{E_{i-1}^{(n+1)}} = (X_{E_i^{(n)}} X_{E_{i-1}^{(n)}} - 1) / X_{E_i^{(n-1)}}
/// with X_{E^{(0)}} = 1; every division must be exact.
struct TubeCharacterTable {
    TubeDescriptor tube;
    std::map<std::pair<size_t, size_t>, LaurentPolynomial> chars; // (socle, length)
    const LaurentPolynomial& at(size_t socle, size_t length) const;
};
TubeCharacterTable tube_characters(const Quiver& q, const TubeDescriptor& tube,
                                   size_t max_length,
                                   const std::vector<LaurentPolynomial>* socle_chars = nullptr);

/// One difference-property verdict per quasi-simple of an exceptional tube:
/// X_{M_E} - X_{M_lambda} compared against X_{q.rad(M_E)/E} (which is 1 for
/// rank-2 tubes).
struct DifferenceLine {
    DimVec socle;
    LaurentPolynomial difference;
    LaurentPolynomial expected;
    bool pass = false;
};
std::vector<DifferenceLine> check_difference_property(const Quiver& q,
                                                      const TubeDescriptor& tube);

/// Homogeneous regular module of quasi-length m: all cycle arrows are the
/// identity except the designated one, which carries a Jordan block J_m(lambda).
Representation jordan_regular(const Quiver& q, const Rat& lambda, size_t m);

/// The unique indecomposable of the tube with given quasi-socle and
/// quasi-length, realized as a string module (an interval of the universal
/// cover of the cycle) and certified by its socle.
Representation tube_module(const Quiver& q, const TubeDescriptor& tube, size_t socle_index,
                           size_t quasi_length);

} // namespace clusterforge

#endif
