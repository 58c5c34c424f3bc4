#ifndef CLUSTERFORGE_GENERIC_HPP
#define CLUSTERFORGE_GENERIC_HPP

#include "clusterforge/tubes.hpp"

#include <map>
#include <optional>
#include <vector>

namespace clusterforge {

/// Kac's canonical decomposition of a nonnegative dimension vector into
/// Schur roots with generically vanishing Ext, witnessed by explicit rigid
/// representations (and homogeneous delta-modules for the imaginary part).
struct CanonicalDecomposition {
    DimVec input;
    long long delta_multiplicity = 0; // affine imaginary part delta^n
    std::vector<DimVec> real_summands; // real Schur roots, with multiplicity
};

enum class GenericKind { ClusterMonomial, ZPowerTimesRigidRegular };

struct GenericBasisElement {
    DimVec d;
    LaurentPolynomial value;
    GenericKind kind = GenericKind::ClusterMonomial;
    long long delta_multiplicity = 0;
    std::vector<DimVec> regular_rigid_dims;
};

/// Evaluates generic variables X_d over a fixed Dynkin or affine quiver,
/// caching root witnesses and their characters.
class GenericEvaluator {
public:
    explicit GenericEvaluator(Quiver q);

    const Quiver& quiver() const { return q_; }

    CanonicalDecomposition decompose(const DimVec& d);
    GenericBasisElement at(const DimVec& d);

    /// X_delta = X_{M_lambda}; affine only.
    const LaurentPolynomial& delta_value();

private:
    const LaurentPolynomial& root_value(const DimVec& root);
    bool is_real_schur(const DimVec& root) const;
    std::vector<DimVec> schur_roots_below(const DimVec& bound) const;
    bool compatible(const DimVec& a, const DimVec& b);
    const Representation& witness(const DimVec& root);

    Quiver q_;
    QuiverType type_;
    EulerData euler_;
    std::map<DimVec, Representation> witnesses_;
    std::map<DimVec, LaurentPolynomial> values_;
    std::map<std::pair<DimVec, DimVec>, bool> compat_;
    std::optional<LaurentPolynomial> delta_value_;
};

CanonicalDecomposition canonical_decomposition(const Quiver& q, const DimVec& d);
GenericBasisElement generic_variable(const Quiver& q, const DimVec& d);

/// All generic variables X_d for |d_i| <= box_i over an affine A~ quiver,
/// each classified per the explicit description of B'(Q).
std::vector<GenericBasisElement> enumerate_generic_basis(const Quiver& q, const DimVec& box);

/// Exact integer expansion of x over the generic variables X_d with
/// 0 <= d <= box: solves the coefficient system modulo a large prime,
/// lifts, and verifies the identity exactly.  nullopt when no integer
/// combination exists in the box.
struct BasisExpansion {
    std::vector<std::pair<Int, DimVec>> terms; // coefficient, dimension vector
};
std::optional<BasisExpansion> expand_in_generic_basis(GenericEvaluator& eval,
                                                      const LaurentPolynomial& x,
                                                      const DimVec& box);

} // namespace clusterforge

#endif
