#ifndef CLUSTERFORGE_CCMAP_HPP
#define CLUSTERFORGE_CCMAP_HPP

#include "clusterforge/laurent.hpp"
#include "clusterforge/representation.hpp"

#include <vector>

namespace clusterforge {

/// Object of the cluster category: a module plus nonnegative multiplicities
/// of the shifted projectives P_i[1].
struct DecoratedObject {
    Representation module;
    DimVec shifts; // multiplicity of P_i[1] per vertex

    DecoratedObject(Representation m, DimVec s);
    explicit DecoratedObject(Representation m);
    static DecoratedObject shifted_projective(const Quiver& q, size_t i, long long mult = 1);

    const Quiver& quiver() const { return module.quiver(); }
    /// dim module - sum shifts_i alpha_i.
    DimVec extended_dim() const;
};

/// The Caldero-Chapoton map.  On a module,
///   X_M = sum_e chi(Gr_e(M)) prod_i u_i^{-<e,a_i> - <a_i, dim M - e>},
/// X_{P_i[1]} = u_i, and X is multiplicative over direct sums.
LaurentPolynomial cc_map(const DecoratedObject& obj);
LaurentPolynomial cc_map(const Representation& m);

/// Rigidity in the cluster category: Ext^1(module, module) = 0 and the
/// module vanishes at every decorated vertex.
bool is_rigid(const DecoratedObject& obj);

/// Denominator theorem instance: delta(X_M) == extended dimension vector.
bool verify_denominator_theorem(const DecoratedObject& obj);

/// Support-cone statement for indecomposables over quivers without multiple
/// arrows: supp(X_M) lies in the cone with apex lambda_M spanned by the
/// columns B alpha_i, and the lambda_M-coefficient is 1.
bool support_cone_check(const DecoratedObject& obj);

/// Exact linear independence over Q of a nonempty family of Laurent
/// polynomials (rank of the coefficient matrix on the union of supports).
bool linear_independence(const std::vector<LaurentPolynomial>& fs);

} // namespace clusterforge

#endif
