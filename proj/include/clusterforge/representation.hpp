#ifndef CLUSTERFORGE_REPRESENTATION_HPP
#define CLUSTERFORGE_REPRESENTATION_HPP

#include "clusterforge/linalg.hpp"
#include "clusterforge/quiver.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace clusterforge {

/// Coefficient field of a representation: the rationals, or a prime field
/// (entries must then be integers, interpreted mod p).
struct Field {
    enum Kind { Rationals, PrimeField } kind = Rationals;
    uint64_t p = 0;

    static Field rationals() { return {Rationals, 0}; }
    static Field prime_field(uint64_t p) { return {PrimeField, p}; }
    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
};

/// A finite-dimensional representation: one vector space per vertex, one
/// matrix per arrow (rows = dim target, cols = dim source).
class Representation {
public:
    Representation() = default;
    Representation(Quiver quiver, DimVec dims, std::vector<RationalMatrix> maps,
                   Field field = Field::rationals());

    static Representation zero(const Quiver& q);
    static Representation simple(const Quiver& q, size_t vertex);

    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    const DimVec& dims() const { return dims_; }
    const RationalMatrix& map(size_t arrow) const { return maps_[arrow]; }
    long long total_dim() const { return sum(dims_); }
    bool is_zero() const { return total_dim() == 0; }
    bool is_thin() const;

private:
    Quiver quiver_;
    Field field_;
    DimVec dims_;
    std::vector<RationalMatrix> maps_;
};

Representation direct_sum(const Representation& a, const Representation& b);

/// dim Hom(m, n): solution space of the intertwining equations
/// f_{t(a)} m(a) = n(a) f_{s(a)}.
long long hom_dimension(const Representation& m, const Representation& n);
/// dim Ext^1(m, n) = hom - <dim m, dim n> (hereditary).
long long ext1_dimension(const Representation& m, const Representation& n);
/// dim End; equals 1 iff the representation is a brick.
inline long long end_dimension(const Representation& m) { return hom_dimension(m, m); }

/// Thin representation on the (connected) support of a 0/1 vector: identity
/// on every arrow inside the support except the designated one.
Representation thin_indecomposable(const Quiver& q, const DimVec& d,
                                   std::optional<std::pair<size_t, Rat>> special = {});

/// The unique rigid indecomposable of a real Schur root, produced by
/// deterministic sampling in rep(Q, root) and certified by End = k.
Representation rigid_indecomposable(const Quiver& q, const DimVec& root);
std::optional<Representation> try_rigid_indecomposable(const Quiver& q, const DimVec& root,
                                                       int tries = 60);

/// Euler characteristics of the quiver Grassmannians of a module.
struct GrassmannianProfile {
    DimVec dims;
    std::map<DimVec, Int> table; // chi for every 0 <= e <= dims
};

/// chi(Gr_e(M)) for every subdimension vector at once.  Thin modules are
/// enumerated directly; otherwise F_q-points are counted over enough primes
/// to interpolate the counting polynomial, which is evaluated at q = 1.
GrassmannianProfile grassmannian_profile(const Representation& m);

/// chi(Gr_e(M)); throws DomainError when e is out of range and
/// InconsistencyError when point counts are not polynomial in q.
Int grassmannian_euler_char(const Representation& m, const DimVec& e);

/// Point count |Gr_e(M)(F_p)| for every e at a single prime (exposed for
/// cross-checks; requires p to avoid every entry denominator).
std::map<DimVec, Int> grassmannian_point_counts(const Representation& m, uint64_t p);

/// Parallelism cap honoring CLUSTERFORGE_THREADS (>= 1).
unsigned worker_count();

} // namespace clusterforge

#endif
