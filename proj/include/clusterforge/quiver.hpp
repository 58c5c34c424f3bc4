#ifndef CLUSTERFORGE_QUIVER_HPP
#define CLUSTERFORGE_QUIVER_HPP

#include "clusterforge/errors.hpp"
#include "clusterforge/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clusterforge {

using IntMatrix = std::vector<std::vector<long long>>;

/// Finite quiver: ordered vertex labels and a list of arrows given as
/// (source, target) pairs of 0-based vertex indices.  Arrow order is
/// irrelevant to the semantics but preserved for display.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<int> labels, std::vector<std::pair<int, int>> arrows);
    /// Vertices labelled 1..n.
    static Quiver from_arrows(int n, std::vector<std::pair<int, int>> arrows_by_label);

    size_t num_vertices() const { return labels_.size(); }
    size_t num_arrows() const { return arrows_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    int index_of_label(int label) const;

    bool is_connected() const;
    bool is_acyclic() const;
    bool is_sink(size_t i) const;
    bool is_source(size_t i) const;
    std::vector<size_t> sinks() const;
    std::vector<size_t> sources() const;

    size_t arrows_between(size_t i, size_t j) const; // directed i -> j
    bool has_multiple_arrows() const;

    /// Matrix of the Euler form, <a,b> = a^T E b.
    IntMatrix euler_matrix() const;
    /// Antisymmetric incidence matrix, b_ij = #(i->j) - #(j->i).
    IntMatrix incidence_matrix() const;

    /// Canonical key (sorted arrows) for dedup in reflection-class search.
    std::string canonical_key() const;

    bool operator==(const Quiver& o) const {
        return labels_ == o.labels_ && arrows_ == o.arrows_;
    }

private:
    std::vector<int> labels_;
    std::vector<std::pair<int, int>> arrows_;
};

enum class QuiverClass { Dynkin, Affine, Wild };

struct QuiverType {
    QuiverClass cls = QuiverClass::Wild;
    char family = 'A'; // 'A', 'D' or 'E'
    int n = 0;         // subscript for Dynkin X_n / affine D~_n, E~_n
    int r = 0, s = 0;  // orientation counts for affine A~(r,s), r >= s

    bool is_affine_A() const { return cls == QuiverClass::Affine && family == 'A'; }
    std::string str() const;
};

/// Underlying-diagram classification.  Requires a connected acyclic quiver.
QuiverType classify_type(const Quiver& q);

/*
  Root-theoretic data of an acyclic quiver: Euler matrix, Coxeter
  transformation (dim tau M = c . dim M), defect covector and, in affine
  type, the minimal imaginary root delta.
*/
class EulerData {
public:
    explicit EulerData(const Quiver& q);

    const IntMatrix& euler_matrix() const { return euler_; }
    const IntMatrix& coxeter_matrix() const { return coxeter_; }
    const IntMatrix& coxeter_inverse() const { return coxeter_inv_; }

    long long euler_form(const DimVec& a, const DimVec& b) const;
    /// Quadratic Tits form q(a) = <a,a>; roots are q = 1 (real), q = 0 (imaginary).
    long long tits_q(const DimVec& a) const { return euler_form(a, a); }
    /// Symmetrized bilinear form <a,b> + <b,a>.
    long long symmetric_form(const DimVec& a, const DimVec& b) const;

    DimVec coxeter(const DimVec& a) const;         // dim tau
    DimVec coxeter_inverse_apply(const DimVec& a) const; // dim tau^{-1}
    DimVec simple_reflection(size_t i, const DimVec& a) const;

    DimVec dim_projective(size_t i) const;
    DimVec dim_injective(size_t i) const;

    /// Defect covector in affine type; throws otherwise.
    long long defect(const DimVec& a) const;
    const DimVec& delta() const;
    bool is_affine() const { return !delta_.empty(); }

private:
    size_t n_;
    IntMatrix euler_, euler_inv_, coxeter_, coxeter_inv_;
    DimVec delta_; // empty when not affine
};

/// Minimal imaginary root of an affine quiver (positive, sincere).
DimVec minimal_imaginary_root(const Quiver& q);

enum class RootKind { Real, Imaginary };

/// All positive roots <= bound of a Dynkin or affine quiver, by box scan of
/// the Tits form.  Throws on wild type.
std::vector<std::pair<DimVec, RootKind>> positive_roots_up_to(const Quiver& q,
                                                              const DimVec& bound);

/// sigma_i(q): reverse every arrow at a sink or source i.
Quiver reflect_quiver(const Quiver& q, size_t i);

/// The piecewise-linear involution sigma_i on Z^{Q_0} at a sink i:
/// s_i([d]_+) + [d]_- - 2 min(d_i,0) alpha_i.  Requires Dynkin or affine
/// type (the canonical decomposition of the positive part must exist).
DimVec sigma_on_dimension(const Quiver& q, size_t i, const DimVec& d);

/// Integer covector eps with eps(B alpha_i) < 0 for all i, found by exact
/// Fourier-Motzkin elimination; nullopt when the system is infeasible.
std::optional<DimVec> find_grading_form(const Quiver& q);

/// All quivers reachable from q by at most max_depth sink/source
/// reflections (q itself included), deduplicated.
std::vector<Quiver> reflection_class(const Quiver& q, size_t max_depth);

} // namespace clusterforge

#endif
