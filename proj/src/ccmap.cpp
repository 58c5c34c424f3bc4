#include "clusterforge/ccmap.hpp"

#include <algorithm>

namespace clusterforge {

DecoratedObject::DecoratedObject(Representation m, DimVec s)
    : module(std::move(m)), shifts(std::move(s)) {
    if (shifts.size() != module.quiver().num_vertices())
        throw DomainError("decorated object: shift vector length mismatch");
    for (long long x : shifts)
        if (x < 0) throw DomainError("decorated object: negative shift multiplicity");
}

DecoratedObject::DecoratedObject(Representation m)
    : module(std::move(m)), shifts(module.quiver().num_vertices(), 0) {}

DecoratedObject DecoratedObject::shifted_projective(const Quiver& q, size_t i, long long mult) {
    DimVec s(q.num_vertices(), 0);
    s[i] = mult;
    return DecoratedObject(Representation::zero(q), std::move(s));
}

DimVec DecoratedObject::extended_dim() const {
    DimVec d = module.dims();
    for (size_t i = 0; i < d.size(); ++i) d[i] -= shifts[i];
    return d;
}

LaurentPolynomial cc_map(const Representation& m) {
    const Quiver& q = m.quiver();
    EulerData ed(q);
    size_t n = q.num_vertices();
    GrassmannianProfile prof = grassmannian_profile(m);
    LaurentPolynomial x(q.labels());
    LaurentPolynomial::Exponents expo(n);
    for (const auto& [e, chi] : prof.table) {
        DimVec rest = m.dims() - e;
        for (size_t i = 0; i < n; ++i) {
            DimVec alpha = unit_vector(n, i);
            expo[i] = -ed.euler_form(e, alpha) - ed.euler_form(alpha, rest);
        }
        x.add_term(expo, chi);
    }
    return x;
}

LaurentPolynomial cc_map(const DecoratedObject& obj) {
    LaurentPolynomial x = cc_map(obj.module);
    LaurentPolynomial::Exponents shift(obj.shifts.begin(), obj.shifts.end());
    return x.shifted(shift);
}

bool is_rigid(const DecoratedObject& obj) {
    for (size_t i = 0; i < obj.shifts.size(); ++i)
        if (obj.shifts[i] > 0 && obj.module.dims()[i] != 0) return false;
    if (obj.module.is_zero()) return true;
    return ext1_dimension(obj.module, obj.module) == 0;
}

bool verify_denominator_theorem(const DecoratedObject& obj) {
    LaurentPolynomial x = cc_map(obj);
    return denominator_vector(x) == obj.extended_dim();
}

bool support_cone_check(const DecoratedObject& obj) {
    const Quiver& q = obj.quiver();
    if (q.has_multiple_arrows())
        throw DomainError("support_cone_check: quiver has multiple arrows");
    EulerData ed(q);
    size_t n = q.num_vertices();

    // dim P_M of the projective underlying the shifted part
    DimVec dim_pm(n, 0);
    for (size_t i = 0; i < n; ++i)
        if (obj.shifts[i] > 0) dim_pm = dim_pm + obj.shifts[i] * ed.dim_projective(i);

    DimVec lambda(n);
    for (size_t i = 0; i < n; ++i) {
        DimVec alpha = unit_vector(n, i);
        lambda[i] = -ed.euler_form(alpha, obj.module.dims()) + ed.euler_form(dim_pm, alpha);
    }

    LaurentPolynomial x = cc_map(obj);
    LaurentPolynomial::Exponents apex(lambda.begin(), lambda.end());
    if (x.coefficient(apex) != 1) return false;

    IntMatrix b = q.incidence_matrix();
    RationalMatrix gens(n, n); // columns B alpha_i
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gens.at(i, j) = Rat(b[i][j]);
    for (const auto& [e, c] : x.terms()) {
        (void)c;
        std::vector<Rat> rhs(n);
        for (size_t i = 0; i < n; ++i) rhs[i] = Rat(e[i] - lambda[i]);
        if (!nonnegative_solution_exists(gens, rhs)) return false;
    }
    return true;
}

bool linear_independence(const std::vector<LaurentPolynomial>& fs) {
    if (fs.empty()) throw DomainError("linear_independence: empty family");
    for (const auto& f : fs)
        if (f.variables() != fs[0].variables())
            throw DomainError("linear_independence: mixed variable lists");
    std::map<LaurentPolynomial::Exponents, size_t> columns;
    for (const auto& f : fs)
        for (const auto& [e, c] : f.terms()) {
            (void)c;
            columns.emplace(e, columns.size());
        }
    std::vector<std::vector<Int>> rows(fs.size(), std::vector<Int>(columns.size(), 0));
    for (size_t i = 0; i < fs.size(); ++i)
        for (const auto& [e, c] : fs[i].terms()) rows[i][columns[e]] = c;
    // Full rank mod a large prime certifies rank over Q; otherwise fall back
    // to exact fraction-free elimination.
    const uint64_t p = 2305843009213693951ull; // 2^61 - 1
    if (integer_matrix_rank_mod_p(rows, p) == fs.size()) return true;
    return integer_matrix_rank_exact(rows) == fs.size();
}

} // namespace clusterforge
