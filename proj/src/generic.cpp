#include "clusterforge/generic.hpp"

#include <algorithm>

namespace clusterforge {

GenericEvaluator::GenericEvaluator(Quiver q)
    : q_(std::move(q)), type_(classify_type(q_)), euler_(q_) {
    if (type_.cls == QuiverClass::Wild)
        throw DomainError("generic variables: wild quivers are out of scope");
}

bool GenericEvaluator::is_real_schur(const DimVec& root) const {
    if (euler_.tits_q(root) != 1) return false;
    if (type_.cls == QuiverClass::Dynkin) return true;
    long long def = euler_.euler_form(euler_.delta(), root);
    if (def != 0) return true;
    // regular real roots are Schur exactly when properly below delta
    return leq(root, euler_.delta()) && root != euler_.delta();
}

std::vector<DimVec> GenericEvaluator::schur_roots_below(const DimVec& bound) const {
    std::vector<DimVec> roots;
    for (const auto& [root, kind] : positive_roots_up_to(q_, bound))
        if (kind == RootKind::Real && is_real_schur(root)) roots.push_back(root);
    // big summands first keeps the search short
    std::sort(roots.begin(), roots.end(), [](const DimVec& a, const DimVec& b) {
        long long sa = sum(a), sb = sum(b);
        return sa != sb ? sa > sb : a > b;
    });
    return roots;
}

const Representation& GenericEvaluator::witness(const DimVec& root) {
    auto it = witnesses_.find(root);
    if (it == witnesses_.end())
        it = witnesses_.emplace(root, rigid_indecomposable(q_, root)).first;
    return it->second;
}

bool GenericEvaluator::compatible(const DimVec& a, const DimVec& b) {
    if (a == b) return true; // rigid witnesses have no self-extensions
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = compat_.find(key);
    if (it == compat_.end()) {
        const Representation& wa = witness(key.first);
        const Representation& wb = witness(key.second);
        bool ok = ext1_dimension(wa, wb) == 0 && ext1_dimension(wb, wa) == 0;
        it = compat_.emplace(key, ok).first;
    }
    return it->second;
}

namespace {

// multiset search: decompose target into roots (descending list), pairwise
// compatible; first solution is returned.
bool decompose_into(GenericEvaluator& ev, const std::vector<DimVec>& roots, size_t from,
                    const DimVec& target, std::vector<DimVec>& chosen) {
    if (is_zero(target)) return true;
    for (size_t k = from; k < roots.size(); ++k) {
        const DimVec& r = roots[k];
        if (!leq(r, positive_part(target))) continue;
        bool ok = true;
        for (const DimVec& c : chosen)
            if (!ev.compatible(c, r)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(r);
        if (decompose_into(ev, roots, k, target - r, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

CanonicalDecomposition GenericEvaluator::decompose(const DimVec& d) {
    if (d.size() != q_.num_vertices()) throw DomainError("decompose: bad dimension vector");
    for (long long x : d)
        if (x < 0) throw DomainError("decompose: dimension vector must be nonnegative");
    CanonicalDecomposition out;
    out.input = d;
    if (is_zero(d)) return out;

    long long nmax = 0;
    if (type_.cls == QuiverClass::Affine) {
        const DimVec& delta = euler_.delta();
        nmax = d[0] / delta[0];
        for (size_t i = 1; i < d.size(); ++i) nmax = std::min(nmax, d[i] / delta[i]);
    }
    std::vector<DimVec> all_roots = schur_roots_below(d);
    for (long long n = nmax; n >= 0; --n) {
        DimVec rest = d;
        if (n > 0) rest = d - n * euler_.delta();
        std::vector<DimVec> usable;
        for (const DimVec& r : all_roots) {
            if (!leq(r, rest)) continue;
            // summands next to delta-multiples must be regular rigid
            if (n > 0 && euler_.euler_form(euler_.delta(), r) != 0) continue;
            usable.push_back(r);
        }
        std::vector<DimVec> chosen;
        if (decompose_into(*this, usable, 0, rest, chosen)) {
            out.delta_multiplicity = n;
            std::sort(chosen.begin(), chosen.end());
            out.real_summands = std::move(chosen);
            return out;
        }
    }
    throw InconsistencyError("canonical decomposition not found for " + to_string(d));
}

const LaurentPolynomial& GenericEvaluator::delta_value() {
    if (!delta_value_) {
        Rat lambda = first_homogeneous_lambda(q_);
        delta_value_ = cc_map(homogeneous_regular(q_, lambda).rep);
    }
    return *delta_value_;
}

const LaurentPolynomial& GenericEvaluator::root_value(const DimVec& root) {
    auto it = values_.find(root);
    if (it == values_.end()) it = values_.emplace(root, cc_map(witness(root))).first;
    return it->second;
}

GenericBasisElement GenericEvaluator::at(const DimVec& d) {
    GenericBasisElement out;
    out.d = d;
    CanonicalDecomposition dec = decompose(positive_part(d));
    out.delta_multiplicity = dec.delta_multiplicity;
    LaurentPolynomial value = LaurentPolynomial::constant(q_.labels(), 1);
    if (dec.delta_multiplicity > 0)
        value *= delta_value().pow((unsigned)dec.delta_multiplicity);
    for (const DimVec& r : dec.real_summands) value *= root_value(r);
    LaurentPolynomial::Exponents shift(d.size());
    for (size_t i = 0; i < d.size(); ++i) shift[i] = d[i] < 0 ? -d[i] : 0;
    out.value = value.shifted(shift);
    if (dec.delta_multiplicity > 0) {
        out.kind = GenericKind::ZPowerTimesRigidRegular;
        out.regular_rigid_dims = dec.real_summands;
    } else {
        out.kind = GenericKind::ClusterMonomial;
    }
    return out;
}

CanonicalDecomposition canonical_decomposition(const Quiver& q, const DimVec& d) {
    GenericEvaluator ev(q);
    return ev.decompose(d);
}

GenericBasisElement generic_variable(const Quiver& q, const DimVec& d) {
    GenericEvaluator ev(q);
    return ev.at(d);
}

std::vector<GenericBasisElement> enumerate_generic_basis(const Quiver& q, const DimVec& box) {
    QuiverType t = classify_type(q);
    if (!t.is_affine_A())
        throw DomainError("enumerate_generic_basis: classification needs type A~ tube data");
    if (box.size() != q.num_vertices()) throw DomainError("enumerate_generic_basis: bad box");
    for (long long b : box)
        if (b < 0) throw DomainError("enumerate_generic_basis: box must be nonnegative");
    GenericEvaluator ev(q);
    std::vector<GenericBasisElement> out;
    size_t n = box.size();
    DimVec d(n);
    for (size_t i = 0; i < n; ++i) d[i] = -box[i];
    while (true) {
        out.push_back(ev.at(d));
        size_t k = 0;
        while (k < n && d[k] == box[k]) d[k++] = -box[k];
        if (k == n) break;
        ++d[k];
    }
    return out;
}

std::optional<BasisExpansion> expand_in_generic_basis(GenericEvaluator& eval,
                                                      const LaurentPolynomial& x,
                                                      const DimVec& box) {
    size_t n = box.size();
    std::vector<DimVec> dims;
    std::vector<LaurentPolynomial> cols;
    DimVec d(n, 0);
    while (true) {
        dims.push_back(d);
        cols.push_back(eval.at(d).value);
        size_t k = 0;
        while (k < n && d[k] == box[k]) d[k++] = 0;
        if (k == n) break;
        ++d[k];
    }

    std::map<LaurentPolynomial::Exponents, size_t> rows;
    for (const auto& c : cols)
        for (const auto& [e, v] : c.terms()) {
            (void)v;
            rows.emplace(e, rows.size());
        }
    for (const auto& [e, v] : x.terms()) {
        (void)v;
        rows.emplace(e, rows.size());
    }

    const uint64_t p = 2305843009213693951ull; // 2^61 - 1
    PrimeFieldMatrix sys(p, rows.size(), cols.size() + 1);
    auto red = [&](const Int& v) {
        Int r = v % Int(p);
        if (r < 0) r += Int(p);
        return r.convert_to<uint64_t>();
    };
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [e, v] : cols[j].terms()) sys.set(rows[e], j, red(v));
    for (const auto& [e, v] : x.terms()) sys.set(rows[e], cols.size(), red(v));

    // eliminate; read one solution of the overdetermined system
    size_t m = rows.size(), nc = cols.size();
    std::vector<std::vector<uint64_t>> a(m, std::vector<uint64_t>(nc + 1));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= nc; ++j) a[i][j] = sys.at(i, j);
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col <= nc && row < m; ++col) {
        size_t sel = row;
        while (sel < m && a[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[row]);
        uint64_t inv = mod_inverse(a[row][col], p);
        for (size_t j = col; j <= nc; ++j)
            a[row][j] = (uint64_t)((unsigned __int128)a[row][j] * inv % p);
        for (size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            uint64_t f = a[i][col];
            if (f == 0) continue;
            for (size_t j = col; j <= nc; ++j) {
                uint64_t v = (uint64_t)((unsigned __int128)f * a[row][j] % p);
                a[i][j] = (a[i][j] + p - v) % p;
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (!pivot_col.empty() && pivot_col.back() == nc) return std::nullopt; // inconsistent
    std::vector<Int> coeff(nc, 0);
    for (size_t r = 0; r < pivot_col.size(); ++r) {
        uint64_t v = a[r][nc];
        coeff[pivot_col[r]] = v > p / 2 ? Int(v) - Int(p) : Int(v); // symmetric lift
    }

    // exact verification over Z
    LaurentPolynomial check(x.variables());
    BasisExpansion out;
    for (size_t j = 0; j < nc; ++j) {
        if (coeff[j] == 0) continue;
        check += LaurentPolynomial::constant(x.variables(), coeff[j]) * cols[j];
        out.terms.emplace_back(coeff[j], dims[j]);
    }
    if (check != x) return std::nullopt;
    return out;
}

} // namespace clusterforge
