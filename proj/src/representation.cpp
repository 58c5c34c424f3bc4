#include "clusterforge/representation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <future>
#include <random>
#include <thread>

namespace clusterforge {

Representation::Representation(Quiver quiver, DimVec dims, std::vector<RationalMatrix> maps,
                               Field field)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != quiver_.num_vertices())
        throw DomainError("representation: dimension vector length mismatch");
    for (long long d : dims_)
        if (d < 0) throw DomainError("representation: negative dimension");
    if (maps_.size() != quiver_.num_arrows())
        throw DomainError("representation: one matrix per arrow required");
    for (size_t a = 0; a < maps_.size(); ++a) {
        auto [s, t] = quiver_.arrows()[a];
        if (maps_[a].rows() != (size_t)dims_[t] || maps_[a].cols() != (size_t)dims_[s])
            throw DomainError("representation: matrix shape mismatch");
    }
    if (field_.kind == Field::PrimeField) {
        if (field_.p < 2) throw DomainError("representation: invalid prime modulus");
        for (const auto& m : maps_)
            for (size_t i = 0; i < m.rows(); ++i)
                for (size_t j = 0; j < m.cols(); ++j)
                    if (denominator(m.at(i, j)) != 1)
                        throw DomainError("representation over F_p: entries must be integers");
    }
}

Representation Representation::zero(const Quiver& q) {
    DimVec dims(q.num_vertices(), 0);
    std::vector<RationalMatrix> maps(q.num_arrows());
    for (size_t a = 0; a < q.num_arrows(); ++a) maps[a] = RationalMatrix(0, 0);
    return Representation(q, dims, std::move(maps));
}

Representation Representation::simple(const Quiver& q, size_t vertex) {
    DimVec dims(q.num_vertices(), 0);
    dims[vertex] = 1;
    std::vector<RationalMatrix> maps;
    for (auto [s, t] : q.arrows()) maps.emplace_back((size_t)dims[t], (size_t)dims[s]);
    return Representation(q, dims, std::move(maps));
}

bool Representation::is_thin() const {
    return std::all_of(dims_.begin(), dims_.end(), [](long long d) { return d <= 1; });
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(a.quiver() == b.quiver()) || !(a.field() == b.field()))
        throw DomainError("direct_sum: incompatible representations");
    DimVec dims = a.dims() + b.dims();
    std::vector<RationalMatrix> maps;
    for (size_t k = 0; k < a.quiver().num_arrows(); ++k) {
        auto [s, t] = a.quiver().arrows()[k];
        RationalMatrix m((size_t)dims[t], (size_t)dims[s]);
        const auto& ma = a.map(k);
        const auto& mb = b.map(k);
        for (size_t i = 0; i < ma.rows(); ++i)
            for (size_t j = 0; j < ma.cols(); ++j) m.at(i, j) = ma.at(i, j);
        for (size_t i = 0; i < mb.rows(); ++i)
            for (size_t j = 0; j < mb.cols(); ++j)
                m.at(ma.rows() + i, ma.cols() + j) = mb.at(i, j);
        maps.push_back(std::move(m));
    }
    return Representation(a.quiver(), dims, std::move(maps), a.field());
}

namespace {

// Index of the unknown f_v[r][c] inside the stacked intertwiner system.
struct HomIndexer {
    std::vector<size_t> base;
    size_t total = 0;
    HomIndexer(const DimVec& dm, const DimVec& dn) {
        base.resize(dm.size());
        for (size_t v = 0; v < dm.size(); ++v) {
            base[v] = total;
            total += (size_t)(dn[v] * dm[v]);
        }
    }
    size_t operator()(size_t v, size_t r, size_t c, const DimVec& dn) const {
        return base[v] + c * (size_t)dn[v] + r;
    }
};

} // namespace

long long hom_dimension(const Representation& m, const Representation& n) {
    if (!(m.quiver() == n.quiver()) || !(m.field() == n.field()))
        throw DomainError("hom_dimension: quiver or field mismatch");
    const Quiver& q = m.quiver();
    const DimVec& dm = m.dims();
    const DimVec& dn = n.dims();
    HomIndexer idx(dm, dn);
    if (idx.total == 0) return 0;

    size_t num_eqs = 0;
    for (auto [s, t] : q.arrows()) num_eqs += (size_t)(dn[t] * dm[s]);

    if (m.field().kind == Field::Rationals) {
        RationalMatrix sys(std::max<size_t>(num_eqs, 1), idx.total);
        size_t eq = 0;
        for (size_t a = 0; a < q.num_arrows(); ++a) {
            auto [s, t] = q.arrows()[a];
            const RationalMatrix& Ma = m.map(a);
            const RationalMatrix& Na = n.map(a);
            for (long long r = 0; r < dn[t]; ++r)
                for (long long c = 0; c < dm[s]; ++c) {
                    for (long long k = 0; k < dm[t]; ++k)
                        sys.at(eq, idx(t, (size_t)r, (size_t)k, dn)) += Ma.at((size_t)k, (size_t)c);
                    for (long long k = 0; k < dn[s]; ++k)
                        sys.at(eq, idx(s, (size_t)k, (size_t)c, dn)) -= Na.at((size_t)r, (size_t)k);
                    ++eq;
                }
        }
        return (long long)idx.total - (long long)sys.rank();
    }

    uint64_t p = m.field().p;
    PrimeFieldMatrix sys(p, std::max<size_t>(num_eqs, 1), idx.total);
    auto red = [&](const Rat& x) -> uint64_t {
        Int v = numerator(x) % Int(p);
        if (v < 0) v += Int(p);
        return v.convert_to<uint64_t>();
    };
    size_t eq = 0;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        auto [s, t] = q.arrows()[a];
        for (long long r = 0; r < dn[t]; ++r)
            for (long long c = 0; c < dm[s]; ++c) {
                for (long long k = 0; k < dm[t]; ++k) {
                    size_t col = idx(t, (size_t)r, (size_t)k, dn);
                    sys.set(eq, col, (sys.at(eq, col) + red(m.map(a).at((size_t)k, (size_t)c))) % p);
                }
                for (long long k = 0; k < dn[s]; ++k) {
                    size_t col = idx(s, (size_t)k, (size_t)c, dn);
                    sys.set(eq, col, (sys.at(eq, col) + p - red(n.map(a).at((size_t)r, (size_t)k))) % p);
                }
                ++eq;
            }
    }
    return (long long)idx.total - (long long)sys.rank();
}

long long ext1_dimension(const Representation& m, const Representation& n) {
    EulerData ed(m.quiver());
    long long e = hom_dimension(m, n) - ed.euler_form(m.dims(), n.dims());
    if (e < 0) throw InconsistencyError("negative Ext dimension");
    return e;
}

Representation thin_indecomposable(const Quiver& q, const DimVec& d,
                                   std::optional<std::pair<size_t, Rat>> special) {
    if (d.size() != q.num_vertices()) throw DomainError("thin_indecomposable: bad vector");
    for (long long x : d)
        if (x != 0 && x != 1) throw DomainError("thin_indecomposable: entries must be 0/1");
    // connectivity of the support
    std::vector<size_t> supp;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] == 1) supp.push_back(i);
    if (supp.empty()) throw DomainError("thin_indecomposable: empty support");
    std::vector<bool> seen(q.num_vertices(), false);
    std::deque<size_t> work{supp[0]};
    seen[supp[0]] = true;
    while (!work.empty()) {
        size_t v = work.front();
        work.pop_front();
        for (auto [s, t] : q.arrows()) {
            if (d[s] == 0 || d[t] == 0) continue;
            size_t o = q.num_vertices();
            if ((size_t)s == v) o = t;
            if ((size_t)t == v) o = s;
            if (o < q.num_vertices() && !seen[o]) {
                seen[o] = true;
                work.push_back(o);
            }
        }
    }
    for (size_t v : supp)
        if (!seen[v]) throw DomainError("thin_indecomposable: support not connected");

    std::vector<RationalMatrix> maps;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        auto [s, t] = q.arrows()[a];
        RationalMatrix m((size_t)d[t], (size_t)d[s]);
        if (d[s] == 1 && d[t] == 1) {
            Rat v = 1;
            if (special && special->first == a) v = special->second;
            m.at(0, 0) = v;
        }
        maps.push_back(std::move(m));
    }
    return Representation(q, d, std::move(maps));
}

std::optional<Representation> try_rigid_indecomposable(const Quiver& q, const DimVec& root,
                                                       int tries) {
    EulerData ed(q);
    if (ed.tits_q(root) != 1) throw DomainError("rigid_indecomposable: not a real root");
    std::seed_seq seed(root.begin(), root.end());
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < tries; ++attempt) {
        long long range = 2 + attempt / 10;
        std::uniform_int_distribution<long long> dist(-range, range);
        std::vector<RationalMatrix> maps;
        for (size_t a = 0; a < q.num_arrows(); ++a) {
            auto [s, t] = q.arrows()[a];
            RationalMatrix m((size_t)root[t], (size_t)root[s]);
            for (size_t i = 0; i < m.rows(); ++i)
                for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(dist(rng));
            maps.push_back(std::move(m));
        }
        Representation rep(q, root, std::move(maps));
        // A brick of a real root is automatically rigid: End - Ext = <d,d> = 1.
        if (end_dimension(rep) == 1) return rep;
    }
    return std::nullopt;
}

Representation rigid_indecomposable(const Quiver& q, const DimVec& root) {
    auto rep = try_rigid_indecomposable(q, root);
    if (!rep)
        throw InconsistencyError("rigid_indecomposable: no rigid representation found for " +
                                 to_string(root) + " (not a Schur root?)");
    return *rep;
}

unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CLUSTERFORGE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < 1024) hw = (unsigned)v;
    }
    return hw;
}

// ---------------------------------------------------------------------------
// F_p point counting of quiver Grassmannians.
//
// Subspaces are row spaces of RREF matrices.  One designated sink t and one
// designated source s are never enumerated: admissible subspaces at t form
// a "contains W" interval counted by a Gaussian binomial, and subspaces at
// s are counted inside Y stratified by their intersection with the kernel
// of the composite map into F^{d_t}/W.  Everything else is enumerated.
// ---------------------------------------------------------------------------

namespace {

struct FpRows {
    size_t r = 0, c = 0;
    std::vector<uint64_t> a; // row-major

    FpRows() = default;
    FpRows(size_t rows, size_t cols) : r(rows), c(cols), a(rows * cols, 0) {}
    uint64_t& at(size_t i, size_t j) { return a[i * c + j]; }
    uint64_t at(size_t i, size_t j) const { return a[i * c + j]; }
};

uint64_t mulmod(uint64_t x, uint64_t y, uint64_t p) {
    return (uint64_t)((unsigned __int128)x * y % p);
}

// In-place Gauss-Jordan; drops zero rows; returns pivot columns.
std::vector<size_t> rref(FpRows& m, uint64_t p) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.c && row < m.r; ++col) {
        size_t sel = row;
        while (sel < m.r && m.at(sel, col) == 0) ++sel;
        if (sel == m.r) continue;
        if (sel != row)
            for (size_t j = 0; j < m.c; ++j) std::swap(m.at(sel, j), m.at(row, j));
        uint64_t inv = mod_inverse(m.at(row, col), p);
        for (size_t j = col; j < m.c; ++j) m.at(row, j) = mulmod(m.at(row, j), inv, p);
        for (size_t i = 0; i < m.r; ++i) {
            if (i == row) continue;
            uint64_t f = m.at(i, col);
            if (f == 0) continue;
            for (size_t j = col; j < m.c; ++j)
                m.at(i, j) = (m.at(i, j) + p - mulmod(f, m.at(row, j), p)) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    m.r = row;
    m.a.resize(m.r * m.c);
    return pivots;
}

// rows(U) * T^t : images of the basis vectors under x -> Tx.
FpRows image_rows(const FpRows& u, const FpRows& t, uint64_t p) {
    FpRows out(u.r, t.r);
    for (size_t i = 0; i < u.r; ++i)
        for (size_t j = 0; j < t.r; ++j) {
            unsigned __int128 s = 0;
            for (size_t k = 0; k < u.c; ++k) s += (unsigned __int128)u.at(i, k) * t.at(j, k) % p;
            out.at(i, j) = (uint64_t)(s % p);
        }
    return out;
}

// Is every row of y inside the row space of the RREF matrix u?
bool contained_in(const FpRows& y, const FpRows& u, const std::vector<size_t>& pivots,
                  uint64_t p) {
    std::vector<uint64_t> row(y.c);
    for (size_t i = 0; i < y.r; ++i) {
        for (size_t j = 0; j < y.c; ++j) row[j] = y.at(i, j);
        for (size_t k = 0; k < pivots.size(); ++k) {
            uint64_t f = row[pivots[k]];
            if (f == 0) continue;
            for (size_t j = 0; j < y.c; ++j)
                row[j] = (row[j] + p - mulmod(f, u.at(k, j), p)) % p;
        }
        for (uint64_t v : row)
            if (v != 0) return false;
    }
    return true;
}

// Basis rows of { x : m x^T = 0 }.
FpRows nullspace_rows(FpRows m, uint64_t p) {
    std::vector<size_t> pivots = rref(m, p);
    std::vector<bool> is_pivot(m.c, false);
    for (size_t c : pivots) is_pivot[c] = true;
    FpRows out(m.c - pivots.size(), m.c);
    size_t row = 0;
    for (size_t free = 0; free < m.c; ++free) {
        if (is_pivot[free]) continue;
        out.at(row, free) = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            out.at(row, pivots[k]) = (p - m.at(k, free)) % p;
        ++row;
    }
    return out;
}

FpRows stack_rows(const FpRows& a, const FpRows& b) {
    FpRows out(a.r + b.r, a.c);
    std::copy(a.a.begin(), a.a.end(), out.a.begin());
    std::copy(b.a.begin(), b.a.end(), out.a.begin() + (long)(a.r * a.c));
    return out;
}

// (U^perp + V^perp)^perp
FpRows intersect_rows(const FpRows& u, const FpRows& v, uint64_t p) {
    FpRows nu = nullspace_rows(u, p);
    FpRows nv = nullspace_rows(v, p);
    FpRows both = stack_rows(nu, nv);
    return nullspace_rows(both, p);
}

// { x : T x in rowspace(u) }
FpRows preimage_rows(const FpRows& t, const FpRows& u, uint64_t p) {
    FpRows ann = nullspace_rows(u, p); // (d_t - k) x d_t
    FpRows constr(ann.r, t.c);
    for (size_t i = 0; i < ann.r; ++i)
        for (size_t j = 0; j < t.c; ++j) {
            unsigned __int128 s = 0;
            for (size_t k = 0; k < t.r; ++k) s += (unsigned __int128)ann.at(i, k) * t.at(k, j) % p;
            constr.at(i, j) = (uint64_t)(s % p);
        }
    return nullspace_rows(constr, p);
}

FpRows full_space(size_t d) {
    FpRows out(d, d);
    for (size_t i = 0; i < d; ++i) out.at(i, i) = 1;
    return out;
}

// Enumerate the RREF bases of all e-dimensional subspaces of F_p^d.
template <typename F>
void for_each_subspace(size_t d, size_t e, uint64_t p, F&& fn) {
    if (e > d) return;
    if (e == 0) {
        FpRows empty(0, d);
        fn(empty, std::vector<size_t>{});
        return;
    }
    std::vector<size_t> piv(e);
    for (size_t i = 0; i < e; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_pivot(d, false);
        for (size_t c : piv) is_pivot[c] = true;
        std::vector<std::pair<size_t, size_t>> free_pos;
        for (size_t i = 0; i < e; ++i)
            for (size_t j = piv[i] + 1; j < d; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        FpRows m(e, d);
        for (size_t i = 0; i < e; ++i) m.at(i, piv[i]) = 1;
        std::vector<uint64_t> vals(free_pos.size(), 0);
        while (true) {
            for (size_t k = 0; k < free_pos.size(); ++k)
                m.at(free_pos[k].first, free_pos[k].second) = vals[k];
            fn(m, piv);
            size_t k = 0;
            while (k < vals.size() && vals[k] == p - 1) vals[k++] = 0;
            if (k == vals.size()) break;
            ++vals[k];
        }
        // next pivot combination
        size_t i = e;
        while (i-- > 0) {
            size_t limit = d - (e - i);
            if (piv[i] < limit) {
                ++piv[i];
                for (size_t j = i + 1; j < e; ++j) piv[j] = piv[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

struct SweepPlan {
    size_t t = SIZE_MAX;            // closed sink
    size_t s = SIZE_MAX;            // closed source (SIZE_MAX: none)
    std::vector<size_t> enumerated; // remaining vertices, in index order
    long long arrow_s_to_t = -1;    // index of the single s->t arrow, or -1
};

SweepPlan plan_sweep(const Quiver& q, const DimVec& dims) {
    SweepPlan plan;
    long long best = -1;
    for (size_t v : q.sinks())
        if (dims[v] > best) {
            best = dims[v];
            plan.t = v;
        }
    if (plan.t == SIZE_MAX) throw DomainError("point count: acyclic quiver expected");
    best = -1;
    for (size_t v : q.sources()) {
        if (v == plan.t) continue;
        if (q.arrows_between(v, plan.t) > 1) continue;
        if (dims[v] > best) {
            best = dims[v];
            plan.s = v;
        }
    }
    if (plan.s != SIZE_MAX) {
        for (size_t a = 0; a < q.num_arrows(); ++a)
            if ((size_t)q.arrows()[a].first == plan.s && (size_t)q.arrows()[a].second == plan.t)
                plan.arrow_s_to_t = (long long)a;
    }
    for (size_t v = 0; v < q.num_vertices(); ++v)
        if (v != plan.t && v != plan.s) plan.enumerated.push_back(v);
    return plan;
}

struct GaussTables {
    std::vector<std::vector<Int>> binom; // [n][k]
    std::vector<Int> qpow;

    GaussTables(size_t maxn, uint64_t p) {
        binom.assign(maxn + 1, std::vector<Int>(maxn + 1, 0));
        for (size_t n = 0; n <= maxn; ++n) {
            binom[n][0] = 1;
            for (size_t k = 1; k <= n; ++k)
                binom[n][k] = (k < n ? binom[n - 1][k - 1] + Int(p) * binom[n - 1][k]
                                     : Int(1) * binom[n - 1][k - 1]);
        }
        qpow.resize(maxn * maxn + 1);
        qpow[0] = 1;
        for (size_t i = 1; i < qpow.size(); ++i) qpow[i] = qpow[i - 1] * Int(p);
    }
};

} // namespace

std::map<DimVec, Int> grassmannian_point_counts(const Representation& m, uint64_t p) {
    if (m.field().kind != Field::Rationals)
        throw DomainError("point counts: representation must be over the rationals");
    const Quiver& q = m.quiver();
    const DimVec& d = m.dims();
    size_t n = q.num_vertices();

    // Reduce the matrices mod p; p must avoid every denominator.
    std::vector<FpRows> maps(q.num_arrows());
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        auto [s, t] = q.arrows()[a];
        FpRows mm((size_t)d[t], (size_t)d[s]);
        for (size_t i = 0; i < mm.r; ++i)
            for (size_t j = 0; j < mm.c; ++j) {
                const Rat& x = m.map(a).at(i, j);
                Int den = denominator(x) % Int(p);
                if (den == 0) throw DomainError("point counts: prime divides a denominator");
                Int num = numerator(x) % Int(p);
                if (num < 0) num += Int(p);
                mm.at(i, j) = mulmod(num.convert_to<uint64_t>(),
                                     mod_inverse(den.convert_to<uint64_t>(), p), p);
            }
        maps[a] = std::move(mm);
    }

    SweepPlan plan = plan_sweep(q, d);
    size_t ds = plan.s == SIZE_MAX ? 0 : (size_t)d[plan.s];
    size_t dt = (size_t)d[plan.t];
    size_t maxd = 0;
    for (long long x : d) maxd = std::max(maxd, (size_t)x);
    GaussTables tables(std::max<size_t>(maxd, 1), p);

    // Arrows to check inline (both endpoints enumerated); keyed by the later
    // endpoint in enumeration order.
    std::vector<size_t> order_pos(n, SIZE_MAX);
    for (size_t k = 0; k < plan.enumerated.size(); ++k) order_pos[plan.enumerated[k]] = k;
    std::vector<std::vector<size_t>> checks(plan.enumerated.size());
    std::vector<std::vector<size_t>> into_t(plan.enumerated.size());   // arrows v->t
    std::vector<std::vector<size_t>> from_s(plan.enumerated.size());   // arrows s->v
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        auto [as, at] = q.arrows()[a];
        size_t ps = order_pos[as], pt = order_pos[at];
        if (ps != SIZE_MAX && pt != SIZE_MAX)
            checks[std::max(ps, pt)].push_back(a);
        else if (ps != SIZE_MAX && (size_t)at == plan.t)
            into_t[ps].push_back(a);
        else if (pt != SIZE_MAX && plan.s != SIZE_MAX && (size_t)as == plan.s)
            from_s[pt].push_back(a);
    }

    // signature accumulator: enumerated-dims key -> flat (y, w, kappa) counts
    size_t sig_size = (ds + 1) * (dt + 1) * (ds + 1);
    std::map<std::vector<size_t>, std::vector<uint64_t>> acc;

    struct Chosen {
        FpRows rows;
        std::vector<size_t> pivots;
    };
    std::vector<Chosen> chosen(plan.enumerated.size());
    std::vector<size_t> dims_key(plan.enumerated.size(), 0);

    auto leaf = [&]() {
        FpRows w(0, dt);
        for (size_t k = 0; k < plan.enumerated.size(); ++k)
            for (size_t a : into_t[k]) w = stack_rows(w, image_rows(chosen[k].rows, maps[a], p));
        rref(w, p);
        size_t wd = w.r;

        size_t y = 0, kappa = 0;
        if (plan.s != SIZE_MAX) {
            FpRows yrows = full_space(ds);
            for (size_t k = 0; k < plan.enumerated.size(); ++k)
                for (size_t a : from_s[k]) {
                    FpRows pre = preimage_rows(maps[a], chosen[k].rows, p);
                    yrows = intersect_rows(yrows, pre, p);
                }
            rref(yrows, p);
            y = yrows.r;
            if (plan.arrow_s_to_t >= 0) {
                FpRows pre = preimage_rows(maps[(size_t)plan.arrow_s_to_t], w, p);
                FpRows ker = intersect_rows(yrows, pre, p);
                rref(ker, p);
                kappa = ker.r;
            } else {
                kappa = y;
            }
        }
        auto it = acc.find(dims_key);
        if (it == acc.end()) it = acc.emplace(dims_key, std::vector<uint64_t>(sig_size, 0)).first;
        it->second[(y * (dt + 1) + wd) * (ds + 1) + kappa] += 1;
    };

    auto dfs = [&](auto&& self, size_t k) -> void {
        if (k == plan.enumerated.size()) {
            leaf();
            return;
        }
        size_t v = plan.enumerated[k];
        for (size_t e = 0; e <= (size_t)d[v]; ++e) {
            dims_key[k] = e;
            for_each_subspace((size_t)d[v], e, p, [&](const FpRows& rows,
                                                      const std::vector<size_t>& pivots) {
                chosen[k] = {rows, pivots};
                for (size_t a : checks[k]) {
                    auto [as, at] = q.arrows()[a];
                    const Chosen& src = chosen[order_pos[as]];
                    const Chosen& dst = chosen[order_pos[at]];
                    FpRows img = image_rows(src.rows, maps[a], p);
                    if (!contained_in(img, dst.rows, dst.pivots, p)) return;
                }
                self(self, k + 1);
            });
        }
    };
    dfs(dfs, 0);

    // Close the two ends by counting formulas.
    std::map<DimVec, Int> counts;
    for (const auto& [key, sigs] : acc) {
        DimVec e(n, 0);
        for (size_t k = 0; k < plan.enumerated.size(); ++k)
            e[plan.enumerated[k]] = (long long)key[k];
        for (size_t y = 0; y <= ds; ++y)
            for (size_t wd = 0; wd <= dt; ++wd)
                for (size_t kappa = 0; kappa <= ds; ++kappa) {
                    uint64_t c = sigs[(y * (dt + 1) + wd) * (ds + 1) + kappa];
                    if (c == 0) continue;
                    for (size_t es = 0; es <= ds; ++es) {
                        for (size_t et = 0; et <= dt; ++et) {
                            Int total = 0;
                            size_t jlo = es > y - kappa ? es - (y - kappa) : 0;
                            for (size_t j = jlo; j <= std::min(es, kappa); ++j) {
                                size_t img = es - j;
                                size_t wp = wd + img;
                                if (wp > et || wp > dt) continue;
                                Int ways = tables.binom[kappa][j] *
                                           tables.binom[y - kappa][img] *
                                           tables.qpow[(kappa - j) * img] *
                                           tables.binom[dt - wp][et - wp];
                                total += ways;
                            }
                            if (total == 0) continue;
                            DimVec full = e;
                            if (plan.s != SIZE_MAX) full[plan.s] = (long long)es;
                            full[plan.t] = (long long)et;
                            counts[full] += Int(c) * total;
                        }
                    }
                }
    }
    return counts;
}

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> usable_primes(const Representation& m, size_t count, size_t skip) {
    std::vector<uint64_t> ps;
    for (uint64_t p = 2; ps.size() < count + skip; ++p) {
        if (!is_prime_u64(p)) continue;
        bool ok = true;
        for (size_t a = 0; a < m.quiver().num_arrows() && ok; ++a)
            for (size_t i = 0; i < m.map(a).rows() && ok; ++i)
                for (size_t j = 0; j < m.map(a).cols() && ok; ++j)
                    if (denominator(m.map(a).at(i, j)) % Int(p) == 0) ok = false;
        if (ok) ps.push_back(p);
    }
    ps.erase(ps.begin(), ps.begin() + (long)skip);
    return ps;
}

GrassmannianProfile thin_profile(const Representation& m) {
    // Lemma: a grassmannian of a thin module is empty or a single point.
    const Quiver& q = m.quiver();
    const DimVec& d = m.dims();
    GrassmannianProfile prof;
    prof.dims = d;
    size_t n = q.num_vertices();
    DimVec e(n, 0);
    while (true) {
        bool ok = true;
        for (size_t a = 0; a < q.num_arrows() && ok; ++a) {
            auto [s, t] = q.arrows()[a];
            if (e[s] == 1 && e[t] == 0 && m.map(a).at(0, 0) != 0) ok = false;
        }
        if (ok) prof.table[e] = 1;
        size_t k = 0;
        while (k < n && e[k] == d[k]) e[k++] = 0;
        if (k == n) break;
        ++e[k];
    }
    return prof;
}

} // namespace

GrassmannianProfile grassmannian_profile(const Representation& m) {
    if (m.field().kind != Field::Rationals)
        throw DomainError("grassmannian: representation must be over the rationals");
    if (m.is_thin()) return thin_profile(m);

    const DimVec& d = m.dims();
    size_t n = d.size();
    size_t dmax = 0;
    for (long long x : d) dmax += (size_t)((x / 2) * (x - x / 2));
    size_t window = dmax + 2;

    for (size_t attempt = 0; attempt < 4; ++attempt) {
        std::vector<uint64_t> primes = usable_primes(m, window, attempt);
        std::vector<std::map<DimVec, Int>> counts(primes.size());
        unsigned workers = std::min<unsigned>(worker_count(), (unsigned)primes.size());
        if (workers <= 1) {
            for (size_t i = 0; i < primes.size(); ++i)
                counts[i] = grassmannian_point_counts(m, primes[i]);
        } else {
            for (size_t base = 0; base < primes.size(); base += workers) {
                std::vector<std::future<std::map<DimVec, Int>>> futs;
                for (size_t i = base; i < std::min(primes.size(), base + workers); ++i)
                    futs.push_back(std::async(std::launch::async, [&m, &primes, i] {
                        return grassmannian_point_counts(m, primes[i]);
                    }));
                for (size_t i = base; i < std::min(primes.size(), base + workers); ++i)
                    counts[i] = futs[i - base].get();
            }
        }
        try {
            GrassmannianProfile prof;
            prof.dims = d;
            DimVec e(n, 0);
            while (true) {
                size_t bound = 0;
                for (size_t i = 0; i < n; ++i) bound += (size_t)(e[i] * (d[i] - e[i]));
                std::vector<std::pair<Int, Int>> points;
                for (size_t i = 0; i < primes.size(); ++i) {
                    auto it = counts[i].find(e);
                    points.emplace_back(Int(primes[i]), it == counts[i].end() ? Int(0) : it->second);
                }
                std::vector<Int> poly = interpolate_integer_polynomial(points, bound);
                Int chi = evaluate_integer_polynomial(poly, 1);
                if (chi != 0) prof.table[e] = chi;
                size_t k = 0;
                while (k < n && e[k] == d[k]) e[k++] = 0;
                if (k == n) break;
                ++e[k];
            }
            // chi(Gr_0) = chi(Gr_dim) = 1 always; anything else is a bug signal.
            if (prof.table[DimVec(n, 0)] != 1 || prof.table[d] != 1)
                throw InconsistencyError("grassmannian: endpoint characteristics wrong");
            return prof;
        } catch (const InconsistencyError&) {
            if (attempt == 3) throw;
        }
    }
    throw InconsistencyError("grassmannian: point counts not polynomial");
}

Int grassmannian_euler_char(const Representation& m, const DimVec& e) {
    if (e.size() != m.dims().size()) throw DomainError("grassmannian: bad subdimension vector");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > m.dims()[i])
            throw DomainError("grassmannian: subdimension out of range");
    GrassmannianProfile prof = grassmannian_profile(m);
    auto it = prof.table.find(e);
    return it == prof.table.end() ? Int(0) : it->second;
}

} // namespace clusterforge
