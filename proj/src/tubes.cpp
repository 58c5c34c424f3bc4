#include "clusterforge/tubes.hpp"

#include <algorithm>
#include <set>

namespace clusterforge {

namespace {

// Cyclic layout of an A~ quiver: vertex sequence cyc[0..n-1] and, for each
// cyclic edge k (between cyc[k] and cyc[k+1 mod n]), the arrow index and
// whether it points forward along the walk.
struct CycleLayout {
    std::vector<size_t> cyc;
    std::vector<size_t> arrow_of_edge;
    std::vector<bool> forward;
};

CycleLayout cycle_layout(const Quiver& q) {
    size_t n = q.num_vertices();
    std::vector<std::vector<std::pair<size_t, size_t>>> adj(n); // (neighbor, arrow)
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        auto [s, t] = q.arrows()[a];
        adj[s].push_back({(size_t)t, a});
        adj[t].push_back({(size_t)s, a});
    }
    CycleLayout lay;
    lay.cyc.push_back(0);
    size_t prev_arrow = SIZE_MAX;
    size_t cur = 0;
    for (size_t step = 0; step < n; ++step) {
        bool advanced = false;
        for (auto [nb, a] : adj[cur]) {
            if (a == prev_arrow) continue;
            auto [s, t] = q.arrows()[a];
            (void)t;
            lay.arrow_of_edge.push_back(a);
            lay.forward.push_back((size_t)s == cur);
            prev_arrow = a;
            cur = nb;
            advanced = true;
            break;
        }
        if (!advanced) throw InconsistencyError("cycle_layout: stuck walk");
        if (step + 1 < n) lay.cyc.push_back(cur);
    }
    if (cur != 0) throw InconsistencyError("cycle_layout: walk did not close");
    return lay;
}

// The arrow carrying the deformation parameter lambda: the last arrow of
// the larger orientation class, so that lambda = 0 degenerates into an
// exceptional tube whenever one exists.  The opposite class hosts the
// degeneration at infinity.
std::pair<size_t, size_t> lambda_arrows(const Quiver& q) {
    CycleLayout lay = cycle_layout(q);
    std::vector<size_t> fw, bw;
    for (size_t k = 0; k < lay.arrow_of_edge.size(); ++k)
        (lay.forward[k] ? fw : bw).push_back(lay.arrow_of_edge[k]);
    std::sort(fw.begin(), fw.end());
    std::sort(bw.begin(), bw.end());
    bool pick_fw;
    if (fw.size() != bw.size())
        pick_fw = fw.size() > bw.size();
    else
        pick_fw = fw.back() > bw.back();
    const auto& major = pick_fw ? fw : bw;
    const auto& minor = pick_fw ? bw : fw;
    return {major.back(), minor.back()};
}

// Push-down of the interval [a, a+len-1] of the universal cover of the cycle.
Representation interval_module(const Quiver& q, const CycleLayout& lay, size_t a, size_t len) {
    size_t n = q.num_vertices();
    DimVec dims(n, 0);
    std::vector<std::vector<size_t>> basis_of(n);
    std::vector<size_t> index_in_vertex(a + len);
    for (size_t z = a; z < a + len; ++z) {
        size_t v = lay.cyc[z % n];
        index_in_vertex[z] = basis_of[v].size();
        basis_of[v].push_back(z);
        ++dims[v];
    }
    std::vector<RationalMatrix> maps;
    for (size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
        auto [s, t] = q.arrows()[arrow];
        maps.emplace_back((size_t)dims[t], (size_t)dims[s]);
    }
    for (size_t z = a; z + 1 < a + len; ++z) {
        size_t edge = z % n;
        size_t arrow = lay.arrow_of_edge[edge];
        size_t src = lay.forward[edge] ? z : z + 1;
        size_t dst = lay.forward[edge] ? z + 1 : z;
        maps[arrow].at(index_in_vertex[dst], index_in_vertex[src]) = 1;
    }
    return Representation(q, dims, std::move(maps));
}

} // namespace

std::vector<TubeDescriptor> exceptional_tubes(const Quiver& q) {
    QuiverType t = classify_type(q);
    if (!t.is_affine_A()) throw DomainError("exceptional_tubes: quiver is not of type A~");
    EulerData ed(q);
    const DimVec& delta = ed.delta();
    size_t n = q.num_vertices();

    // thin defect-zero real roots, strictly between 0 and delta
    std::set<DimVec> candidates;
    DimVec e(n, 0);
    while (true) {
        size_t k = 0;
        while (k < n && e[k] == 1) e[k++] = 0;
        if (k == n) break;
        ++e[k];
        if (e == delta) continue;
        if (ed.tits_q(e) == 1 && ed.defect(e) == 0) candidates.insert(e);
    }

    std::vector<TubeDescriptor> tubes;
    std::set<DimVec> used;
    for (const DimVec& start : candidates) {
        if (used.count(start)) continue;
        // tau-orbit: e_{i+1} = c^{-1}(e_i), so that c(e_i) = e_{i-1}
        std::vector<DimVec> orbit{start};
        DimVec cur = start;
        bool closed = false;
        for (size_t step = 0; step < 2 * n + 4; ++step) {
            cur = ed.coxeter_inverse_apply(cur);
            if (cur == start) {
                closed = true;
                break;
            }
            orbit.push_back(cur);
        }
        if (!closed) throw InconsistencyError("exceptional_tubes: Coxeter orbit did not close");
        DimVec total(n, 0);
        for (const DimVec& v : orbit) total = total + v;
        for (const DimVec& v : orbit) used.insert(v);
        if (total != delta) continue; // an orbit of rigid non-simple tube roots
        TubeDescriptor tube;
        tube.rank = orbit.size();
        tube.quasi_simple_dims = std::move(orbit);
        tubes.push_back(std::move(tube));
    }
    std::sort(tubes.begin(), tubes.end(), [](const TubeDescriptor& a, const TubeDescriptor& b) {
        return a.rank > b.rank ||
               (a.rank == b.rank && a.quasi_simple_dims < b.quasi_simple_dims);
    });
    return tubes;
}

Representation quasi_simple_module(const Quiver& q, const DimVec& root) {
    return thin_indecomposable(q, root);
}

RegularDeltaModule homogeneous_regular(const Quiver& q, const std::optional<Rat>& lambda) {
    QuiverType t = classify_type(q);
    if (!t.is_affine_A()) throw DomainError("homogeneous_regular: quiver is not of type A~");
    DimVec delta = minimal_imaginary_root(q);
    auto [designated, opposite] = lambda_arrows(q);

    Representation rep = lambda
        ? thin_indecomposable(q, delta, {{designated, *lambda}})
        : thin_indecomposable(q, delta, {{opposite, Rat(0)}});

    RegularDeltaModule out;
    out.rep = rep;
    if (end_dimension(rep) == 1) {
        out.homogeneous = true;
        for (const TubeDescriptor& tube : exceptional_tubes(q))
            for (const DimVec& e : tube.quasi_simple_dims)
                if (hom_dimension(quasi_simple_module(q, e), rep) != 0) {
                    out.homogeneous = false;
                    out.exceptional_socle = e;
                }
    }
    if (!out.homogeneous && !out.exceptional_socle) {
        for (const TubeDescriptor& tube : exceptional_tubes(q))
            for (const DimVec& e : tube.quasi_simple_dims)
                if (hom_dimension(quasi_simple_module(q, e), rep) != 0)
                    out.exceptional_socle = e;
        if (!out.exceptional_socle)
            throw InconsistencyError("homogeneous_regular: module is neither homogeneous nor "
                                     "an exceptional delta-module");
    }
    return out;
}

Rat first_homogeneous_lambda(const Quiver& q) {
    for (long long v = 1; v <= 64; ++v) {
        RegularDeltaModule m = homogeneous_regular(q, Rat(v));
        if (m.homogeneous) return Rat(v);
    }
    throw InconsistencyError("first_homogeneous_lambda: no homogeneous parameter found");
}

const LaurentPolynomial& TubeCharacterTable::at(size_t socle, size_t length) const {
    auto it = chars.find({socle, length});
    if (it == chars.end()) throw DomainError("tube character not computed");
    return it->second;
}

TubeCharacterTable tube_characters(const Quiver& q, const TubeDescriptor& tube,
                                   size_t max_length,
                                   const std::vector<LaurentPolynomial>* socle_chars) {
    if (max_length < 1) throw DomainError("tube_characters: max_length must be >= 1");
    size_t p = tube.rank;
    TubeCharacterTable table;
    table.tube = tube;
    LaurentPolynomial one = LaurentPolynomial::constant(q.labels(), 1);
    for (size_t i = 0; i < p; ++i) {
        table.chars[{i, 0}] = one;
        table.chars[{i, 1}] = socle_chars
            ? (*socle_chars)[i]
            : cc_map(quasi_simple_module(q, tube.quasi_simple_dims[i]));
    }
    for (size_t len = 1; len < max_length; ++len)
        for (size_t j = 0; j < p; ++j) {
            size_t i = (j + 1) % p; // mesh ending at E_i^{(len)} produces E_j^{(len+1)}
            LaurentPolynomial num = table.at(i, len) * table.at(j, len) - one;
            table.chars[{j, len + 1}] = laurent_divide_exact(num, table.at(i, len - 1));
        }
    return table;
}

std::vector<DifferenceLine> check_difference_property(const Quiver& q,
                                                      const TubeDescriptor& tube) {
    QuiverType t = classify_type(q);
    if (!t.is_affine_A())
        throw DomainError("check_difference_property: only proven for type A~ input");
    if (tube.rank < 2) throw DomainError("check_difference_property: tube must be exceptional");
    size_t p = tube.rank;
    EulerData ed(q);

    TubeCharacterTable chars = tube_characters(q, tube, p);
    Rat lambda = first_homogeneous_lambda(q);
    LaurentPolynomial x_lambda = cc_map(homogeneous_regular(q, lambda).rep);
    LaurentPolynomial one = LaurentPolynomial::constant(q.labels(), 1);

    std::vector<DifferenceLine> lines;
    for (size_t i = 0; i < p; ++i) {
        const DimVec& e = tube.quasi_simple_dims[i];
        // dim q.rad(M_E)/E = delta - c(e) - e
        DimVec expected_dim = ed.delta() - ed.coxeter(e) - e;
        LaurentPolynomial expected = p == 2 ? one : chars.at((i + 1) % p, p - 2);
        if (p == 2) {
            if (!is_zero(expected_dim))
                throw InconsistencyError("difference property: rank-2 radical not zero");
        } else if (denominator_vector(expected) != expected_dim) {
            throw InconsistencyError("difference property: quasi-radical dimension mismatch");
        }
        DifferenceLine line;
        line.socle = e;
        line.difference = chars.at(i, p) - x_lambda;
        line.expected = expected;
        line.pass = line.difference == line.expected;
        lines.push_back(std::move(line));
    }
    return lines;
}

Representation jordan_regular(const Quiver& q, const Rat& lambda, size_t m) {
    QuiverType t = classify_type(q);
    if (!t.is_affine_A()) throw DomainError("jordan_regular: quiver is not of type A~");
    if (m < 1) throw DomainError("jordan_regular: quasi-length must be >= 1");
    size_t n = q.num_vertices();
    size_t designated = lambda_arrows(q).first;
    DimVec dims(n, (long long)m);
    std::vector<RationalMatrix> maps;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        RationalMatrix mat(m, m);
        for (size_t i = 0; i < m; ++i) mat.at(i, i) = a == designated ? lambda : Rat(1);
        if (a == designated)
            for (size_t i = 0; i + 1 < m; ++i) mat.at(i, i + 1) = 1;
        maps.push_back(std::move(mat));
    }
    Representation rep(q, dims, std::move(maps));
    // uniserial homogeneous modules have End = k[t]/(t^m)
    if (end_dimension(rep) != (long long)m)
        throw InconsistencyError("jordan_regular: endomorphism certificate failed");
    return rep;
}

Representation tube_module(const Quiver& q, const TubeDescriptor& tube, size_t socle_index,
                           size_t quasi_length) {
    if (tube.rank < 2) throw DomainError("tube_module: use jordan_regular for homogeneous tubes");
    if (socle_index >= tube.rank) throw DomainError("tube_module: bad socle index");
    if (quasi_length < 1) throw DomainError("tube_module: quasi-length must be >= 1");
    size_t p = tube.rank;
    size_t n = q.num_vertices();
    DimVec expected(n, 0);
    for (size_t k = 0; k < quasi_length; ++k)
        expected = expected + tube.quasi_simple_dims[(socle_index + k) % p];
    size_t len = (size_t)sum(expected);

    CycleLayout lay = cycle_layout(q);
    std::vector<Representation> socle_modules;
    for (size_t j = 0; j < p; ++j)
        socle_modules.push_back(quasi_simple_module(q, tube.quasi_simple_dims[j]));

    for (size_t a = 0; a < n; ++a) {
        Representation cand = interval_module(q, lay, a, len);
        if (cand.dims() != expected) continue;
        bool socle_ok = true;
        for (size_t j = 0; j < p && socle_ok; ++j) {
            long long h = hom_dimension(socle_modules[j], cand);
            if (j == socle_index ? h < 1 : h != 0) socle_ok = false;
        }
        if (socle_ok) return cand;
    }
    throw InconsistencyError("tube_module: no interval realizes the requested module");
}

} // namespace clusterforge
