#include "clusterforge/cluster.hpp"

#include "clusterforge/ccmap.hpp"
#include "clusterforge/generic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace clusterforge {

Seed initial_seed(const Quiver& q) {
    if (!q.is_acyclic()) throw DomainError("initial_seed: quiver must be acyclic");
    Seed s;
    s.b = q.incidence_matrix();
    for (size_t i = 0; i < q.num_vertices(); ++i)
        s.cluster.push_back(LaurentPolynomial::monomial(q.labels(), i, 1));
    return s;
}

Seed mutate(const Seed& s, size_t k) {
    size_t n = s.b.size();
    if (k >= n) throw DomainError("mutate: bad direction");
    Seed r;
    r.b.assign(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == k || j == k)
                r.b[i][j] = -s.b[i][j];
            else if (s.b[i][k] > 0)
                r.b[i][j] = s.b[i][j] + s.b[i][k] * std::max(0ll, s.b[k][j]);
            else
                r.b[i][j] = s.b[i][j] + s.b[i][k] * std::max(0ll, -s.b[k][j]);
        }
    r.cluster = s.cluster;
    const auto& vars = s.cluster[0].variables();
    LaurentPolynomial m1 = LaurentPolynomial::constant(vars, 1);
    LaurentPolynomial m2 = m1;
    for (size_t j = 0; j < n; ++j) {
        if (s.b[j][k] > 0) m1 *= s.cluster[j].pow((unsigned)s.b[j][k]);
        if (s.b[j][k] < 0) m2 *= s.cluster[j].pow((unsigned)(-s.b[j][k]));
    }
    try {
        r.cluster[k] = laurent_divide_exact(m1 + m2, s.cluster[k]);
    } catch (const DivisibilityError&) {
        throw InconsistencyError("mutate: exchange is not Laurent (phenomenon violated)");
    }
    return r;
}

namespace {

// Canonical key of a seed: the cluster as an unordered tuple, with the
// exchange matrix permuted accordingly.
std::string seed_key(const Seed& s) {
    size_t n = s.cluster.size();
    std::vector<std::pair<std::string, size_t>> order;
    for (size_t i = 0; i < n; ++i) order.push_back({s.cluster[i].str(), i});
    std::sort(order.begin(), order.end());
    std::ostringstream os;
    for (const auto& [str, idx] : order) {
        (void)idx;
        os << str << '|';
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) os << s.b[order[i].second][order[j].second] << ',';
    return os.str();
}

} // namespace

std::vector<LaurentPolynomial> enumerate_cluster_variables(const Quiver& q, size_t depth) {
    Seed init = initial_seed(q);
    std::map<std::string, LaurentPolynomial> found;
    for (const auto& x : init.cluster) found.emplace(x.str(), x);
    std::set<std::string> seen{seed_key(init)};
    std::deque<std::pair<Seed, size_t>> work{{init, 0}};
    while (!work.empty()) {
        auto [seed, dist] = work.front();
        work.pop_front();
        if (dist == depth) continue;
        for (size_t k = 0; k < seed.cluster.size(); ++k) {
            Seed next = mutate(seed, k);
            if (!seen.insert(seed_key(next)).second) continue;
            for (const auto& x : next.cluster) found.emplace(x.str(), x);
            work.emplace_back(std::move(next), dist + 1);
        }
    }
    std::vector<LaurentPolynomial> out;
    for (auto& [key, val] : found) {
        (void)key;
        out.push_back(val);
    }
    return out;
}

RigidCorrespondenceReport rigid_correspondence_check(const Quiver& q, const DimVec& hi,
                                                     size_t depth) {
    RigidCorrespondenceReport report;
    GenericEvaluator ev(q);
    size_t n = q.num_vertices();

    std::map<std::string, LaurentPolynomial> modules;
    for (size_t i = 0; i < n; ++i) {
        LaurentPolynomial u = LaurentPolynomial::monomial(q.labels(), i, 1);
        modules.emplace(u.str(), u); // X_{P_i[1]}
    }
    for (const auto& [root, kind] : positive_roots_up_to(q, hi)) {
        if (kind != RootKind::Real) continue;
        // indecomposable rigid objects carry exactly the real Schur roots
        CanonicalDecomposition dec = ev.decompose(root);
        if (dec.delta_multiplicity != 0 || dec.real_summands.size() != 1) continue;
        LaurentPolynomial x = ev.at(root).value;
        modules.emplace(x.str(), x);
    }

    std::map<std::string, LaurentPolynomial> vars;
    for (const auto& x : enumerate_cluster_variables(q, depth)) {
        DimVec dv = denominator_vector(x);
        bool in_box = true;
        for (size_t i = 0; i < n; ++i)
            if (dv[i] < -1 || dv[i] > hi[i]) in_box = false;
        if (in_box) vars.emplace(x.str(), x);
    }

    for (auto& [k, v] : modules) {
        (void)k;
        report.from_modules.push_back(v);
    }
    for (auto& [k, v] : vars) {
        (void)k;
        report.from_mutation.push_back(v);
    }
    report.equal = modules.size() == vars.size() &&
                   std::equal(modules.begin(), modules.end(), vars.begin(),
                              [](const auto& a, const auto& b) { return a.first == b.first; });
    return report;
}

LaurentPolynomial canonical_isomorphism(const Quiver& q, size_t sink,
                                        const LaurentPolynomial& f) {
    if (!q.is_sink(sink)) throw DomainError("canonical_isomorphism: vertex is not a sink");
    const auto& vars = f.variables();
    size_t n = vars.size();
    LaurentPolynomial exch = LaurentPolynomial::constant(vars, 1); // prod_{j->i} u_j + 1
    {
        LaurentPolynomial mono = LaurentPolynomial::constant(vars, 1);
        for (auto [s, t] : q.arrows())
            if ((size_t)t == sink) mono *= LaurentPolynomial::monomial(vars, (size_t)s, 1);
        exch += mono;
    }

    long long min_e = 0, max_e = 0;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        min_e = std::min(min_e, e[sink]);
        max_e = std::max(max_e, e[sink]);
    }
    long long lift = -std::min(min_e, 0ll);

    // f = sum_k g_k u_i^k  ->  sum_k g_k exch^{k+lift} u_i^{-k} / exch^{lift}
    std::vector<LaurentPolynomial> exch_pow((size_t)(max_e + lift) + 1,
                                            LaurentPolynomial::constant(vars, 1));
    for (size_t k = 1; k < exch_pow.size(); ++k) exch_pow[k] = exch_pow[k - 1] * exch;

    LaurentPolynomial numerator(vars);
    for (const auto& [e, c] : f.terms()) {
        LaurentPolynomial::Exponents swapped = e;
        swapped[sink] = -e[sink];
        LaurentPolynomial term(vars);
        term.add_term(swapped, c);
        numerator += term * exch_pow[(size_t)(e[sink] + lift)];
    }
    if (lift == 0) return numerator;
    try {
        return laurent_divide_exact(numerator, exch_pow[(size_t)lift]);
    } catch (const DivisibilityError&) {
        throw DomainError("canonical_isomorphism: input is not in the cluster algebra image");
    }
}

} // namespace clusterforge
