#include "clusterforge/quiver.hpp"

#include "clusterforge/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace clusterforge {

Quiver::Quiver(std::vector<int> labels, std::vector<std::pair<int, int>> arrows)
    : labels_(std::move(labels)), arrows_(std::move(arrows)) {
    for (auto [s, t] : arrows_)
        if (s < 0 || t < 0 || (size_t)s >= labels_.size() || (size_t)t >= labels_.size())
            throw DomainError("quiver: arrow endpoint out of range");
}

Quiver Quiver::from_arrows(int n, std::vector<std::pair<int, int>> arrows_by_label) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    std::vector<std::pair<int, int>> arrows;
    arrows.reserve(arrows_by_label.size());
    for (auto [s, t] : arrows_by_label) {
        if (s < 1 || t < 1 || s > n || t > n) throw DomainError("quiver: bad vertex label");
        arrows.emplace_back(s - 1, t - 1);
    }
    return Quiver(std::move(labels), std::move(arrows));
}

int Quiver::index_of_label(int label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return (int)i;
    throw DomainError("quiver: unknown vertex label");
}

bool Quiver::is_connected() const {
    if (labels_.empty()) return false;
    std::vector<bool> seen(labels_.size(), false);
    std::deque<size_t> work{0};
    seen[0] = true;
    while (!work.empty()) {
        size_t v = work.front();
        work.pop_front();
        for (auto [s, t] : arrows_) {
            size_t o = labels_.size();
            if ((size_t)s == v) o = t;
            if ((size_t)t == v) o = s;
            if (o < labels_.size() && !seen[o]) {
                seen[o] = true;
                work.push_back(o);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool Quiver::is_acyclic() const {
    std::vector<int> indeg(labels_.size(), 0);
    for (auto [s, t] : arrows_) {
        (void)s;
        ++indeg[t];
    }
    std::deque<size_t> work;
    for (size_t i = 0; i < labels_.size(); ++i)
        if (indeg[i] == 0) work.push_back(i);
    size_t removed = 0;
    while (!work.empty()) {
        size_t v = work.front();
        work.pop_front();
        ++removed;
        for (auto [s, t] : arrows_)
            if ((size_t)s == v && --indeg[t] == 0) work.push_back(t);
    }
    return removed == labels_.size();
}

bool Quiver::is_sink(size_t i) const {
    for (auto [s, t] : arrows_) {
        (void)t;
        if ((size_t)s == i) return false;
    }
    return true;
}

bool Quiver::is_source(size_t i) const {
    for (auto [s, t] : arrows_) {
        (void)s;
        if ((size_t)t == i) return false;
    }
    return true;
}

std::vector<size_t> Quiver::sinks() const {
    std::vector<size_t> r;
    for (size_t i = 0; i < labels_.size(); ++i)
        if (is_sink(i)) r.push_back(i);
    return r;
}

std::vector<size_t> Quiver::sources() const {
    std::vector<size_t> r;
    for (size_t i = 0; i < labels_.size(); ++i)
        if (is_source(i)) r.push_back(i);
    return r;
}

size_t Quiver::arrows_between(size_t i, size_t j) const {
    size_t c = 0;
    for (auto [s, t] : arrows_)
        if ((size_t)s == i && (size_t)t == j) ++c;
    return c;
}

bool Quiver::has_multiple_arrows() const {
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = 0; j < labels_.size(); ++j)
            if (i != j && arrows_between(i, j) > 1) return true;
    return false;
}

IntMatrix Quiver::euler_matrix() const {
    size_t n = labels_.size();
    IntMatrix e(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) e[i][i] = 1;
    for (auto [s, t] : arrows_) e[s][t] -= 1;
    return e;
}

IntMatrix Quiver::incidence_matrix() const {
    size_t n = labels_.size();
    IntMatrix b(n, std::vector<long long>(n, 0));
    for (auto [s, t] : arrows_) {
        b[s][t] += 1;
        b[t][s] -= 1;
    }
    return b;
}

std::string Quiver::canonical_key() const {
    auto sorted = arrows_;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << labels_.size() << ':';
    for (auto [s, t] : sorted) os << s << '>' << t << ';';
    return os.str();
}

std::string QuiverType::str() const {
    std::ostringstream os;
    switch (cls) {
        case QuiverClass::Dynkin:
            os << "Dynkin " << family << n;
            break;
        case QuiverClass::Affine:
            if (family == 'A')
                os << "Affine A~(" << r << "," << s << ")";
            else
                os << "Affine " << family << '~' << n;
            break;
        case QuiverClass::Wild:
            os << "Wild";
            break;
    }
    return os.str();
}

namespace {

struct ArmProfile {
    std::vector<size_t> centers; // vertices of degree >= 3
    std::vector<int> degrees;
};

// Arm lengths (edge counts) of the branches hanging off a center in a tree
// whose other vertices have degree <= 2.
std::vector<int> arm_lengths(const Quiver& q, size_t center) {
    std::vector<int> arms;
    size_t n = q.num_vertices();
    std::vector<std::vector<size_t>> adj(n);
    for (auto [s, t] : q.arrows()) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    for (size_t next : adj[center]) {
        int len = 1;
        size_t prev = center, cur = next;
        while (adj[cur].size() == 2) {
            size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        if (adj[cur].size() > 2) return {}; // hit another branch vertex
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

} // namespace

QuiverType classify_type(const Quiver& q) {
    if (!q.is_connected()) throw DomainError("classify_type: quiver not connected");
    if (!q.is_acyclic()) throw DomainError("classify_type: quiver not acyclic");

    size_t n = q.num_vertices();
    size_t m = q.num_arrows();
    QuiverType wild;

    if (n == 1) return {QuiverClass::Dynkin, 'A', 1, 0, 0};

    if (q.has_multiple_arrows()) {
        if (n == 2 && m == 2) return {QuiverClass::Affine, 'A', 1, 1, 1}; // Kronecker
        return wild;
    }

    std::vector<int> deg(n, 0);
    for (auto [s, t] : q.arrows()) {
        ++deg[s];
        ++deg[t];
    }
    int max_deg = *std::max_element(deg.begin(), deg.end());
    std::vector<size_t> centers;
    for (size_t i = 0; i < n; ++i)
        if (deg[i] >= 3) centers.push_back(i);

    if (m == n - 1) { // tree
        if (max_deg <= 2) return {QuiverClass::Dynkin, 'A', (int)n, 0, 0};
        if (max_deg >= 5) return wild;
        if (max_deg == 4) {
            if (centers.size() == 1) {
                auto arms = arm_lengths(q, centers[0]);
                if (arms == std::vector<int>{1, 1, 1, 1})
                    return {QuiverClass::Affine, 'D', 4, 0, 0};
            }
            return wild;
        }
        if (centers.size() == 1) {
            auto arms = arm_lengths(q, centers[0]);
            if (arms.size() != 3) return wild;
            int a = arms[0], b = arms[1], c = arms[2];
            if (a == 1 && b == 1) return {QuiverClass::Dynkin, 'D', c + 3, 0, 0};
            if (a == 1 && b == 2 && c == 2) return {QuiverClass::Dynkin, 'E', 6, 0, 0};
            if (a == 1 && b == 2 && c == 3) return {QuiverClass::Dynkin, 'E', 7, 0, 0};
            if (a == 1 && b == 2 && c == 4) return {QuiverClass::Dynkin, 'E', 8, 0, 0};
            if (a == 2 && b == 2 && c == 2) return {QuiverClass::Affine, 'E', 6, 0, 0};
            if (a == 1 && b == 3 && c == 3) return {QuiverClass::Affine, 'E', 7, 0, 0};
            if (a == 1 && b == 2 && c == 5) return {QuiverClass::Affine, 'E', 8, 0, 0};
            return wild;
        }
        if (centers.size() == 2) {
            // Extended D: a path joining two forks, each fork carrying two leaves.
            auto arms0 = arm_lengths(q, centers[0]);
            auto arms1 = arm_lengths(q, centers[1]);
            if (arms0.empty() || arms1.empty()) {
                // arm walk hit the other center: the centers are joined by a path
                std::vector<int> leaves0, leaves1;
                size_t nn = q.num_vertices();
                std::vector<std::vector<size_t>> adj(nn);
                for (auto [s, t] : q.arrows()) {
                    adj[s].push_back(t);
                    adj[t].push_back(s);
                }
                auto leaf_arms = [&](size_t center) {
                    std::vector<int> r;
                    for (size_t next : adj[center]) {
                        int len = 1;
                        size_t prev = center, cur = next;
                        while (adj[cur].size() == 2) {
                            size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                            prev = cur;
                            cur = nxt;
                            ++len;
                        }
                        if (adj[cur].size() == 1) r.push_back(len);
                    }
                    std::sort(r.begin(), r.end());
                    return r;
                };
                leaves0 = leaf_arms(centers[0]);
                leaves1 = leaf_arms(centers[1]);
                if (leaves0 == std::vector<int>{1, 1} && leaves1 == std::vector<int>{1, 1})
                    return {QuiverClass::Affine, 'D', (int)n - 1, 0, 0};
            }
            return wild;
        }
        return wild;
    }

    if (m == n && max_deg == 2) { // single cycle
        // Walk the cycle once, counting arrows with and against the walk.
        std::vector<std::vector<size_t>> adj(n);
        for (auto [s, t] : q.arrows()) {
            adj[s].push_back(t);
            adj[t].push_back(s);
        }
        int forward = 0, backward = 0;
        size_t prev = 0, cur = adj[0][0];
        if (q.arrows_between(0, cur) > 0)
            ++forward;
        else
            ++backward;
        while (cur != 0) {
            size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            if (q.arrows_between(cur, nxt) > 0)
                ++forward;
            else
                ++backward;
            prev = cur;
            cur = nxt;
        }
        int r = std::max(forward, backward), s = std::min(forward, backward);
        // s = 0 would be a cyclic orientation, excluded by acyclicity.
        return {QuiverClass::Affine, 'A', r + s - 1, r, s};
    }
    return wild;
}

namespace {

IntMatrix to_int_matrix(const RationalMatrix& m, const char* what) {
    IntMatrix r(m.rows(), std::vector<long long>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (denominator(m.at(i, j)) != 1) throw Error(std::string(what) + ": not integral");
            r[i][j] = numerator(m.at(i, j)).convert_to<long long>();
        }
    return r;
}

RationalMatrix to_rational_matrix(const IntMatrix& m) {
    RationalMatrix r(m.size(), m.empty() ? 0 : m[0].size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r.at(i, j) = Rat(m[i][j]);
    return r;
}

DimVec apply_int_matrix(const IntMatrix& m, const DimVec& v) {
    DimVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

} // namespace

EulerData::EulerData(const Quiver& q) : n_(q.num_vertices()) {
    if (!q.is_acyclic()) throw DomainError("EulerData: quiver must be acyclic");
    euler_ = q.euler_matrix();
    RationalMatrix E = to_rational_matrix(euler_);
    RationalMatrix Einv = E.inverse();
    euler_inv_ = to_int_matrix(Einv, "euler inverse");
    // <a,b> = -<b,c(a)> forces c = -E^{-1} E^T.
    RationalMatrix C = Einv * E.transpose();
    coxeter_ = to_int_matrix(C, "coxeter");
    for (auto& row : coxeter_)
        for (auto& x : row) x = -x;
    coxeter_inv_ = to_int_matrix(to_rational_matrix(coxeter_).inverse(), "coxeter inverse");

    QuiverType t = classify_type(q);
    if (t.cls == QuiverClass::Affine) delta_ = minimal_imaginary_root(q);
}

long long EulerData::euler_form(const DimVec& a, const DimVec& b) const {
    if (a.size() != n_ || b.size() != n_) throw DomainError("euler_form: size mismatch");
    long long r = 0;
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r += a[i] * euler_[i][j] * b[j];
    return r;
}

long long EulerData::symmetric_form(const DimVec& a, const DimVec& b) const {
    return euler_form(a, b) + euler_form(b, a);
}

DimVec EulerData::coxeter(const DimVec& a) const { return apply_int_matrix(coxeter_, a); }

DimVec EulerData::coxeter_inverse_apply(const DimVec& a) const {
    return apply_int_matrix(coxeter_inv_, a);
}

DimVec EulerData::simple_reflection(size_t i, const DimVec& a) const {
    DimVec r = a;
    long long s = 0;
    for (size_t j = 0; j < n_; ++j)
        if (j != i) s += (-euler_[i][j] - euler_[j][i]) * a[j];
    r[i] = -a[i] + s;
    return r;
}

DimVec EulerData::dim_projective(size_t i) const {
    DimVec r(n_);
    for (size_t j = 0; j < n_; ++j) r[j] = euler_inv_[i][j];
    return r;
}

DimVec EulerData::dim_injective(size_t i) const {
    DimVec r(n_);
    for (size_t j = 0; j < n_; ++j) r[j] = euler_inv_[j][i];
    return r;
}

long long EulerData::defect(const DimVec& a) const {
    if (!is_affine()) throw DomainError("defect: quiver is not affine");
    return euler_form(delta_, a);
}

const DimVec& EulerData::delta() const {
    if (!is_affine()) throw DomainError("delta: quiver is not affine");
    return delta_;
}

DimVec minimal_imaginary_root(const Quiver& q) {
    QuiverType t = classify_type(q);
    if (t.cls != QuiverClass::Affine)
        throw DomainError("minimal_imaginary_root: quiver is not affine");
    IntMatrix e = q.euler_matrix();
    size_t n = q.num_vertices();
    RationalMatrix sym(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) sym.at(i, j) = Rat(e[i][j] + e[j][i]);
    auto basis = sym.nullspace();
    if (basis.size() != 1) throw InconsistencyError("affine radical is not one-dimensional");
    // Scale to the primitive integer vector with positive entries.
    Int l = 1;
    for (const Rat& x : basis[0]) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<Int> v(n);
    Int g = 0;
    for (size_t i = 0; i < n; ++i) {
        v[i] = numerator(basis[0][i]) * (l / denominator(basis[0][i]));
        g = boost::multiprecision::gcd(g, v[i]);
    }
    DimVec delta(n);
    bool negative = false;
    for (size_t i = 0; i < n; ++i) {
        delta[i] = Int(v[i] / g).convert_to<long long>();
        if (delta[i] < 0) negative = true;
    }
    if (negative)
        for (auto& x : delta) x = -x;
    for (long long x : delta)
        if (x <= 0) throw InconsistencyError("minimal imaginary root is not sincere");
    return delta;
}

std::vector<std::pair<DimVec, RootKind>> positive_roots_up_to(const Quiver& q,
                                                              const DimVec& bound) {
    QuiverType t = classify_type(q);
    if (t.cls == QuiverClass::Wild)
        throw DomainError("positive_roots_up_to: wild type");
    for (long long b : bound)
        if (b < 0) throw DomainError("positive_roots_up_to: bound must be nonnegative");
    EulerData ed(q);
    size_t n = q.num_vertices();
    std::vector<std::pair<DimVec, RootKind>> roots;
    DimVec alpha(n, 0);
    while (true) {
        // increment alpha in the box
        size_t k = 0;
        while (k < n && alpha[k] == bound[k]) alpha[k++] = 0;
        if (k == n) break;
        ++alpha[k];
        long long qv = ed.tits_q(alpha);
        if (qv == 1)
            roots.emplace_back(alpha, RootKind::Real);
        else if (qv == 0)
            roots.emplace_back(alpha, RootKind::Imaginary);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Quiver reflect_quiver(const Quiver& q, size_t i) {
    if (i >= q.num_vertices()) throw DomainError("reflect_quiver: bad vertex");
    if (!q.is_sink(i) && !q.is_source(i))
        throw DomainError("reflect_quiver: vertex is neither sink nor source");
    std::vector<std::pair<int, int>> arrows;
    for (auto [s, t] : q.arrows()) {
        if ((size_t)s == i || (size_t)t == i)
            arrows.emplace_back(t, s);
        else
            arrows.emplace_back(s, t);
    }
    return Quiver(q.labels(), std::move(arrows));
}

DimVec sigma_on_dimension(const Quiver& q, size_t i, const DimVec& d) {
    if (!q.is_sink(i)) throw DomainError("sigma_on_dimension: vertex is not a sink");
    QuiverType t = classify_type(q);
    if (t.cls == QuiverClass::Wild)
        throw DomainError("sigma_on_dimension: canonical decomposition unavailable (wild)");
    EulerData ed(q);
    // sigma_i acts as s_i on every canonical summand of [d]_+; s_i is linear,
    // so the summand-wise action collapses to s_i([d]_+).
    DimVec result = ed.simple_reflection(i, positive_part(d));
    DimVec neg = negative_part(d);
    for (size_t j = 0; j < d.size(); ++j) result[j] += neg[j];
    if (d[i] < 0) result[i] += -2 * d[i];
    return result;
}

std::optional<DimVec> find_grading_form(const Quiver& q) {
    IntMatrix b = q.incidence_matrix();
    size_t n = q.num_vertices();
    std::vector<StrictInequality> system;
    for (size_t i = 0; i < n; ++i) {
        StrictInequality ineq;
        ineq.a.assign(n, Rat(0));
        for (size_t j = 0; j < n; ++j) ineq.a[j] = Rat(b[j][i]);
        ineq.c = 0;
        system.push_back(std::move(ineq));
    }
    auto point = fourier_motzkin_feasible(std::move(system), n);
    if (!point) return std::nullopt;
    Int l = 1;
    for (const Rat& x : *point) l = boost::multiprecision::lcm(l, denominator(x));
    DimVec eps(n);
    for (size_t i = 0; i < n; ++i)
        eps[i] = Int(numerator((*point)[i]) * (l / denominator((*point)[i]))).convert_to<long long>();
    // The inequalities are strict; confirm them exactly in integers.
    for (size_t i = 0; i < n; ++i) {
        long long v = 0;
        for (size_t j = 0; j < n; ++j) v += eps[j] * b[j][i];
        if (v >= 0) throw InconsistencyError("grading form failed integer verification");
    }
    return eps;
}

std::vector<Quiver> reflection_class(const Quiver& q, size_t max_depth) {
    std::vector<Quiver> out{q};
    std::set<std::string> seen{q.canonical_key()};
    std::deque<std::pair<Quiver, size_t>> work{{q, 0}};
    while (!work.empty()) {
        auto [cur, depth] = work.front();
        work.pop_front();
        if (depth == max_depth) continue;
        for (size_t i = 0; i < cur.num_vertices(); ++i) {
            if (!cur.is_sink(i) && !cur.is_source(i)) continue;
            Quiver next = reflect_quiver(cur, i);
            if (seen.insert(next.canonical_key()).second) {
                out.push_back(next);
                work.emplace_back(next, depth + 1);
            }
        }
    }
    return out;
}

} // namespace clusterforge
