#include "clusterforge/chebyshev.hpp"

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

void trim(IntPolynomial& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

} // namespace

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

IntPolynomial chebyshev_second(unsigned n) {
    IntPolynomial prev{0}, cur{1}; // C_{-1}, C_0
    for (unsigned k = 0; k < n; ++k) {
        IntPolynomial next(cur.size() + 1, 0);
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        next = poly_sub(next, prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial chebyshev_first(unsigned n) {
    if (n < 2) return chebyshev_second(n);
    return poly_sub(chebyshev_second(n), chebyshev_second(n - 2));
}

KroneckerFamily parse_family(const std::string& name) {
    if (name == "z" || name == "Z") return KroneckerFamily::ZPowers;
    if (name == "P" || name == "p") return KroneckerFamily::FirstKind;
    if (name == "C" || name == "c") return KroneckerFamily::SecondKind;
    throw DomainError("unknown Kronecker basis family: " + name);
}

namespace {

IntPolynomial family_polynomial(KroneckerFamily f, unsigned n) {
    switch (f) {
        case KroneckerFamily::ZPowers: {
            IntPolynomial p(n + 1, 0);
            p[n] = 1;
            return p;
        }
        case KroneckerFamily::FirstKind:
            return chebyshev_first(n);
        case KroneckerFamily::SecondKind:
            return chebyshev_second(n);
    }
    throw DomainError("bad family");
}

} // namespace

bool BaseChangeMatrix::is_unipotent_upper() const {
    for (size_t i = 0; i < size(); ++i)
        for (size_t j = 0; j < size(); ++j) {
            if (i == j && entries[i][j] != 1) return false;
            if (i > j && entries[i][j] != 0) return false;
        }
    return true;
}

bool BaseChangeMatrix::is_nonnegative() const {
    for (const auto& row : entries)
        for (const Int& x : row)
            if (x < 0) return false;
    return true;
}

BaseChangeMatrix base_change_matrix(KroneckerFamily from, KroneckerFamily to, size_t N) {
    BaseChangeMatrix m;
    m.from = from;
    m.to = to;
    m.entries.assign(N + 1, std::vector<Int>(N + 1, 0));
    for (size_t c = 0; c <= N; ++c) {
        IntPolynomial target = family_polynomial(to, (unsigned)c);
        // reduce against the monic from-family, top degree first
        for (size_t k = target.size(); k-- > 0;) {
            Int coef = target[k];
            if (coef == 0) continue;
            m.entries[k][c] = coef;
            IntPolynomial base = family_polynomial(from, (unsigned)k);
            for (size_t i = 0; i < base.size(); ++i) target[i] -= coef * base[i];
        }
        for (const Int& x : target)
            if (x != 0) throw InconsistencyError("base change: reduction left a remainder");
    }
    return m;
}

BaseChangeMatrix base_change_inverse(const BaseChangeMatrix& m) {
    size_t n = m.size();
    BaseChangeMatrix inv;
    inv.from = m.to;
    inv.to = m.from;
    inv.entries.assign(n, std::vector<Int>(n, 0));
    // unipotent upper-triangular back substitution
    if (!m.is_unipotent_upper())
        throw DomainError("base_change_inverse: matrix is not unipotent upper-triangular");
    for (size_t c = 0; c < n; ++c) {
        std::vector<Int> col(n, 0);
        col[c] = 1;
        for (size_t r = c + 1; r-- > 0;) {
            Int s = col[r];
            for (size_t k = r + 1; k <= c; ++k) s -= m.entries[r][k] * inv.entries[k][c];
            inv.entries[r][c] = s;
            if (r == 0) break;
        }
    }
    return inv;
}

LaurentPolynomial kronecker_z() {
    std::vector<int> vars{1, 2};
    LaurentPolynomial z(vars);
    z.add_term({-1, -1}, 1);
    z.add_term({1, -1}, 1);
    z.add_term({-1, 1}, 1);
    return z;
}

LaurentPolynomial evaluate_at(const IntPolynomial& poly, const LaurentPolynomial& x) {
    LaurentPolynomial r = LaurentPolynomial::zero(x.variables());
    for (size_t i = poly.size(); i-- > 0;) {
        r = r * x;
        r += LaurentPolynomial::constant(x.variables(), poly[i]);
        if (i == 0) break;
    }
    return r;
}

LaurentPolynomial kronecker_basis_element(KroneckerFamily family, unsigned n) {
    return evaluate_at(family_polynomial(family, n), kronecker_z());
}

} // namespace clusterforge
