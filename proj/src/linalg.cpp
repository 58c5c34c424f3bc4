#include "clusterforge/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace clusterforge {

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product: shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Row echelon over Q in place; returns pivot columns.
std::vector<size_t> echelonize(RationalMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Rat inv = m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t RationalMatrix::rank() const {
    RationalMatrix m = *this;
    return echelonize(m).size();
}

std::vector<std::vector<Rat>> RationalMatrix::nullspace() const {
    RationalMatrix m = *this;
    std::vector<size_t> pivots = echelonize(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse: matrix not square");
    RationalMatrix aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    if (echelonize(aug).size() != rows_) throw DomainError("inverse: singular matrix");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

std::vector<Rat> RationalMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw DomainError("apply: size mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::optional<std::vector<Rat>> RationalMatrix::solve(const std::vector<Rat>& b) const {
    if (b.size() != rows_) throw DomainError("solve: size mismatch");
    RationalMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rat> x(cols_, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p) {
    unsigned __int128 r = 1, b = base % p;
    while (exp) {
        if (exp & 1ull) r = r * b % p;
        b = b * b % p;
        exp >>= 1ull;
    }
    return (uint64_t)r;
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw DomainError("mod_inverse: zero");
    return mod_pow(a, p - 2, p);
}

size_t PrimeFieldMatrix::rank() const {
    std::vector<uint64_t> m = a_;
    auto at2 = [&](size_t i, size_t j) -> uint64_t& { return m[i * cols_ + j]; };
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && at2(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at2(sel, j), at2(row, j));
        uint64_t inv = mod_inverse(at2(row, col), p_);
        for (size_t j = col; j < cols_; ++j)
            at2(row, j) = (uint64_t)((unsigned __int128)at2(row, j) * inv % p_);
        for (size_t i = row + 1; i < rows_; ++i) {
            uint64_t f = at2(i, col);
            if (f == 0) continue;
            for (size_t j = col; j < cols_; ++j) {
                unsigned __int128 v = (unsigned __int128)f * at2(row, j) % p_;
                at2(i, j) = (at2(i, j) + p_ - (uint64_t)v) % p_;
            }
        }
        ++row;
    }
    return row;
}

size_t integer_matrix_rank_mod_p(const std::vector<std::vector<Int>>& rows, uint64_t p) {
    if (rows.empty()) return 0;
    PrimeFieldMatrix m(p, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) {
            Int r = rows[i][j] % Int(p);
            if (r < 0) r += Int(p);
            m.at(i, j) = r.convert_to<uint64_t>();
        }
    return m.rank();
}

size_t integer_matrix_rank_exact(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    // Bareiss fraction-free elimination.
    Int prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return row;
}

Int evaluate_integer_polynomial(const std::vector<Int>& coeffs, const Int& x) {
    Int r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<Int> interpolate_integer_polynomial(
    const std::vector<std::pair<Int, Int>>& points, size_t degree_bound) {
    if (points.size() < degree_bound + 1)
        throw DomainError("interpolate: need at least degree_bound+1 points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw DomainError("interpolate: duplicate evaluation points");

    size_t n = degree_bound + 1;
    // Newton divided differences on the first n points, exact rationals.
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rat(points[i].second);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i].first - points[i - level].first);
            if (i == level) break;
        }
    // Expand the Newton form into monomial coefficients.
    std::vector<Rat> coeffs(n, Rat(0));
    std::vector<Rat> basis(n, Rat(0)); // product (x - q_0)...(x - q_{k-1})
    basis[0] = 1;
    size_t basis_deg = 0;
    for (size_t k = 0; k < n; ++k) {
        for (size_t j = 0; j <= basis_deg; ++j) coeffs[j] += dd[k] * basis[j];
        if (k + 1 < n) {
            Rat q(points[k].first);
            for (size_t j = basis_deg + 1; j > 0; --j)
                basis[j] = basis[j - 1] - q * basis[j];
            basis[0] = -q * basis[0];
            ++basis_deg;
        }
    }
    std::vector<Int> result(n);
    for (size_t j = 0; j < n; ++j) {
        if (denominator(coeffs[j]) != 1)
            throw InconsistencyError("interpolate: non-integral coefficient");
        result[j] = numerator(coeffs[j]);
    }
    for (size_t i = n; i < points.size(); ++i)
        if (evaluate_integer_polynomial(result, points[i].first) != points[i].second)
            throw InconsistencyError("interpolate: overdetermined data inconsistent");
    while (result.size() > 1 && result.back() == 0) result.pop_back();
    return result;
}

std::optional<std::vector<Rat>> fourier_motzkin_feasible(
    std::vector<StrictInequality> system, size_t num_vars) {
    // snapshots[k] still mentions variables 0..k.
    std::vector<std::vector<StrictInequality>> snapshots(num_vars);
    for (size_t k = num_vars; k-- > 0;) {
        snapshots[k] = system;
        std::vector<StrictInequality> next;
        std::vector<const StrictInequality*> uppers, lowers;
        for (const auto& ineq : system) {
            if (ineq.a[k] > 0)
                uppers.push_back(&ineq);
            else if (ineq.a[k] < 0)
                lowers.push_back(&ineq);
            else
                next.push_back(ineq);
        }
        for (const auto* u : uppers)
            for (const auto* l : lowers) {
                StrictInequality combo;
                combo.a.assign(num_vars, Rat(0));
                Rat alpha = u->a[k], beta = -l->a[k];
                for (size_t j = 0; j < num_vars; ++j)
                    combo.a[j] = beta * u->a[j] + alpha * l->a[j];
                combo.c = beta * u->c + alpha * l->c;
                next.push_back(std::move(combo));
            }
        system = std::move(next);
    }
    for (const auto& ineq : system)
        if (!(Rat(0) < ineq.c)) return std::nullopt;

    std::vector<Rat> x(num_vars, Rat(0));
    for (size_t k = 0; k < num_vars; ++k) {
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (const auto& ineq : snapshots[k]) {
            if (ineq.a[k] == 0) continue;
            Rat resid = ineq.c;
            for (size_t j = 0; j < k; ++j) resid -= ineq.a[j] * x[j];
            Rat bound = resid / ineq.a[k];
            if (ineq.a[k] > 0) {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            } else {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            }
        }
        if (has_lo && has_hi)
            x[k] = (lo + hi) / 2;
        else if (has_hi)
            x[k] = hi - 1;
        else if (has_lo)
            x[k] = lo + 1;
    }
    return x;
}

bool nonnegative_solution_exists(const RationalMatrix& A, const std::vector<Rat>& b) {
    // Caratheodory for cones: b lies in the cone of the columns iff some
    // linearly independent column subset expresses it nonnegatively.
    size_t n = A.cols();
    bool b_zero = true;
    for (const Rat& x : b)
        if (x != 0) b_zero = false;
    if (b_zero) return true;
    for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
        std::vector<size_t> cols;
        for (size_t j = 0; j < n; ++j)
            if (mask & (1ull << j)) cols.push_back(j);
        if (cols.size() > A.rows()) continue;
        RationalMatrix sub(A.rows(), cols.size());
        for (size_t i = 0; i < A.rows(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = A.at(i, cols[j]);
        auto sol = sub.solve(b);
        if (!sol) continue;
        bool ok = true;
        for (const Rat& c : *sol)
            if (c < 0) ok = false;
        if (!ok) continue;
        // Confirm the combination reproduces b (solve guarantees it), done.
        return true;
    }
    return false;
}

} // namespace clusterforge
