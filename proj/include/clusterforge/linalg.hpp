#ifndef CLUSTERFORGE_LINALG_HPP
#define CLUSTERFORGE_LINALG_HPP

#include "clusterforge/errors.hpp"
#include "clusterforge/numbers.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace clusterforge {

/// Dense matrix over exact rationals.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    static RationalMatrix identity(size_t n);
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix transpose() const;

    size_t rank() const;
    /// Dimension of the right null space.
    size_t nullity() const { return cols_ - rank(); }
    /// Basis of the right null space, one vector per column of the result.
    std::vector<std::vector<Rat>> nullspace() const;
    /// Inverse; throws DomainError when singular.
    RationalMatrix inverse() const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    /// One solution of A x = b, or nullopt when inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Dense matrix over the prime field F_p, entries reduced mod p.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(uint64_t p, size_t rows, size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    uint64_t modulus() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint64_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    uint64_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint64_t v) { a_[i * cols_ + j] = v % p_; }

    size_t rank() const;

private:
    uint64_t p_;
    size_t rows_, cols_;
    std::vector<uint64_t> a_;
};

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p);
uint64_t mod_inverse(uint64_t a, uint64_t p);

/// Rank over F_p of an integer matrix given as rows.
size_t integer_matrix_rank_mod_p(const std::vector<std::vector<Int>>& rows, uint64_t p);
/// Exact rank over Q of an integer matrix (fraction-free elimination).
size_t integer_matrix_rank_exact(std::vector<std::vector<Int>> rows);

/// Unique integer polynomial through the points, degree <= degree_bound.
/// Coefficients by ascending degree.  Throws DomainError with too few
/// points, InconsistencyError on non-integral coefficients or when extra
/// points contradict the interpolant.
std::vector<Int> interpolate_integer_polynomial(
    const std::vector<std::pair<Int, Int>>& points, size_t degree_bound);

Int evaluate_integer_polynomial(const std::vector<Int>& coeffs, const Int& x);

/*
  Exact Fourier-Motzkin elimination for strict rational inequalities
  a . x < c.  Desk-scale: the constraint set stays tiny for every use in
  this project (grading forms, support cones).
*/
struct StrictInequality {
    std::vector<Rat> a;
    Rat c;
};

/// A rational point satisfying every inequality, or nullopt when infeasible.
std::optional<std::vector<Rat>> fourier_motzkin_feasible(
    std::vector<StrictInequality> system, size_t num_vars);

/// Feasibility of { A x = b, x >= 0 } over Q (exact, via slack elimination).
bool nonnegative_solution_exists(const RationalMatrix& A, const std::vector<Rat>& b);

} // namespace clusterforge

#endif
