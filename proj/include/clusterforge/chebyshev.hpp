#ifndef CLUSTERFORGE_CHEBYSHEV_HPP
#define CLUSTERFORGE_CHEBYSHEV_HPP

#include "clusterforge/laurent.hpp"

#include <string>
#include <vector>

namespace clusterforge {

/// Univariate integer polynomial, coefficients by ascending degree.
using IntPolynomial = std::vector<Int>;

/// Normalized Chebyshev polynomials of the second kind:
/// C_{-1} = 0, C_0 = 1, C_{n+1} = x C_n - C_{n-1}.
IntPolynomial chebyshev_second(unsigned n);
/// First kind: P_n = C_n - C_{n-2} (P_0 = 1).
IntPolynomial chebyshev_first(unsigned n);

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);

enum class KroneckerFamily { ZPowers, FirstKind, SecondKind };
KroneckerFamily parse_family(const std::string& name); // "z", "P", "C"

/// (N+1) x (N+1) integer matrix expanding each element of `to` in `from`:
/// entry (r, c) is the from_r-coefficient of to_c.
struct BaseChangeMatrix {
    KroneckerFamily from, to;
    std::vector<std::vector<Int>> entries;

    size_t size() const { return entries.size(); }
    bool is_unipotent_upper() const;
    bool is_nonnegative() const;
};

BaseChangeMatrix base_change_matrix(KroneckerFamily from, KroneckerFamily to, size_t N);
/// Exact inverse; integral because the matrix is unipotent.
BaseChangeMatrix base_change_inverse(const BaseChangeMatrix& m);

/// z = (1 + u1^2 + u2^2)/(u1 u2) over variables {1, 2}.
LaurentPolynomial kronecker_z();
/// Substitute z into x^n / P_n / C_n: the imaginary-part element of the
/// chosen basis of the Kronecker cluster algebra.
LaurentPolynomial kronecker_basis_element(KroneckerFamily family, unsigned n);

/// Evaluate an integer polynomial at a Laurent-polynomial argument.
LaurentPolynomial evaluate_at(const IntPolynomial& poly, const LaurentPolynomial& x);

} // namespace clusterforge

#endif
