#ifndef CLUSTERFORGE_LAURENT_HPP
#define CLUSTERFORGE_LAURENT_HPP

#include "clusterforge/errors.hpp"
#include "clusterforge/numbers.hpp"

#include <map>
#include <string>
#include <vector>

namespace clusterforge {

/*
  Exact multivariate Laurent polynomials over arbitrary-precision integers.

  A polynomial carries the ordered list of variable labels (one per quiver
  vertex, printed as u<label>) and a finite map from integer exponent
  vectors to nonzero coefficients.  The term map is kept canonical at all
  times: no zero coefficient is ever stored and exponent vectors always
  have length equal to the number of variables, so equality of values is
  equality of representations.  Exponent vectors compare lexicographically;
  this fixes the canonical string form used by the CLI and golden tests.
*/
class LaurentPolynomial {
public:
    using Exponents = std::vector<long long>;
    using TermMap = std::map<Exponents, Int>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::vector<int> variables)
        : vars_(std::move(variables)) {}

    static LaurentPolynomial zero(std::vector<int> variables) {
        return LaurentPolynomial(std::move(variables));
    }
    static LaurentPolynomial constant(std::vector<int> variables, Int c);
    /// The monomial c * u_{vars[index]}^{power}.
    static LaurentPolynomial monomial(std::vector<int> variables, size_t index,
                                      long long power, Int c = 1);
    static LaurentPolynomial from_terms(std::vector<int> variables, TermMap terms);

    const std::vector<int>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    void add_term(const Exponents& e, const Int& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    bool operator==(const LaurentPolynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    LaurentPolynomial pow(unsigned n) const;

    /// Shift every exponent vector by e (multiplication by the monomial u^e).
    LaurentPolynomial shifted(const Exponents& e) const;

    /// Coefficient of u^e (zero when absent).
    Int coefficient(const Exponents& e) const;

    /// Componentwise minimum of the exponent vectors; zero vector when empty.
    Exponents min_exponents() const;

    /// Exact evaluation at a rational point (all coordinates nonzero).
    Rat evaluate(const std::vector<Rat>& point) const;

    /// Canonical display form, terms in lexicographic exponent order.
    std::string str() const;

private:
    void check_compatible(const LaurentPolynomial& o) const;

    std::vector<int> vars_;
    TermMap terms_;
};

/// Exact quotient q with q*b == a; throws DivisibilityError when a is not
/// divisible by b in the Laurent ring, DomainError when b == 0.
LaurentPolynomial laurent_divide_exact(const LaurentPolynomial& a,
                                       const LaurentPolynomial& b);

/// Denominator vector: the unique d with f * prod u_i^{d_i} a polynomial not
/// divisible by any u_i, i.e. d_i = -(minimal u_i-exponent of f).
DimVec denominator_vector(const LaurentPolynomial& f);

} // namespace clusterforge

#endif
