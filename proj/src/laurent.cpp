#include "clusterforge/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace clusterforge {

std::string to_string(const DimVec& d) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) os << ',';
        os << d[i];
    }
    os << ']';
    return os.str();
}

LaurentPolynomial LaurentPolynomial::constant(std::vector<int> variables, Int c) {
    LaurentPolynomial p(std::move(variables));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = std::move(c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<int> variables, size_t index,
                                              long long power, Int c) {
    LaurentPolynomial p(std::move(variables));
    if (index >= p.vars_.size()) throw DomainError("monomial: variable index out of range");
    if (c != 0) {
        Exponents e(p.vars_.size(), 0);
        e[index] = power;
        p.terms_[e] = std::move(c);
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<int> variables, TermMap terms) {
    LaurentPolynomial p(std::move(variables));
    for (auto& [e, c] : terms) {
        if (e.size() != p.vars_.size())
            throw DomainError("from_terms: exponent vector length mismatch");
        if (c != 0) p.terms_[e] = std::move(c);
    }
    return p;
}

bool LaurentPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == Exponents(vars_.size(), 0);
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
    if (vars_ != o.vars_)
        throw DomainError("Laurent polynomials over different variable lists");
}

void LaurentPolynomial::add_term(const Exponents& e, const Int& c) {
    if (e.size() != vars_.size())
        throw DomainError("add_term: exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    check_compatible(o);
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    check_compatible(o);
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    check_compatible(o);
    LaurentPolynomial r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
    LaurentPolynomial r = constant(vars_, 1);
    LaurentPolynomial base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponents& e) const {
    if (e.size() != vars_.size()) throw DomainError("shifted: exponent length mismatch");
    LaurentPolynomial r(vars_);
    Exponents f(vars_.size());
    for (const auto& [ea, c] : terms_) {
        for (size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + e[i];
        r.terms_[f] = c;
    }
    return r;
}

Int LaurentPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPolynomial::Exponents LaurentPolynomial::min_exponents() const {
    Exponents m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

Rat LaurentPolynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw DomainError("evaluate: wrong point size");
    for (const Rat& x : point)
        if (x == 0) throw DomainError("evaluate: Laurent polynomials need nonzero coordinates");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat t(c);
        for (size_t i = 0; i < e.size(); ++i) {
            long long k = e[i];
            Rat base = k >= 0 ? point[i] : Rat(denominator(point[i]), numerator(point[i]));
            unsigned long long a = k >= 0 ? (unsigned long long)k : (unsigned long long)(-k);
            while (a) {
                if (a & 1ull) t *= base;
                a >>= 1ull;
                if (a) base *= base;
            }
        }
        total += t;
    }
    return total;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_factor = false;
        std::ostringstream factors;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_factor) factors << '*';
            factors << 'u' << vars_[i];
            if (e[i] != 1) factors << '^' << e[i];
            any_factor = true;
        }
        if (!any_factor) {
            os << a;
        } else if (a == 1) {
            os << factors.str();
        } else {
            os << a << '*' << factors.str();
        }
    }
    return os.str();
}

namespace {

// Exact division of honest polynomials (all exponents >= 0) over Z by the
// lexicographically-leading term of b.  Exactness makes the greedy loop
// terminate with remainder zero; any failure means non-divisibility.
LaurentPolynomial polynomial_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    const auto& lead = *b.terms().rbegin();
    LaurentPolynomial r = a;
    LaurentPolynomial q(a.variables());
    LaurentPolynomial::Exponents diff(a.variables().size());
    while (!r.is_zero()) {
        const auto& rl = *r.terms().rbegin();
        for (size_t i = 0; i < diff.size(); ++i) {
            diff[i] = rl.first[i] - lead.first[i];
            if (diff[i] < 0) throw DivisibilityError("laurent_divide_exact: monomial obstruction");
        }
        if (rl.second % lead.second != 0)
            throw DivisibilityError("laurent_divide_exact: coefficient obstruction");
        Int qc = rl.second / lead.second;
        q.add_term(diff, qc);
        LaurentPolynomial t(a.variables());
        t.add_term(diff, qc);
        r -= t * b;
    }
    return q;
}

} // namespace

LaurentPolynomial laurent_divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.variables() != b.variables())
        throw DomainError("laurent_divide_exact: variable lists differ");
    if (b.is_zero()) throw DomainError("laurent_divide_exact: division by zero");
    if (a.is_zero()) return LaurentPolynomial::zero(a.variables());

    // Normalizing both operands by their monomial content reduces the
    // problem to exact division in the polynomial ring; the dropped
    // monomial factor is a unit of the Laurent ring.
    auto ma = a.min_exponents();
    auto mb = b.min_exponents();
    LaurentPolynomial::Exponents neg(ma.size());
    for (size_t i = 0; i < ma.size(); ++i) neg[i] = -ma[i];
    LaurentPolynomial A = a.shifted(neg);
    for (size_t i = 0; i < mb.size(); ++i) neg[i] = -mb[i];
    LaurentPolynomial B = b.shifted(neg);

    LaurentPolynomial q = polynomial_divide(A, B);
    for (size_t i = 0; i < ma.size(); ++i) neg[i] = ma[i] - mb[i];
    return q.shifted(neg);
}

DimVec denominator_vector(const LaurentPolynomial& f) {
    if (f.is_zero()) throw DomainError("denominator_vector: zero polynomial");
    auto m = f.min_exponents();
    DimVec d(m.size());
    for (size_t i = 0; i < m.size(); ++i) d[i] = -m[i];
    return d;
}

} // namespace clusterforge
