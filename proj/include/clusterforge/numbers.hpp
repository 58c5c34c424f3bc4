#ifndef CLUSTERFORGE_NUMBERS_HPP
#define CLUSTERFORGE_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace clusterforge {

// Exact coefficient arithmetic. Laurent coefficients are integers by
// construction (Euler characteristics); rationals appear only inside
// linear-algebra routines.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dimension vectors, exponent vectors and integer covectors.
using DimVec = std::vector<long long>;

inline DimVec operator+(const DimVec& a, const DimVec& b) {
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline DimVec operator-(const DimVec& a, const DimVec& b) {
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline DimVec operator*(long long c, const DimVec& a) {
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const DimVec& a) {
    for (long long x : a)
        if (x != 0) return false;
    return true;
}

inline bool leq(const DimVec& a, const DimVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline long long sum(const DimVec& a) {
    long long s = 0;
    for (long long x : a) s += x;
    return s;
}

/// Componentwise positive and negative parts, d = [d]_+ + [d]_-.
inline DimVec positive_part(const DimVec& d) {
    DimVec r(d.size());
    for (size_t i = 0; i < d.size(); ++i) r[i] = d[i] > 0 ? d[i] : 0;
    return r;
}

inline DimVec negative_part(const DimVec& d) {
    DimVec r(d.size());
    for (size_t i = 0; i < d.size(); ++i) r[i] = d[i] < 0 ? d[i] : 0;
    return r;
}

inline DimVec unit_vector(size_t n, size_t i, long long c = 1) {
    DimVec r(n, 0);
    r[i] = c;
    return r;
}

std::string to_string(const DimVec& d);

} // namespace clusterforge

#endif
