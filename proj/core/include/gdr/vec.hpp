#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gdr {

// Dense vector for the 1-3 dimensional constructions used throughout.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// squared Euclidean norm
inline double norm2(const Vec& a) { return dot(a, a); }

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// a*x + y
inline Vec axpy(double a, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: dimension mismatch");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + y[i];
    return r;
}

inline Vec scale(double a, const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i];
    return r;
}

}  // namespace gdr
