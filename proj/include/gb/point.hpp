#ifndef GB_POINT_HPP
#define GB_POINT_HPP

#include <cmath>
#include <vector>

namespace gb {

/// Point in R^s, s >= 1. Scalar configurations use s = 1.
using Point = std::vector<double>;

inline double squared_distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        s += diff * diff;
    }
    return s;
}

inline double distance(const Point& a, const Point& b) {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace gb

#endif
