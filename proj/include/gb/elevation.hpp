#ifndef GB_ELEVATION_HPP
#define GB_ELEVATION_HPP

#include <cstddef>
#include <vector>

#include "gb/errors.hpp"
#include "gb/exponents.hpp"
#include "gb/point.hpp"

namespace gb {

/// Polygon (P_0, ..., P_{n+level}) after `level` corner-cutting steps.
struct ControlPolygon {
    std::vector<Point> points;
    std::size_t level = 0;

    std::size_t dimension() const { return points.front().size(); }
    void validate() const;
};

/**
 * @brief One corner-cutting / dimension-elevation step.
 *
 * With L = current point count, the new polygon keeps both endpoints and
 * replaces the interior by P'_i = (r_i/r_L) P_{i-1} + (1 - r_i/r_L) P_i.
 * Each weight is computed once so the two coefficients sum to 1 exactly and
 * the step is affine-invariant bit for bit.
 */
ControlPolygon elevate_once(const ControlPolygon& poly, const ExponentSequence& seq);

/// Scalar form of the same step, applied until the vector has m+1 entries.
std::vector<double> elevate_coefficients(std::vector<double> coeffs,
                                         const ExponentSequence& seq, std::size_t m);

/// Levels of the iteration from the input polygon up to point count m+1.
struct ElevationTrace {
    std::vector<ControlPolygon> polygons;
    ExponentSequence exponents;  // materialized through index m
};

/**
 * @brief Iterate the scheme until the polygon has m+1 points.
 *
 * store_every = 0 picks the storage policy automatically: every level for
 * m <= 2000, geometric checkpoints (n, 2n, 4n, ...) plus the final level
 * beyond that. store_every = 1 forces every level.
 */
ElevationTrace elevate_to(const ControlPolygon& poly, const ExponentSequence& seq,
                          std::size_t m, std::size_t store_every = 0);
ElevationTrace elevate_to(const ControlPolygon& poly, const GeneratorSpec& gen,
                          std::size_t m, std::size_t store_every = 0);

}  // namespace gb

#endif
