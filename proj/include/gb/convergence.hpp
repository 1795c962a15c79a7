#ifndef GB_CONVERGENCE_HPP
#define GB_CONVERGENCE_HPP

#include <cstddef>
#include <vector>

#include "gb/basis.hpp"
#include "gb/elevation.hpp"
#include "gb/errors.hpp"
#include "gb/exponents.hpp"

namespace gb {

/// Per-level convergence diagnostics for one elevation run.
struct ConvergenceReport {
    std::vector<std::size_t> levels;
    std::vector<double> coeff_error;     ///< max_i |b_i^m - P(eta_i^{1/r_1})|, max over coords
    std::vector<double> hausdorff;       ///< polygon-to-curve symmetric Hausdorff distance
    std::vector<double> delta_partial;   ///< prod_{j=2}^{m} (1 - r_1/r_j)
    std::vector<double> max_eta_gap;     ///< largest gap between consecutive eta nodes
    MuntzReport verdict;
};

/// max over i and coordinates of |b_i^m - P(eta_i(Lambda_m)^{1/r_1})|, where
/// b^m are the dimension-elevated coefficients of the curve at order m.
double coefficient_error(const GelfondCurve& curve, const GeneratorSpec& gen, std::size_t m);

/// Symmetric Hausdorff distance between the densified polygon chain and the
/// sampled curve. extra_params adds curve samples beyond the uniform grid.
double hausdorff_distance(const ControlPolygon& poly, const GelfondCurve& curve,
                          std::size_t samples, const std::vector<double>& extra_params = {});

double hausdorff_points(const std::vector<Point>& a, const std::vector<Point>& b);

/// Least-squares slope of log(coeff_error) against log(m). Levels with
/// non-positive error are dropped; fewer than three survivors raise
/// InsufficientData.
double rate_estimate(const std::vector<std::size_t>& levels, const std::vector<double>& errors);
double rate_estimate(const ConvergenceReport& report);

/// Scalar probe of the non-convergence gap:
/// elevate P = (0, 1, 1.1, 1.2, ...) of order n to order m and track the
/// second coefficient together with the distance of all coefficients from
/// the probe point at half the partial gap.
struct GapProbe {
    double delta_partial = 0.0;          ///< b_1^m from the elevation
    double min_distance_to_probe = 0.0;  ///< min_{i>=1} |b_i^m - delta_partial/2|
};

GapProbe gap_probe(const GeneratorSpec& gen, std::size_t n, std::size_t m);

/// The eta nodes eta_i(Lambda_m)^{1/r_1} and the largest empty sub-interval
/// of [0,1] they leave (the density diagnostic).
struct DensityReport {
    std::vector<double> nodes;  // ascending, nodes.front() = 0, nodes.back() = 1
    double max_gap = 0.0;
};

DensityReport density_report(const GeneratorSpec& gen, std::size_t m);

/// Assemble a per-level report for the given (ascending) level list.
ConvergenceReport build_report(const GelfondCurve& curve, const GeneratorSpec& gen,
                               const std::vector<std::size_t>& levels,
                               std::size_t curve_samples = 2000);

/// Geometric level schedule n, 2n, 4n, ... capped by and including m.
std::vector<std::size_t> checkpoint_levels(std::size_t n, std::size_t m);

}  // namespace gb

#endif
