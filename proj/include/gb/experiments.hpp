#ifndef GB_EXPERIMENTS_HPP
#define GB_EXPERIMENTS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gb/convergence.hpp"
#include "gb/elevation.hpp"
#include "gb/exponents.hpp"
#include "gb/point.hpp"

namespace gb {

/// One corner-cutting experiment: a generator, a start polygon, an iteration
/// count, and the artifact files to emit.
struct ExperimentConfig {
    std::string name = "run";
    GeneratorSpec generator;
    std::vector<Point> control_points;
    std::size_t iterations = 100;
    std::set<std::string> outputs = {"polygons.csv", "report.csv", "report.json",
                                     "figure.svg"};
    std::uint64_t seed = 0;
    std::size_t random_points = 0;  ///< when > 0, draw this many control points from seed
    std::size_t random_dim = 2;
    /// Additional reference-curve exponent lists (r_1.., r_0 = 0 implicit)
    /// drawn over the same polygon in the SVG.
    std::vector<std::vector<double>> extra_curve_exponents;

    void validate() const;
};

/// Built-in experiments named after the reference configurations:
/// fig1, fig2, fig3, fig4, fig4alt, fig5a, fig5b, fig6.
ExperimentConfig named_experiment(const std::string& name);
std::vector<std::string> named_experiment_list();

/// Parse an ExperimentConfig from JSON text; errors carry the field name.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

GeneratorSpec generator_from_json_text(const std::string& json_text);

/// Paths of the files an experiment run produced.
struct ExperimentResult {
    std::vector<std::string> files;
    ConvergenceReport report;
};

ExperimentResult run_experiment(const ExperimentConfig& config, const std::string& out_dir);

/// Round-trip decimal formatting (17 significant digits).
std::string format_full(double v);

}  // namespace gb

#endif
