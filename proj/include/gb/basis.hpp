#ifndef GB_BASIS_HPP
#define GB_BASIS_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "gb/errors.hpp"
#include "gb/exponents.hpp"
#include "gb/point.hpp"

namespace gb {

/**
 * @brief Triangular divided-difference table of f_t(x) = t^x at real nodes.
 *
 * column(l)[i] holds [x_i, ..., x_{i+l}] f_t. The top entry is cross-checked
 * against the symmetric-sum closed form; a relative disagreement beyond
 * kDdAgreeTol with node gaps >= 1e-3 raises the conditioning flag (a warning,
 * not an error — both forms lose digits for clustered exponents).
 */
struct DividedDifferenceTable {
    static constexpr double kDdAgreeTol = 1e-8;

    std::vector<double> nodes;  // sorted ascending
    double t = 0.0;
    std::vector<std::vector<double>> columns;  // columns[l][i] = [x_i..x_{i+l}] f_t
    double symmetric_sum = 0.0;
    bool conditioning_warning = false;

    double value() const { return columns.back().front(); }
};

/// f_t(x) = t^x with the 0^0 = 1 convention (forced by endpoint interpolation).
double power_ft(double t, double x);

/// Build the full table for pairwise-distinct nodes (any input order; sorted
/// internally — the divided difference is symmetric in its arguments).
DividedDifferenceTable divided_difference_table(std::vector<double> nodes, double t);

/// [x_0, ..., x_n] f_t by the two-term recursion.
double divided_difference(std::vector<double> nodes, double t);

/// Gelfond-Bernstein basis function H^n_{k,Lambda}(t) of the Muntz space
/// span(t^{r_0}, ..., t^{r_n}).  Uses the divided-difference definition for
/// n <= 12 and the stable full-row evaluator beyond.
double gelfond_bernstein(const ExponentSequence& seq, std::size_t k, double t);

/**
 * @brief All basis values H^n_{0..n,Lambda}(t) at once.
 *
 * Evaluates the occupation probabilities of a pure-death process: a chain
 * started in state n, leaving state j at rate r_j, sits in state k at time
 * -ln t with probability exactly H^n_{k,Lambda}(t).  Computed by
 * uniformization, which needs only nonnegative convex updates, so the row is
 * accurate for orders far beyond what divided differences can reach.
 */
std::vector<double> basis_row(const ExponentSequence& seq, double t);

/**
 * @brief Gelfond-Bezier curve: P(t) = sum_k H^n_{k,Lambda}(t) P_k on [0,1].
 *
 * Control point count equals exponent count; P(0) = P_0 and P(1) = P_n.
 */
struct GelfondCurve {
    ExponentSequence exponents;
    std::vector<Point> control_points;

    GelfondCurve(ExponentSequence exps, std::vector<Point> points);

    std::size_t order() const { return exponents.order(); }
    std::size_t dimension() const { return control_points.front().size(); }
};

Point eval_curve(const GelfondCurve& curve, double t);

/// Hirschman-Widder operator
///   B_m(f)(x) = sum_i f(eta_i(Lambda_m)^{1/r_1}) H^m_{i,Lambda_m}(x).
double hirschman_widder(const GeneratorSpec& gen, std::size_t m,
                        const std::function<double(double)>& f, double x);

/// Max absolute residuals of the three basis identities at one parameter:
/// the one-step elevation identity, the t-shift identity, and the
/// exponent-scaling identity H^n_{k,Lambda}(t^alpha) = H^n_{k,alpha Lambda}(t).
struct LemmaResiduals {
    double elevation = 0.0;  // H^n_k = w H^{n+1}_k + (1-w') H^{n+1}_{k+1} form
    double t_shift = 0.0;    // t H^n_k = prod(r_j/(r_j+1)) H^{n+1}_{k+1}
    double scaling = 0.0;    // argument power vs sequence scaling
    double max() const;
};

LemmaResiduals lemma_identities(const ExponentSequence& seq, double t, double alpha = 2.0);

}  // namespace gb

#endif
