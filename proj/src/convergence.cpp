#include "gb/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gb {

namespace {

// Brute-force nearest-neighbor cap; larger sets are subsampled by stride.
constexpr std::size_t kMaxHausdorffPoints = 2000;

std::vector<std::vector<double>> curve_coefficient_columns(const GelfondCurve& curve) {
    const std::size_t dim = curve.dimension();
    std::vector<std::vector<double>> cols(dim,
                                          std::vector<double>(curve.control_points.size()));
    for (std::size_t d = 0; d < dim; ++d)
        for (std::size_t i = 0; i < curve.control_points.size(); ++i)
            cols[d][i] = curve.control_points[i][d];
    return cols;
}

void check_prefix(const GelfondCurve& curve, const ExponentSequence& ext) {
    const std::vector<double>& a = curve.exponents.values();
    const std::vector<double>& b = ext.values();
    if (a.size() > b.size() || !std::equal(a.begin(), a.end(), b.begin()))
        throw PrefixMismatch(
            "curve exponents are not a prefix of the generator's materialization");
}

double max_abs_error_at_level(const GelfondCurve& curve,
                              const std::vector<std::vector<double>>& elevated,
                              const ExponentSequence& ext, std::size_t m) {
    const ExponentSequence lam_m = extend(ext, m);
    const std::vector<double> etas = eta_row(lam_m, 0);
    const double r1 = lam_m[1];
    double worst = 0.0;
    for (std::size_t i = 0; i <= m; ++i) {
        const double node = etas[i] > 0.0 ? std::pow(etas[i], 1.0 / r1) : 0.0;
        const Point p = eval_curve(curve, node);
        for (std::size_t d = 0; d < p.size(); ++d)
            worst = std::max(worst, std::abs(elevated[d][i] - p[d]));
    }
    return worst;
}

std::vector<Point> subsample(std::vector<Point> pts) {
    if (pts.size() <= kMaxHausdorffPoints) return pts;
    std::vector<Point> out;
    const double stride = static_cast<double>(pts.size() - 1) /
                          static_cast<double>(kMaxHausdorffPoints - 1);
    out.reserve(kMaxHausdorffPoints);
    for (std::size_t i = 0; i < kMaxHausdorffPoints; ++i)
        out.push_back(pts[static_cast<std::size_t>(std::lround(i * stride))]);
    return out;
}

double directed_hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
    double worst = 0.0;
    for (const Point& p : a) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& q : b) best = std::min(best, squared_distance(p, q));
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

// All vertices plus interior points distributed by arc length, so long edges
// are resolved as finely as short ones.
std::vector<Point> densify_chain(const std::vector<Point>& pts, std::size_t min_points) {
    if (pts.size() < 2) return pts;
    const std::size_t edges = pts.size() - 1;
    double total = 0.0;
    std::vector<double> len(edges);
    for (std::size_t e = 0; e < edges; ++e) {
        len[e] = distance(pts[e], pts[e + 1]);
        total += len[e];
    }
    const double spacing = total > 0.0 ? total / static_cast<double>(min_points) : 0.0;
    std::vector<Point> out;
    out.reserve(min_points + pts.size());
    for (std::size_t e = 0; e < edges; ++e) {
        const Point& a = pts[e];
        const Point& b = pts[e + 1];
        const std::size_t per_edge =
            spacing > 0.0 ? static_cast<std::size_t>(std::ceil(len[e] / spacing)) : 1;
        for (std::size_t s = 0; s < std::max<std::size_t>(per_edge, 1); ++s) {
            const double u = static_cast<double>(s) / static_cast<double>(per_edge > 0 ? per_edge : 1);
            Point p(a.size());
            for (std::size_t d = 0; d < a.size(); ++d) p[d] = a[d] + u * (b[d] - a[d]);
            out.push_back(std::move(p));
        }
    }
    out.push_back(pts.back());
    return out;
}

}  // namespace

double coefficient_error(const GelfondCurve& curve, const GeneratorSpec& gen, std::size_t m) {
    if (m < 1 || m < curve.order())
        throw InvalidArgument("coefficient_error: m must be >= max(1, curve order)");
    const ExponentSequence ext = extend(gen, m);
    check_prefix(curve, ext);
    const std::size_t dim = curve.dimension();
    std::vector<std::vector<double>> cols = curve_coefficient_columns(curve);
    std::vector<std::vector<double>> elevated(dim);
    for (std::size_t d = 0; d < dim; ++d)
        elevated[d] = elevate_coefficients(cols[d], ext, m);
    return max_abs_error_at_level(curve, elevated, ext, m);
}

double hausdorff_points(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty()) throw InvalidArgument("hausdorff_points: empty point set");
    const std::vector<Point> sa = subsample(a);
    const std::vector<Point> sb = subsample(b);
    return std::max(directed_hausdorff(sa, sb), directed_hausdorff(sb, sa));
}

double hausdorff_distance(const ControlPolygon& poly, const GelfondCurve& curve,
                          std::size_t samples, const std::vector<double>& extra_params) {
    if (samples < 2) throw InvalidArgument("hausdorff_distance: samples must be >= 2");
    poly.validate();
    // Stay under the brute-force cap without striding, so polygon vertices
    // and the extra curve parameters survive intact.
    std::vector<double> extras = extra_params;
    if (extras.size() > kMaxHausdorffPoints / 2) {
        std::vector<double> thinned;
        const double stride = static_cast<double>(extras.size() - 1) /
                              static_cast<double>(kMaxHausdorffPoints / 2 - 1);
        for (std::size_t i = 0; i < kMaxHausdorffPoints / 2; ++i)
            thinned.push_back(extras[static_cast<std::size_t>(std::lround(i * stride))]);
        extras = std::move(thinned);
    }
    const std::size_t uniform = std::min(samples, kMaxHausdorffPoints - extras.size());
    std::vector<Point> curve_pts;
    curve_pts.reserve(uniform + extras.size());
    for (std::size_t i = 0; i < uniform; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(uniform - 1);
        curve_pts.push_back(eval_curve(curve, t));
    }
    for (double t : extras) curve_pts.push_back(eval_curve(curve, t));
    const std::size_t interior =
        poly.points.size() < kMaxHausdorffPoints
            ? std::min(samples, kMaxHausdorffPoints - poly.points.size())
            : 0;
    const std::vector<Point> chain =
        interior > 0 ? densify_chain(poly.points, interior) : poly.points;
    return hausdorff_points(chain, curve_pts);
}

double rate_estimate(const std::vector<std::size_t>& levels, const std::vector<double>& errors) {
    if (levels.size() != errors.size())
        throw InvalidArgument("rate_estimate: level/error size mismatch");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (errors[i] > 0.0 && std::isfinite(errors[i])) {
            xs.push_back(std::log(static_cast<double>(levels[i])));
            ys.push_back(std::log(errors[i]));
        }
    }
    if (xs.size() < 3)
        throw InsufficientData("rate_estimate: need >= 3 levels with positive error");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0.0) throw InsufficientData("rate_estimate: degenerate level spread");
    return num / den;
}

double rate_estimate(const ConvergenceReport& report) {
    return rate_estimate(report.levels, report.coeff_error);
}

GapProbe gap_probe(const GeneratorSpec& gen, std::size_t n, std::size_t m) {
    if (n < 1) throw InvalidArgument("gap_probe: n must be >= 1");
    if (m < n) throw InvalidArgument("gap_probe: m must be >= n");
    const ExponentSequence ext = extend(gen, m);
    // Scalar witness configuration: P_0 = 0, P_1 = 1, then any strictly
    // increasing tail; a fixed tail keeps runs reproducible.
    std::vector<double> coeffs(n + 1);
    coeffs[0] = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
        coeffs[j] = 1.0 + 0.1 * static_cast<double>(j - 1);
    const std::vector<double> b = elevate_coefficients(coeffs, ext, m);
    GapProbe probe;
    probe.delta_partial = b[1];
    const double x = probe.delta_partial / 2.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < b.size(); ++i) best = std::min(best, std::abs(b[i] - x));
    probe.min_distance_to_probe = best;
    return probe;
}

DensityReport density_report(const GeneratorSpec& gen, std::size_t m) {
    if (m < 1) throw InvalidArgument("density_report: m must be >= 1");
    const ExponentSequence ext = extend(gen, m);
    const double r1 = ext[1];
    if (!(r1 > 0.0)) throw InvalidArgument("density_report: r_1 must be positive");
    const std::vector<double> etas = eta_row(ext, 0);
    DensityReport rep;
    rep.nodes.reserve(etas.size());
    for (double e : etas) rep.nodes.push_back(e > 0.0 ? std::pow(e, 1.0 / r1) : 0.0);
    // eta is nondecreasing in i and the power map preserves order.
    for (std::size_t i = 1; i < rep.nodes.size(); ++i)
        rep.max_gap = std::max(rep.max_gap, rep.nodes[i] - rep.nodes[i - 1]);
    return rep;
}

std::vector<std::size_t> checkpoint_levels(std::size_t n, std::size_t m) {
    std::vector<std::size_t> levels;
    std::size_t mark = std::max<std::size_t>(n, 1);
    while (mark < m) {
        levels.push_back(mark);
        mark *= 2;
    }
    levels.push_back(m);
    if (levels.front() != n) levels.insert(levels.begin(), n);
    return levels;
}

ConvergenceReport build_report(const GelfondCurve& curve, const GeneratorSpec& gen,
                               const std::vector<std::size_t>& levels,
                               std::size_t curve_samples) {
    if (levels.empty()) throw InvalidArgument("build_report: no levels");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i] <= levels[i - 1])
            throw InvalidArgument("build_report: levels must be strictly increasing");
    const std::size_t n = curve.order();
    if (levels.front() < n) throw InvalidArgument("build_report: levels start below n");
    if (levels.back() < 1) throw InvalidArgument("build_report: needs at least order 1");
    const std::size_t m_max = levels.back();
    const ExponentSequence ext = extend(gen, m_max);
    check_prefix(curve, ext);

    ConvergenceReport rep;
    rep.levels = levels;
    rep.verdict = muntz_condition(gen);

    // One elevation sweep per coordinate, snapshotting at requested levels.
    const std::size_t dim = curve.dimension();
    std::vector<std::vector<double>> cols = curve_coefficient_columns(curve);
    std::size_t next = 0;
    for (std::size_t order = n; order <= m_max && next < levels.size(); ++order) {
        if (order > n)
            for (std::size_t d = 0; d < dim; ++d)
                cols[d] = elevate_coefficients(std::move(cols[d]), ext, order);
        if (order != levels[next]) continue;
        ++next;

        rep.coeff_error.push_back(max_abs_error_at_level(curve, cols, ext, order));

        ControlPolygon poly;
        poly.level = order - n;
        poly.points.assign(order + 1, Point(dim, 0.0));
        for (std::size_t i = 0; i <= order; ++i)
            for (std::size_t d = 0; d < dim; ++d) poly.points[i][d] = cols[d][i];
        const ExponentSequence lam = extend(ext, order);
        const std::vector<double> etas = eta_row(lam, 0);
        std::vector<double> extra;
        extra.reserve(etas.size());
        const double r1 = lam[1];
        for (double e : etas) extra.push_back(e > 0.0 ? std::pow(e, 1.0 / r1) : 0.0);
        rep.hausdorff.push_back(hausdorff_distance(poly, curve, curve_samples, extra));

        double lsum = 0.0;
        for (std::size_t j = 2; j <= order; ++j) lsum += std::log1p(-ext[1] / ext[j]);
        rep.delta_partial.push_back(std::exp(lsum));

        double gap = 0.0;
        for (std::size_t i = 1; i < extra.size(); ++i)
            gap = std::max(gap, extra[i] - extra[i - 1]);
        rep.max_eta_gap.push_back(gap);
    }
    return rep;
}

}  // namespace gb
