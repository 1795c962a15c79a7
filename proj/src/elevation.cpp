#include "gb/elevation.hpp"

#include <cmath>

namespace gb {

void ControlPolygon::validate() const {
    if (points.empty()) throw InvalidArgument("ControlPolygon: no points");
    const std::size_t dim = points.front().size();
    if (dim == 0) throw InvalidArgument("ControlPolygon: zero-dimensional points");
    for (const Point& p : points) {
        if (p.size() != dim) throw InvalidArgument("ControlPolygon: inconsistent dimensions");
        for (double c : p)
            if (!std::isfinite(c)) throw InvalidArgument("ControlPolygon: non-finite coordinate");
    }
}

namespace {

// Shared step: out gets length L+1 from length L, dividing by r_L.
template <typename Row>
std::vector<Row> elevate_rows(const std::vector<Row>& rows, const ExponentSequence& seq,
                              std::size_t length) {
    if (seq.size() < length + 1)
        throw SequenceTooShort("elevation: sequence must reach index " + std::to_string(length));
    const double r_top = seq[length];
    std::vector<Row> out;
    out.reserve(rows.size());
    for (const Row& row : rows) {
        Row next;
        next.reserve(length + 1);
        next.push_back(row.front());
        for (std::size_t i = 1; i < length; ++i) {
            const double w = seq[i] / r_top;
            if (!(w > 0.0 && w < 1.0))
                throw WeightOutOfRange("elevation: weight r_i/r_top outside (0,1) at i=" +
                                       std::to_string(i));
            next.push_back(w * row[i - 1] + (1.0 - w) * row[i]);
        }
        next.push_back(row.back());
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace

ControlPolygon elevate_once(const ControlPolygon& poly, const ExponentSequence& seq) {
    poly.validate();
    const std::size_t length = poly.points.size();
    const std::size_t dim = poly.dimension();
    if (length == 1) {
        // Degenerate single-point polygon: the interior index range is empty
        // and both endpoint rules copy the point.
        ControlPolygon out;
        out.points = {poly.points.front(), poly.points.front()};
        out.level = poly.level + 1;
        return out;
    }
    // Per-coordinate scalar rows share the weight computation.
    std::vector<std::vector<double>> rows(dim, std::vector<double>(length));
    for (std::size_t d = 0; d < dim; ++d)
        for (std::size_t i = 0; i < length; ++i) rows[d][i] = poly.points[i][d];
    rows = elevate_rows(rows, seq, length);
    ControlPolygon out;
    out.level = poly.level + 1;
    out.points.assign(length + 1, Point(dim, 0.0));
    for (std::size_t i = 0; i <= length; ++i)
        for (std::size_t d = 0; d < dim; ++d) out.points[i][d] = rows[d][i];
    return out;
}

std::vector<double> elevate_coefficients(std::vector<double> coeffs,
                                         const ExponentSequence& seq, std::size_t m) {
    if (coeffs.empty()) throw InvalidArgument("elevate_coefficients: empty input");
    if (coeffs.size() > m + 1)
        throw InvalidArgument("elevate_coefficients: input already longer than m+1");
    while (coeffs.size() < m + 1) {
        std::vector<std::vector<double>> rows{std::move(coeffs)};
        if (rows[0].size() == 1) {
            rows[0].push_back(rows[0][0]);
        } else {
            rows = elevate_rows(rows, seq, rows[0].size());
        }
        coeffs = std::move(rows[0]);
    }
    return coeffs;
}

namespace {

ElevationTrace elevate_trace(const ControlPolygon& poly, ExponentSequence seq, std::size_t m,
                             std::size_t store_every) {
    poly.validate();
    const std::size_t start = poly.points.size() - 1;
    if (m < start) throw InvalidArgument("elevate_to: m is below the current polygon order");
    if (seq.size() < m + 1) seq = extend(seq, m);

    const bool geometric = store_every == 0 && m > 2000;
    auto keep = [&](std::size_t order) {
        if (order == start || order == m) return true;
        if (store_every >= 1) return (order - start) % store_every == 0;
        if (!geometric) return true;
        // geometric checkpoints start, 2*start, 4*start, ... (start >= 1)
        std::size_t mark = start == 0 ? 1 : start;
        while (mark < order) mark *= 2;
        return mark == order;
    };

    ElevationTrace trace{{}, seq};
    ControlPolygon cur = poly;
    if (keep(start)) trace.polygons.push_back(cur);
    for (std::size_t order = start; order < m; ++order) {
        cur = elevate_once(cur, seq);
        if (keep(order + 1)) trace.polygons.push_back(cur);
    }
    return trace;
}

}  // namespace

ElevationTrace elevate_to(const ControlPolygon& poly, const ExponentSequence& seq,
                          std::size_t m, std::size_t store_every) {
    return elevate_trace(poly, seq, m, store_every);
}

ElevationTrace elevate_to(const ControlPolygon& poly, const GeneratorSpec& gen,
                          std::size_t m, std::size_t store_every) {
    return elevate_trace(poly, ExponentSequence::from_generator(gen), m, store_every);
}

}  // namespace gb
