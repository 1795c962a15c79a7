#include "gb/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gb/errors.hpp"

namespace gb {

SvgWriter::SvgWriter(double width, double margin_fraction)
    : width_(width), margin_fraction_(margin_fraction) {}

void SvgWriter::add_polyline(const std::vector<Point>& pts, const std::string& stroke,
                             double stroke_width) {
    if (pts.empty()) return;
    if (pts.front().size() != 2) throw InvalidArgument("SvgWriter: expects 2D points");
    elements_.push_back({false, pts, stroke, stroke_width});
}

void SvgWriter::add_path(const std::vector<Point>& pts, const std::string& stroke,
                         double stroke_width) {
    if (pts.empty()) return;
    if (pts.front().size() != 2) throw InvalidArgument("SvgWriter: expects 2D points");
    elements_.push_back({true, pts, stroke, stroke_width});
}

std::string SvgWriter::str() const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Element& el : elements_) {
        for (const Point& p : el.pts) {
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    }
    if (elements_.empty()) {
        xmin = ymin = 0.0;
        xmax = ymax = 1.0;
    }
    double span_x = xmax - xmin, span_y = ymax - ymin;
    if (span_x <= 0.0) span_x = 1.0;
    if (span_y <= 0.0) span_y = 1.0;
    const double margin = margin_fraction_ * std::max(span_x, span_y);
    const double scale = (width_ - 2.0 * width_ * margin_fraction_) / span_x;
    const double height = span_y * scale + 2.0 * margin * scale;
    const double pad = margin * scale;

    auto map_x = [&](double x) { return pad + (x - xmin) * scale; };
    auto map_y = [&](double y) { return height - pad - (y - ymin) * scale; };  // y up

    char buf[64];
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width_ << " " << height << "\">\n";
    for (const Element& el : elements_) {
        if (el.is_path) {
            out << "  <path fill=\"none\" stroke=\"" << el.stroke << "\" stroke-width=\""
                << el.stroke_width << "\" d=\"";
            for (std::size_t i = 0; i < el.pts.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%c%.6g %.6g", i == 0 ? 'M' : 'L',
                              map_x(el.pts[i][0]), map_y(el.pts[i][1]));
                out << (i == 0 ? "" : " ") << buf;
            }
            out << "\"/>\n";
        } else {
            out << "  <polyline fill=\"none\" stroke=\"" << el.stroke << "\" stroke-width=\""
                << el.stroke_width << "\" points=\"";
            for (std::size_t i = 0; i < el.pts.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%.6g,%.6g", map_x(el.pts[i][0]),
                              map_y(el.pts[i][1]));
                out << (i == 0 ? "" : " ") << buf;
            }
            out << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gb
