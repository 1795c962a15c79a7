#ifndef GB_SVG_HPP
#define GB_SVG_HPP

#include <string>
#include <vector>

#include "gb/point.hpp"

namespace gb {

/// Minimal fixed-style SVG assembler for 2D polylines and curve paths.
class SvgWriter {
public:
    SvgWriter(double width = 800.0, double margin_fraction = 0.05);

    void add_polyline(const std::vector<Point>& pts, const std::string& stroke,
                      double stroke_width);
    void add_path(const std::vector<Point>& pts, const std::string& stroke,
                  double stroke_width);

    std::string str() const;

private:
    struct Element {
        bool is_path = false;
        std::vector<Point> pts;
        std::string stroke;
        double stroke_width = 1.0;
    };

    double width_;
    double margin_fraction_;
    std::vector<Element> elements_;
};

}  // namespace gb

#endif
