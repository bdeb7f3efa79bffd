#pragma once

#include "formsum/basics.hpp"
#include "formsum/intpoly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace formsum::region {

struct Rectangle {
    double x0, x1, y0, y1;
};
struct Disc {
    double cx, cy, r;
    double inner = 0.0;  // annulus when > 0
};
struct Point2 {
    double x, y;
};
struct ConvexPolygon {
    std::vector<Point2> vertices;  // counterclockwise, no repeats
};

// Closed bounded plane region.
class Region {
public:
    explicit Region(Rectangle r);
    explicit Region(Disc d);
    explicit Region(ConvexPolygon p);

    bool contains(double x, double y) const;
    bool contains(int64_t s, int64_t t) const { return contains(static_cast<double>(s), static_cast<double>(t)); }

    // Bounding box.
    double min_x() const;
    double max_x() const;
    double min_y() const;
    double max_y() const;

    const std::variant<Rectangle, Disc, ConvexPolygon>& shape() const { return shape_; }
    bool is_annulus() const;

private:
    std::variant<Rectangle, Disc, ConvexPolygon> shape_;
};

struct RegionStats {
    double vol;
    double sup_norm;
    double boundary_len;
    double k_r;
};

// Exact closed forms per shape; K_R uses the natural logarithm.
RegionStats stats(const Region& R);

struct RegularityReport {
    bool regular;
    std::vector<std::string> diagnostics;
};

// Piecewise-differentiable boundary (by construction), no real zero of any
// form inside the region, and vol >= K_R^{c1}.
RegularityReport is_regular(const Region& R, const std::vector<intpoly::BinaryForm>& forms,
                            double c1);

// {"shape":"rect","x":[a,b],"y":[c,d]} | {"shape":"disc","center":[x,y],"radius":r,
// "inner_radius":r0} | {"shape":"polygon","vertices":[[x,y],...]}
Region parse_region(const std::string& json_text);

}  // namespace formsum::region
