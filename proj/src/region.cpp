#include "formsum/region.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace formsum::region {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Region::Region(Rectangle r) : shape_(r) {
    if (r.x1 <= r.x0 || r.y1 <= r.y0) throw ConfigError("rectangle has empty interior");
}

Region::Region(Disc d) : shape_(d) {
    if (d.r <= 0 || d.inner < 0 || d.inner >= d.r) throw ConfigError("disc radii invalid");
}

Region::Region(ConvexPolygon p) : shape_(p) {
    if (p.vertices.size() < 3) throw ConfigError("polygon needs >= 3 vertices");
    // Counterclockwise and convex: all consecutive cross products > 0.
    const auto& v = p.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        const Point2& c = v[(i + 2) % v.size()];
        double cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        if (cross <= 0) throw ConfigError("polygon vertices must be strictly convex and counterclockwise");
    }
}

bool Region::is_annulus() const {
    const Disc* d = std::get_if<Disc>(&shape_);
    return d != nullptr && d->inner > 0;
}

bool Region::contains(double x, double y) const {
    if (const Rectangle* r = std::get_if<Rectangle>(&shape_)) {
        return x >= r->x0 && x <= r->x1 && y >= r->y0 && y <= r->y1;
    }
    if (const Disc* d = std::get_if<Disc>(&shape_)) {
        double dd = (x - d->cx) * (x - d->cx) + (y - d->cy) * (y - d->cy);
        return dd <= d->r * d->r && dd >= d->inner * d->inner;
    }
    const ConvexPolygon& p = std::get<ConvexPolygon>(shape_);
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        const Point2& a = p.vertices[i];
        const Point2& b = p.vertices[(i + 1) % p.vertices.size()];
        double cross = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        if (cross < 0) return false;
    }
    return true;
}

double Region::min_x() const {
    if (const Rectangle* r = std::get_if<Rectangle>(&shape_)) return r->x0;
    if (const Disc* d = std::get_if<Disc>(&shape_)) return d->cx - d->r;
    const auto& v = std::get<ConvexPolygon>(shape_).vertices;
    return std::min_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.x < b.x; })->x;
}
double Region::max_x() const {
    if (const Rectangle* r = std::get_if<Rectangle>(&shape_)) return r->x1;
    if (const Disc* d = std::get_if<Disc>(&shape_)) return d->cx + d->r;
    const auto& v = std::get<ConvexPolygon>(shape_).vertices;
    return std::max_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.x < b.x; })->x;
}
double Region::min_y() const {
    if (const Rectangle* r = std::get_if<Rectangle>(&shape_)) return r->y0;
    if (const Disc* d = std::get_if<Disc>(&shape_)) return d->cy - d->r;
    const auto& v = std::get<ConvexPolygon>(shape_).vertices;
    return std::min_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
}
double Region::max_y() const {
    if (const Rectangle* r = std::get_if<Rectangle>(&shape_)) return r->y1;
    if (const Disc* d = std::get_if<Disc>(&shape_)) return d->cy + d->r;
    const auto& v = std::get<ConvexPolygon>(shape_).vertices;
    return std::max_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
}

RegionStats stats(const Region& R) {
    double vol, sup, bd;
    if (const Rectangle* r = std::get_if<Rectangle>(&R.shape())) {
        vol = (r->x1 - r->x0) * (r->y1 - r->y0);
        sup = std::max({std::fabs(r->x0), std::fabs(r->x1), std::fabs(r->y0), std::fabs(r->y1)});
        bd = 2 * ((r->x1 - r->x0) + (r->y1 - r->y0));
    } else if (const Disc* d = std::get_if<Disc>(&R.shape())) {
        vol = kPi * (d->r * d->r - d->inner * d->inner);
        sup = std::max(std::fabs(d->cx), std::fabs(d->cy)) + d->r;
        bd = 2 * kPi * (d->r + d->inner);
    } else {
        const auto& v = std::get<ConvexPolygon>(R.shape()).vertices;
        double area2 = 0, per = 0;
        sup = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[i];
            const Point2& b = v[(i + 1) % v.size()];
            area2 += a.x * b.y - b.x * a.y;
            per += std::hypot(b.x - a.x, b.y - a.y);
            sup = std::max({sup, std::fabs(a.x), std::fabs(a.y)});
        }
        vol = 0.5 * std::fabs(area2);
        bd = per;
    }
    if (vol <= 0) throw ConfigError("region has zero volume");
    double k_r = 1 + sup + bd * std::log1p(sup) + vol / (1 + sup);
    return RegionStats{vol, sup, bd, k_r};
}

namespace {

// Boundary sample points; conservative zero-line detection evaluates the
// forms here plus at the centroid.
std::vector<std::pair<double, double>> boundary_samples(const Region& R, int per_edge) {
    std::vector<std::pair<double, double>> pts;
    if (const Rectangle* r = std::get_if<Rectangle>(&R.shape())) {
        for (int i = 0; i <= per_edge; ++i) {
            double u = static_cast<double>(i) / per_edge;
            pts.emplace_back(r->x0 + u * (r->x1 - r->x0), r->y0);
            pts.emplace_back(r->x0 + u * (r->x1 - r->x0), r->y1);
            pts.emplace_back(r->x0, r->y0 + u * (r->y1 - r->y0));
            pts.emplace_back(r->x1, r->y0 + u * (r->y1 - r->y0));
        }
    } else if (const Disc* d = std::get_if<Disc>(&R.shape())) {
        int n = per_edge * 8;
        for (int i = 0; i < n; ++i) {
            double a = 2 * kPi * i / n;
            pts.emplace_back(d->cx + d->r * std::cos(a), d->cy + d->r * std::sin(a));
            if (d->inner > 0)
                pts.emplace_back(d->cx + d->inner * std::cos(a), d->cy + d->inner * std::sin(a));
        }
        if (d->inner == 0) pts.emplace_back(d->cx, d->cy);
    } else {
        const auto& v = std::get<ConvexPolygon>(R.shape()).vertices;
        for (size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[i];
            const Point2& b = v[(i + 1) % v.size()];
            for (int j = 0; j <= per_edge; ++j) {
                double u = static_cast<double>(j) / per_edge;
                pts.emplace_back(a.x + u * (b.x - a.x), a.y + u * (b.y - a.y));
            }
        }
        double cx = 0, cy = 0;
        for (const auto& p : v) {
            cx += p.x;
            cy += p.y;
        }
        pts.emplace_back(cx / v.size(), cy / v.size());
    }
    return pts;
}

double eval_form_d(const intpoly::BinaryForm& F, double x, double y) {
    int d = F.degree();
    double acc = 0;
    for (int j = 0; j <= d; ++j)
        acc += F.coeffs()[static_cast<size_t>(j)].convert_to<double>() *
               std::pow(x, d - j) * std::pow(y, j);
    return acc;
}

}  // namespace

RegularityReport is_regular(const Region& R, const std::vector<intpoly::BinaryForm>& forms,
                            double c1) {
    RegularityReport rep{true, {}};
    RegionStats st = stats(R);
    if (R.contains(0.0, 0.0)) {
        rep.regular = false;
        rep.diagnostics.push_back("region contains the origin (common zero of all forms)");
    }
    // Zero lines pass through the origin; a sign change of F_i over the
    // sampled boundary (subdivision depth 2^20 total points is overkill for
    // lines; 1<<11 per edge is already conservative) certifies a crossing.
    const int per_edge = 1 << 11;
    auto pts = boundary_samples(R, per_edge);
    for (size_t i = 0; i < forms.size(); ++i) {
        bool pos = false, neg = false, zero = false;
        for (const auto& [x, y] : pts) {
            double v = eval_form_d(forms[i], x, y);
            if (v > 0) pos = true;
            else if (v < 0) neg = true;
            else zero = true;
        }
        if (zero || (pos && neg)) {
            rep.regular = false;
            rep.diagnostics.push_back("form " + std::to_string(i) +
                                      " has a real zero meeting the region");
        }
    }
    if (st.vol < std::pow(st.k_r, c1)) {
        rep.regular = false;
        rep.diagnostics.push_back("vol(R) = " + std::to_string(st.vol) + " < K_R^c1 = " +
                                  std::to_string(std::pow(st.k_r, c1)));
    }
    return rep;
}

Region parse_region(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::string shape = j.at("shape").get<std::string>();
    if (shape == "rect") {
        auto x = j.at("x");
        auto y = j.at("y");
        return Region(Rectangle{x.at(0).get<double>(), x.at(1).get<double>(),
                                y.at(0).get<double>(), y.at(1).get<double>()});
    }
    if (shape == "disc" || shape == "annulus") {
        double cx = 0, cy = 0;
        if (j.contains("center")) {
            cx = j["center"].at(0).get<double>();
            cy = j["center"].at(1).get<double>();
        }
        double inner = j.value("inner_radius", 0.0);
        return Region(Disc{cx, cy, j.at("radius").get<double>(), inner});
    }
    if (shape == "polygon") {
        ConvexPolygon p;
        for (const auto& v : j.at("vertices"))
            p.vertices.push_back(Point2{v.at(0).get<double>(), v.at(1).get<double>()});
        return Region(p);
    }
    throw ConfigError("unknown region shape: " + shape);
}

}  // namespace formsum::region
