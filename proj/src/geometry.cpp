#include "pcg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace pcg::geometry {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Rational q(long num, long den = 1) { return make_rational(num, den); }

// Segments are degenerate rectangles for intersection purposes.
Rect as_rect(const Shape& s) {
    return std::visit(Overloaded{
                          [](const HSeg& h) { return Rect{h.x1, h.y, h.x2, h.y}; },
                          [](const VSeg& v) { return Rect{v.x, v.y1, v.x, v.y2}; },
                          [](const Rect& r) { return r; },
                          [](const auto&) -> Rect { throw std::logic_error("not a rectangle-like shape"); },
                      },
                      s);
}

bool closed_overlap(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
    return a1 <= b2 && b1 <= a2;
}

bool rect_rect(const Rect& a, const Rect& b) {
    return closed_overlap(a.x1, a.x2, b.x1, b.x2) && closed_overlap(a.y1, a.y2, b.y1, b.y2);
}

bool disk_disk(const Disk& a, const Disk& b) {
    const Rational dx = a.x - b.x;
    const Rational dy = a.y - b.y;
    const Rational rr = a.r + b.r;
    return dx * dx + dy * dy <= rr * rr;
}

Rational clamp(const Rational& v, const Rational& lo, const Rational& hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

bool disk_rect(const Disk& d, const Rect& r) {
    const Rational dx = d.x - clamp(d.x, r.x1, r.x2);
    const Rational dy = d.y - clamp(d.y, r.y1, r.y2);
    return dx * dx + dy * dy <= d.r * d.r;
}

bool planar(const Shape& a, const Shape& b) {
    const auto* da = std::get_if<Disk>(&a);
    const auto* db = std::get_if<Disk>(&b);
    if (da && db) {
        return disk_disk(*da, *db);
    }
    if (da) {
        return disk_rect(*da, as_rect(b));
    }
    if (db) {
        return disk_rect(*db, as_rect(a));
    }
    return rect_rect(as_rect(a), as_rect(b));
}

Rational mod360(const Rational& x) {
    const Rational turns = x / 360;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
    return x - Rational(fl) * 360;
}

Rational arc_span(const Arc& a) {
    Rational span = mod360(a.end - a.start);
    return sgn(span) == 0 ? Rational(360) : span;
}

bool arc_contains(const Arc& a, const Rational& angle) { return mod360(angle - a.start) <= arc_span(a); }

bool arc_arc(const Arc& a, const Arc& b) { return arc_contains(a, b.start) || arc_contains(b, a.start); }

// A spatial shape as a prism over a y-range whose x cross-section is
// [lo0 + lo1*y, hi0 + hi1*y], extruded over [z0, z1].
struct Prism {
    Rational y0, y1;
    Rational lo0, lo1, hi0, hi1;
    Rational z0, z1;
};

Prism as_prism(const Shape& s) {
    return std::visit(
        Overloaded{
            [](const Box& b) { return Prism{b.y1, b.y2, b.x1, 0, b.x2, 0, b.z1, b.z2}; },
            [](const Parallelepiped& p) {
                const Rational lo_l = std::min(p.b, p.c), hi_l = std::max(p.b, p.c);
                const Rational lo_m = std::min(p.a, p.d), hi_m = std::max(p.a, p.d);
                return Prism{0, 1, lo_l, Rational(lo_m - lo_l), hi_l, Rational(hi_m - hi_l), 0, p.height};
            },
            [](const ParallelepipedSegment& p) {
                const Rational slope = p.a - p.b;
                return Prism{0, 1, p.b, slope, p.b, slope, p.z, p.z};
            },
            [](const auto&) -> Prism { throw std::logic_error("not a spatial shape"); },
        },
        s);
}

// Shrinks [lo, hi] to the part where p + q*y >= 0.
void restrict_halfline(const Rational& p, const Rational& q, Rational& lo, Rational& hi) {
    if (sgn(q) == 0) {
        if (sgn(p) < 0) {
            lo = 1;
            hi = 0;
        }
        return;
    }
    const Rational root = -p / q;
    if (sgn(q) > 0) {
        lo = std::max(lo, root);
    } else {
        hi = std::min(hi, root);
    }
}

bool prism_prism(const Prism& a, const Prism& b) {
    if (!closed_overlap(a.z0, a.z1, b.z0, b.z1)) {
        return false;
    }
    Rational lo = std::max(a.y0, b.y0);
    Rational hi = std::min(a.y1, b.y1);
    // hi_b(y) - lo_a(y) >= 0 and hi_a(y) - lo_b(y) >= 0 for some y in [lo, hi].
    restrict_halfline(b.hi0 - a.lo0, b.hi1 - a.lo1, lo, hi);
    restrict_halfline(a.hi0 - b.lo0, a.hi1 - b.lo1, lo, hi);
    return lo <= hi;
}

}  // namespace

Family family_of(const Shape& s) {
    return std::visit(Overloaded{
                          [](const Arc&) { return Family::Circular; },
                          [](const Box&) { return Family::Spatial; },
                          [](const Parallelepiped&) { return Family::Spatial; },
                          [](const ParallelepipedSegment&) { return Family::Spatial; },
                          [](const auto&) { return Family::Planar; },
                      },
                      s);
}

std::string_view kind_name(const Shape& s) {
    static constexpr std::string_view names[] = {"disk", "hseg", "vseg", "arc", "rect", "box", "spp", "sppseg"};
    return names[s.index()];
}

void validate(const Shape& s) {
    auto require = [&](bool ok, const char* what) {
        if (!ok) {
            throw std::invalid_argument(std::string(kind_name(s)) + ": " + what);
        }
    };
    std::visit(Overloaded{
                   [&](const Disk& d) { require(sgn(d.r) >= 0, "radius must be nonnegative"); },
                   [&](const HSeg& h) { require(h.x1 <= h.x2, "x1 must not exceed x2"); },
                   [&](const VSeg& v) { require(v.y1 <= v.y2, "y1 must not exceed y2"); },
                   [&](const Arc&) {},
                   [&](const Rect& r) { require(r.x1 <= r.x2 && r.y1 <= r.y2, "corners out of order"); },
                   [&](const Box& b) {
                       require(b.x1 <= b.x2 && b.y1 <= b.y2 && b.z1 <= b.z2, "corners out of order");
                   },
                   [&](const Parallelepiped& p) {
                       require(sgn(p.a) >= 0 && sgn(p.b) >= 0 && sgn(p.c) >= 0 && sgn(p.d) >= 0 &&
                                   sgn(p.height) >= 0,
                               "coordinates must be nonnegative");
                       require(p.d - p.a == p.c - p.b, "base is not a parallelogram (need d - a = c - b)");
                   },
                   [&](const ParallelepipedSegment& p) {
                       require(sgn(p.a) >= 0 && sgn(p.b) >= 0 && sgn(p.z) >= 0, "coordinates must be nonnegative");
                   },
               },
               s);
}

bool intersects(const Shape& s1, const Shape& s2) {
    const Family f = family_of(s1);
    if (f != family_of(s2)) {
        throw std::invalid_argument("cannot intersect " + std::string(kind_name(s1)) + " with " +
                                    std::string(kind_name(s2)));
    }
    switch (f) {
        case Family::Planar:
            return planar(s1, s2);
        case Family::Circular:
            return arc_arc(std::get<Arc>(s1), std::get<Arc>(s2));
        case Family::Spatial:
            return prism_prism(as_prism(s1), as_prism(s2));
    }
    return false;
}

GeometricModel::GeometricModel(Dimension dim, std::vector<std::pair<NodeName, Shape>> shapes)
    : dim_(dim), shapes_(std::move(shapes)) {
    std::unordered_set<NodeName> labels;
    for (const auto& [label, shape] : shapes_) {
        if (!labels.insert(label).second) {
            throw std::invalid_argument("duplicate model label '" + label + "'");
        }
        validate(shape);
        const Family f = family_of(shape);
        if ((dim_ == Dimension::Three) != (f == Family::Spatial)) {
            throw std::invalid_argument(std::string(kind_name(shape)) + " does not belong in a " +
                                        (dim_ == Dimension::Three ? "3d" : "2d") + " model");
        }
        if (f != family_of(shapes_.front().second)) {
            throw std::invalid_argument("model mixes " + std::string(kind_name(shapes_.front().second)) + " and " +
                                        std::string(kind_name(shape)) + " shapes");
        }
    }
}

Graph model_graph(const GeometricModel& m) {
    const auto& s = m.shapes();
    const std::size_t n = s.size();
    std::vector<NodeName> names;
    names.reserve(n);
    for (const auto& [label, shape] : s) {
        names.push_back(label);
    }
    std::vector<std::uint8_t> adj(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (intersects(s[i].second, s[j].second)) {
                adj[i * n + j] = adj[j * n + i] = 1;
            }
        }
    }
    return Graph(std::move(names), std::move(adj));
}

namespace {

// Squares as (x, y, side, label), bottom-left corner first.
struct Square {
    long x, y, side;
    const char* label;
};
constexpr Square kSquares[] = {
    {10, 30, 30, "4"}, {0, 25, 40, "3"}, {30, 10, 30, "7"}, {25, 0, 40, "8"},
    {30, 50, 30, "2"}, {25, 50, 40, "1"}, {50, 30, 30, "5"}, {50, 25, 40, "6"},
};

GeometricModel disks_h() {
    auto disk = [](const char* label, long x, long y, long r) {
        return std::pair<NodeName, Shape>{label, Disk{q(x), q(y), q(r)}};
    };
    return GeometricModel(Dimension::Two, {
                                              disk("1", 45, 60, 20),
                                              disk("2", 45, 55, 15),
                                              disk("3", 20, 35, 20),
                                              disk("4", 25, 35, 15),
                                              disk("5", 65, 35, 15),
                                              disk("6", 70, 35, 20),
                                              disk("7", 45, 15, 15),
                                              disk("8", 45, 10, 20),
                                          });
}

GeometricModel segments_h() {
    // Pairs drawn one unit apart are taken as collinear.
    auto h = [](const char* label, long y, long x1, long x2) {
        return std::pair<NodeName, Shape>{label, HSeg{q(y), q(x1), q(x2)}};
    };
    auto v = [](const char* label, long x, long y1, long y2) {
        return std::pair<NodeName, Shape>{label, VSeg{q(x), q(y1), q(y2)}};
    };
    return GeometricModel(Dimension::Two, {
                                              h("1", 55, 0, 80),
                                              h("2", 55, 10, 70),
                                              v("3", 25, 0, 80),
                                              v("4", 25, 10, 70),
                                              v("5", 55, 10, 70),
                                              v("6", 55, 0, 80),
                                              h("7", 25, 10, 70),
                                              h("8", 25, 0, 80),
                                          });
}

GeometricModel arcs_h() {
    auto arc = [](const char* label, long from, long to) {
        return std::pair<NodeName, Shape>{label, Arc{q(from), q(to)}};
    };
    return GeometricModel(Dimension::Two, {
                                              arc("1", 80, 100),
                                              arc("2", 75, 105),
                                              arc("3", 95, 265),
                                              arc("4", 97, 263),
                                              arc("5", 275, 85),
                                              arc("6", 278, 82),
                                              arc("7", 260, 280),
                                              arc("8", 255, 285),
                                          });
}

GeometricModel squares_h() {
    std::vector<std::pair<NodeName, Shape>> shapes;
    for (const auto& s : kSquares) {
        shapes.emplace_back(s.label, Rect{q(s.x), q(s.y), q(s.x + s.side), q(s.y + s.side)});
    }
    return GeometricModel(Dimension::Two, std::move(shapes));
}

GeometricModel cubes_h() {
    std::vector<std::pair<NodeName, Shape>> shapes;
    for (const auto& s : kSquares) {
        shapes.emplace_back(s.label, Box{q(s.x), q(s.y), q(0), q(s.x + s.side), q(s.y + s.side), q(s.side)});
    }
    return GeometricModel(Dimension::Three, std::move(shapes));
}

}  // namespace

const std::vector<std::string>& paper_model_names() {
    static const std::vector<std::string> names = {"disks_h", "segments_h", "arcs_h", "squares_h", "cubes_h"};
    return names;
}

GeometricModel paper_model(std::string_view name) {
    if (name == "disks_h") return disks_h();
    if (name == "segments_h") return segments_h();
    if (name == "arcs_h") return arcs_h();
    if (name == "squares_h") return squares_h();
    if (name == "cubes_h") return cubes_h();
    throw std::invalid_argument("unknown bundled model '" + std::string(name) + "'");
}

std::string render_svg(const GeometricModel& m) {
    if (m.dimension() != Dimension::Two) {
        throw std::invalid_argument("SVG rendering supports 2d models only");
    }
    auto d = [](const Rational& r) { return r.get_d(); };
    const bool circular = !m.shapes().empty() && family_of(m.shapes().front().second) == Family::Circular;

    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    bool first = true;
    auto extend = [&](double x0, double y0, double x1, double y1) {
        if (first) {
            min_x = x0, min_y = y0, max_x = x1, max_y = y1;
            first = false;
        }
        min_x = std::min(min_x, x0), min_y = std::min(min_y, y0);
        max_x = std::max(max_x, x1), max_y = std::max(max_y, y1);
    };
    if (circular) {
        extend(-120, -120, 120, 120);
    }
    for (const auto& [label, s] : m.shapes()) {
        std::visit(Overloaded{
                       [&](const Disk& c) { extend(d(c.x - c.r), d(c.y - c.r), d(c.x + c.r), d(c.y + c.r)); },
                       [&](const Arc&) {},
                       [&](const auto&) {
                           const Rect r = as_rect(s);
                           extend(d(r.x1), d(r.y1), d(r.x2), d(r.y2));
                       },
                   },
                   s);
    }
    const double pad = 10;
    const double width = max_x - min_x + 2 * pad;
    const double height = max_y - min_y + 2 * pad;
    auto sx = [&](double x) { return x - min_x + pad; };
    auto sy = [&](double y) { return max_y - y + pad; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    std::size_t ring = 0;
    for (const auto& [label, s] : m.shapes()) {
        std::visit(Overloaded{
                       [&](const Disk& c) {
                           out << "  <circle cx=\"" << sx(d(c.x)) << "\" cy=\"" << sy(d(c.y)) << "\" r=\"" << d(c.r)
                               << "\" fill=\"none\" stroke=\"black\"/>\n";
                           out << "  <text x=\"" << sx(d(c.x)) << "\" y=\"" << sy(d(c.y)) << "\">" << label
                               << "</text>\n";
                       },
                       [&](const Arc& a) {
                           // Concentric rings only separate the arcs visually.
                           const double radius = 60 + 6.0 * static_cast<double>(ring++);
                           const double a0 = d(a.start) * std::numbers::pi / 180;
                           const double span = d(arc_span(a));
                           const double a1 = a0 + span * std::numbers::pi / 180;
                           out << "  <path d=\"M " << sx(radius * std::cos(a0)) << ' ' << sy(radius * std::sin(a0))
                               << " A " << radius << ' ' << radius << " 0 " << (span > 180 ? 1 : 0) << " 0 "
                               << sx(radius * std::cos(a1)) << ' ' << sy(radius * std::sin(a1))
                               << "\" fill=\"none\" stroke=\"black\"/>\n";
                           const double mid = a0 + span * std::numbers::pi / 360;
                           out << "  <text x=\"" << sx((radius + 4) * std::cos(mid)) << "\" y=\""
                               << sy((radius + 4) * std::sin(mid)) << "\">" << label << "</text>\n";
                       },
                       [&](const auto&) {
                           const Rect r = as_rect(s);
                           out << "  <rect x=\"" << sx(d(r.x1)) << "\" y=\"" << sy(d(r.y2)) << "\" width=\""
                               << d(r.x2 - r.x1) << "\" height=\"" << d(r.y2 - r.y1)
                               << "\" fill=\"none\" stroke=\"black\"/>\n";
                           out << "  <text x=\"" << sx(d(r.x1)) << "\" y=\"" << sy(d(r.y1)) << "\">" << label
                               << "</text>\n";
                       },
                   },
                   s);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pcg::geometry
