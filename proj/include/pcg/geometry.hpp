#pragma once

#include "pcg/graph.hpp"
#include "pcg/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pcg::geometry {

// All shapes are closed point sets; touching counts as intersecting.

struct Disk {
    Rational x, y, r;
};

/// Horizontal segment at height y over [x1, x2].
struct HSeg {
    Rational y, x1, x2;
};

/// Vertical segment at abscissa x over [y1, y2].
struct VSeg {
    Rational x, y1, y2;
};

/// Counterclockwise arc of the unit circle from `start` to `end` degrees.
/// Equal endpoints denote the full circle.
struct Arc {
    Rational start, end;
};

struct Rect {
    Rational x1, y1, x2, y2;
};

struct Box {
    Rational x1, y1, z1, x2, y2, z2;
};

/// Solid special parallelepiped between L = {(., 0, 0)} and M = {(., 1, 0)}:
/// the hull of (a,1), (d,1), (b,0), (c,0) lifted over z in [0, height].
struct Parallelepiped {
    Rational a, b, c, d, height;
};

/// Degenerate special parallelepiped: segment from (a, 1, z) to (b, 0, z).
struct ParallelepipedSegment {
    Rational a, b, z;
};

using Shape = std::variant<Disk, HSeg, VSeg, Arc, Rect, Box, Parallelepiped, ParallelepipedSegment>;

enum class Family { Planar, Circular, Spatial };

Family family_of(const Shape& s);
std::string_view kind_name(const Shape& s);

/// Throws std::invalid_argument when ordering or parallelogram constraints fail.
void validate(const Shape& s);

/// Closed-set intersection. Throws std::invalid_argument for shapes of
/// different families (planar, circular arcs, spatial).
bool intersects(const Shape& s1, const Shape& s2);

enum class Dimension { Two, Three };

class GeometricModel {
public:
    GeometricModel() = default;
    /// Throws on duplicate labels, invalid shapes, or shapes that do not fit
    /// `dim` or each other.
    GeometricModel(Dimension dim, std::vector<std::pair<NodeName, Shape>> shapes);

    Dimension dimension() const { return dim_; }
    const std::vector<std::pair<NodeName, Shape>>& shapes() const { return shapes_; }

private:
    Dimension dim_ = Dimension::Two;
    std::vector<std::pair<NodeName, Shape>> shapes_;
};

Graph model_graph(const GeometricModel& m);

/// Bundled models of H: disks_h, segments_h, arcs_h, squares_h, cubes_h.
GeometricModel paper_model(std::string_view name);
const std::vector<std::string>& paper_model_names();

/// Static SVG drawing of a 2D model. Throws for 3D models.
std::string render_svg(const GeometricModel& m);

}  // namespace pcg::geometry
