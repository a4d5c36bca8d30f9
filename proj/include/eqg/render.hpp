// eqg/render.hpp — layout and SVG emission for diagrams.
//
// Conditionals render as ellipses, consequents as rectangles (or as
// ellipses in Peirce style, which shows the cut reading).  Negative areas
// are shaded: the polarity depth of the page is 0, entering a conditional
// adds one cut, entering a consequent adds a second, and odd depths are
// shaded.  Identity lines are routed as orthogonal polylines from a hub in
// their home region to every argument place they bind.

#ifndef EQG_RENDER_HPP
#define EQG_RENDER_HPP

#include <string>
#include <vector>

#include "eqg/diagram.hpp"

namespace eqg {

struct Rect {
    double x = 0, y = 0, w = 0, h = 0;

    bool operator==(const Rect&) const = default;
};

struct Point {
    double x = 0, y = 0;

    bool operator==(const Point&) const = default;
};

struct Label {
    std::string text;
    Point at;
    double size = 14;  // font size in px
};

struct LineRoute {
    std::string line;  // empty for the short joint drawn by an eq link
    std::vector<Point> points;
};

enum class ShapeKind { PageBox, Ellipse, Rectangle };

struct RenderNode {
    ShapeKind shape = ShapeKind::PageBox;
    Rect bounds;
    bool shaded = false;
    std::vector<RenderNode> children;
    std::vector<Label> labels;
    std::vector<LineRoute> routes;
};

enum class RenderStyle { Equilibrium, Peirce };

/// Geometry tree for a well-formed diagram.  Throws ValidationError
/// otherwise.  Layout is a horizontal flow per region with consequents
/// stacked beside the antecedent; argument anchors run left to right in
/// argument order.
RenderNode layout(const Diagram& d, RenderStyle style = RenderStyle::Equilibrium);

/// Standalone SVG 1.1 document. Deterministic: equal trees give equal text.
std::string to_svg(const RenderNode& root);

}  // namespace eqg

#endif  // EQG_RENDER_HPP
