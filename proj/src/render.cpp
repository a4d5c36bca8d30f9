#include "eqg/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace eqg {

namespace {

constexpr double kGap = 12;          // between elements in a row
constexpr double kConsGap = 10;      // between stacked consequents
constexpr double kRectPad = 10;      // consequent rectangle padding
constexpr double kPageMargin = 20;
constexpr double kHubStrip = 16;     // height reserved for line hubs
constexpr double kCharW = 9;

double label_width(const std::string& s) {
    return std::max(30.0, kCharW * static_cast<double>(s.size()) + 12);
}

bool has_args(const PredApp& p) { return !p.args.empty(); }

struct Size {
    double w = 0, h = 0;
};

// ── Measure ─────────────────────────────────────────────────────────────────

class Layouter {
public:
    explicit Layouter(RenderStyle style) : style_(style) {}

    RenderNode run(const Diagram& d) {
        Size content = measure_region(d.page);
        double w = std::max(content.w, 40.0) + 2 * kPageMargin;
        double h = std::max(content.h, 20.0) + 2 * kPageMargin;
        RenderNode page;
        page.shape = ShapeKind::PageBox;
        page.bounds = {0, 0, w, h};
        page.shaded = false;
        place_region(d.page, page, kPageMargin, kPageMargin, 0);
        return page;
    }

private:
    Size measure_element(const Element& e) {
        if (e.is_pred()) {
            const PredApp& p = e.pred();
            return {label_width(p.pred), has_args(p) ? 44.0 : 30.0};
        }
        if (e.is_eq()) return {56, 44};
        return measure_cond(e.cond());
    }

    Size measure_cond(const Conditional& c) {
        Size row = measure_row(c.antecedent.elements);
        double strip = c.antecedent.lines.empty() ? 0 : kHubStrip;
        Size content{row.w, row.h};
        if (!c.consequents.empty()) {
            Size col = measure_cons_column(c.consequents);
            content.w += (content.w > 0 ? kGap : 0) + col.w;
            content.h = std::max(content.h, col.h);
        }
        content.w = std::max(content.w, 24.0);
        content.h = std::max(content.h, 18.0) + strip;
        // ellipse bounding box generously circumscribes the content box
        return {content.w * 1.3 + 24, content.h * 1.3 + 18};
    }

    Size measure_cons_column(const std::vector<Region>& cons) {
        Size col;
        for (std::size_t i = 0; i < cons.size(); ++i) {
            Size r = measure_region(cons[i]);
            double w = std::max(r.w, 20.0) + 2 * kRectPad;
            double h = std::max(r.h, 16.0) + 2 * kRectPad;
            col.w = std::max(col.w, w);
            col.h += (i ? kConsGap : 0) + h;
        }
        return col;
    }

    Size measure_row(const std::vector<Element>& elems) {
        Size row;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            Size s = measure_element(elems[i]);
            row.w += (i ? kGap : 0) + s.w;
            row.h = std::max(row.h, s.h);
        }
        return row;
    }

    Size measure_region(const Region& r) {
        Size row = measure_row(r.elements);
        double strip = r.lines.empty() ? 0 : kHubStrip;
        return {row.w, row.h + strip};
    }

    // ── Place ───────────────────────────────────────────────────────────────
    //
    // Fills `node` (whose bounds are already set) with the region's labels,
    // child shapes and line routes; (x, y) is the content origin.

    void place_region(const Region& r, RenderNode& node, double x, double y, int depth) {
        double row_y = y + (r.lines.empty() ? 0 : kHubStrip);
        place_lines_then_row(r.lines, r.elements, node, x, y, row_y, depth);
    }

    void place_lines_then_row(const std::vector<std::string>& lines,
                              const std::vector<Element>& elems, RenderNode& node, double x,
                              double hub_y, double row_y, int depth) {
        std::map<std::string, std::vector<Point>> anchors;
        place_row(elems, node, x, row_y, depth, anchors);
        double hx = x + 10;
        for (const std::string& l : lines) {
            Point hub{hx, hub_y + 8};
            hx += 30;
            LineRoute route{l, {}};
            auto it = anchors.find(l);
            if (it == anchors.end() || it->second.empty()) {
                route.points = {hub, {hub.x + 16, hub.y}};  // unused line: a short stroke
                node.routes.push_back(std::move(route));
                continue;
            }
            for (const Point& a : it->second) {
                LineRoute leg{l, {hub, {a.x, hub.y}, a}};
                node.routes.push_back(std::move(leg));
            }
        }
        // anchors of lines declared higher up bubble to the enclosing region
        for (auto& [name, pts] : anchors) {
            bool mine = std::find(lines.begin(), lines.end(), name) != lines.end();
            if (!mine)
                for (const Point& p : pts) pending_[name].push_back(p);
        }
    }

    void place_row(const std::vector<Element>& elems, RenderNode& node, double x, double y,
                   int depth, std::map<std::string, std::vector<Point>>& anchors) {
        Size row = measure_row(elems);
        double cx = x;
        for (const Element& e : elems) {
            Size s = measure_element(e);
            double ey = y + (row.h - s.h) / 2;
            place_element(e, node, cx, ey, s, depth, anchors);
            cx += s.w + kGap;
        }
    }

    void place_element(const Element& e, RenderNode& node, double x, double y, Size s, int depth,
                       std::map<std::string, std::vector<Point>>& anchors) {
        if (e.is_pred()) {
            const PredApp& p = e.pred();
            node.labels.push_back({p.pred, {x + s.w / 2, y + 19}, 14});
            for (std::size_t i = 0; i < p.args.size(); ++i) {
                double ax = x + s.w * static_cast<double>(i + 1) /
                                    static_cast<double>(p.args.size() + 1);
                Point a{ax, y + 30};
                if (p.args[i].is_line()) {
                    anchors[p.args[i].name].push_back(a);
                } else {
                    node.labels.push_back({p.args[i].name, {ax, y + 41}, 10});
                    node.routes.push_back({"", {{ax, y + 26}, a}});  // constant tick
                }
            }
            return;
        }
        if (e.is_eq()) {
            const EqLink& q = e.eq();
            Point left{x + 10, y + 15};
            Point right{x + s.w - 10, y + 15};
            node.routes.push_back({"", {left, right}});  // the identity joint
            const ArgRef* refs[2] = {&q.lhs, &q.rhs};
            Point pts[2] = {left, right};
            for (int i = 0; i < 2; ++i) {
                if (refs[i]->is_line()) anchors[refs[i]->name].push_back(pts[i]);
                else node.labels.push_back({refs[i]->name, {pts[i].x, y + 41}, 10});
            }
            return;
        }

        const Conditional& c = e.cond();
        RenderNode ell;
        ell.shape = ShapeKind::Ellipse;
        ell.bounds = {x, y, s.w, s.h};
        ell.shaded = (depth + 1) % 2 == 1;

        Size row = measure_row(c.antecedent.elements);
        double strip = c.antecedent.lines.empty() ? 0 : kHubStrip;
        Size content{row.w, row.h};
        Size col{};
        if (!c.consequents.empty()) {
            col = measure_cons_column(c.consequents);
            content.w += (content.w > 0 ? kGap : 0) + col.w;
            content.h = std::max(content.h, col.h);
        }
        content.w = std::max(content.w, 24.0);
        content.h = std::max(content.h, 18.0) + strip;
        double ox = x + (s.w - content.w) / 2;
        double oy = y + (s.h - content.h) / 2;

        std::map<std::string, std::vector<Point>> inner;
        // consequents first so their anchors exist when the antecedent's
        // hub routes are laid
        double col_x = ox + (row.w > 0 ? row.w + kGap : 0);
        double col_y = oy + strip + (content.h - strip - col.h) / 2;
        for (const Region& cons : c.consequents) {
            Size rs = measure_region(cons);
            double w = std::max(rs.w, 20.0) + 2 * kRectPad;
            double h = std::max(rs.h, 16.0) + 2 * kRectPad;
            RenderNode rect;
            rect.shape = style_ == RenderStyle::Peirce ? ShapeKind::Ellipse : ShapeKind::Rectangle;
            rect.bounds = {col_x, col_y, w, h};
            rect.shaded = (depth + 2) % 2 == 1;
            place_region(cons, rect, col_x + kRectPad, col_y + kRectPad, depth + 2);
            // hoist anchors of outer lines recorded while placing the rectangle
            for (auto& [name, pts] : pending_) inner[name].insert(inner[name].end(), pts.begin(), pts.end());
            pending_.clear();
            ell.children.push_back(std::move(rect));
            col_y += h + kConsGap;
        }
        double row_y = oy + strip + (content.h - strip - row.h) / 2;
        place_row(c.antecedent.elements, ell, ox, row_y, depth + 1, inner);
        double hx = ox + 10;
        for (const std::string& l : c.antecedent.lines) {
            Point hub{hx, oy + 8};
            hx += 30;
            auto it = inner.find(l);
            if (it == inner.end() || it->second.empty()) {
                ell.routes.push_back({l, {hub, {hub.x + 16, hub.y}}});
                continue;
            }
            for (const Point& a : it->second) ell.routes.push_back({l, {hub, {a.x, hub.y}, a}});
        }
        for (auto& [name, pts] : inner) {
            bool mine = std::find(c.antecedent.lines.begin(), c.antecedent.lines.end(), name) !=
                        c.antecedent.lines.end();
            if (!mine) anchors[name].insert(anchors[name].end(), pts.begin(), pts.end());
        }
        node.children.push_back(std::move(ell));
    }

    RenderStyle style_;
    std::map<std::string, std::vector<Point>> pending_;
};

}  // namespace

RenderNode layout(const Diagram& d, RenderStyle style) {
    std::vector<Violation> vs = validate(d);
    if (!vs.empty()) throw ValidationError(std::move(vs));
    return Layouter(style).run(d);
}

// ── SVG ─────────────────────────────────────────────────────────────────────

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

const char* fill_of(const RenderNode& n) { return n.shaded ? "#d8d8d8" : "#ffffff"; }

void emit_shapes(const RenderNode& n, std::string& out) {
    const Rect& b = n.bounds;
    switch (n.shape) {
        case ShapeKind::PageBox:
            out += "<rect x=\"" + num(b.x) + "\" y=\"" + num(b.y) + "\" width=\"" + num(b.w) +
                   "\" height=\"" + num(b.h) + "\" fill=\"" + fill_of(n) + "\"/>\n";
            break;
        case ShapeKind::Ellipse:
            out += "<ellipse cx=\"" + num(b.x + b.w / 2) + "\" cy=\"" + num(b.y + b.h / 2) +
                   "\" rx=\"" + num(b.w / 2) + "\" ry=\"" + num(b.h / 2) + "\" fill=\"" +
                   fill_of(n) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            break;
        case ShapeKind::Rectangle:
            out += "<rect x=\"" + num(b.x) + "\" y=\"" + num(b.y) + "\" width=\"" + num(b.w) +
                   "\" height=\"" + num(b.h) + "\" rx=\"4\" fill=\"" + fill_of(n) +
                   "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            break;
    }
    for (const Label& l : n.labels) {
        out += "<text x=\"" + num(l.at.x) + "\" y=\"" + num(l.at.y) +
               "\" font-family=\"sans-serif\" font-size=\"" + num(l.size) +
               "\" text-anchor=\"middle\">" + escape(l.text) + "</text>\n";
    }
    for (const RenderNode& c : n.children) emit_shapes(c, out);
}

void emit_routes(const RenderNode& n, std::string& out) {
    for (const LineRoute& r : n.routes) {
        out += "<polyline points=\"";
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            if (i) out += ' ';
            out += num(r.points[i].x) + "," + num(r.points[i].y);
        }
        out += "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const RenderNode& c : n.children) emit_routes(c, out);
}

}  // namespace

std::string to_svg(const RenderNode& root) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(root.bounds.w) +
           "\" height=\"" + num(root.bounds.h) + "\" viewBox=\"0 0 " + num(root.bounds.w) + " " +
           num(root.bounds.h) + "\">\n";
    emit_shapes(root, out);
    emit_routes(root, out);  // lines paint over every region fill
    out += "</svg>\n";
    return out;
}

}  // namespace eqg
