#include "svg.h"

#include <set>
#include <vector>

#include "gapsym/error.h"
#include "gapsym/fundamental.h"
#include "gapsym/symmetry.h"
#include "gapsym/wilf.h"

using gapsym::Cell;
using gapsym::Int;

namespace gapsym_cli {

namespace {

constexpr int kCell = 48;
constexpr int kMargin = 32;

template <typename T>
void write_key_val(std::ostream &out, const char *key, const T &val) {
    out << ' ' << key << "=\"" << val << "\"";
}

struct Frame {
    Int alpha;
    Int beta;

    Int x(Int a) const {
        return kMargin + (a - 1) * kCell;
    }
    // Row b = alpha - 1 is drawn at the top.
    Int y(Int b) const {
        return kMargin + (alpha - 1 - b) * kCell;
    }
    Int width() const {
        return 2 * kMargin + (beta - 1) * kCell;
    }
    Int height() const {
        return 2 * kMargin + (alpha - 1) * kCell;
    }
};

void write_rect(std::ostream &out, Int x, Int y, Int w, Int h, const char *fill, const char *stroke,
                int stroke_width, const char *extra = nullptr) {
    out << "<rect";
    write_key_val(out, "x", x);
    write_key_val(out, "y", y);
    write_key_val(out, "width", w);
    write_key_val(out, "height", h);
    write_key_val(out, "fill", fill);
    write_key_val(out, "stroke", stroke);
    write_key_val(out, "stroke-width", stroke_width);
    if (extra != nullptr) {
        out << ' ' << extra;
    }
    out << "/>\n";
}

void write_text(std::ostream &out, Int x, Int y, int size, const char *fill, const std::string &text) {
    out << "<text";
    write_key_val(out, "x", x);
    write_key_val(out, "y", y);
    write_key_val(out, "font-size", size);
    write_key_val(out, "fill", fill);
    write_key_val(out, "text-anchor", "middle");
    out << '>' << text << "</text>\n";
}

void write_cells(std::ostream &out, const Frame &f, const gapsym::Polyomino &p, const char *fill) {
    for (const Cell &c : p.cells) {
        write_rect(out, f.x(c.a), f.y(c.b), kCell, kCell, fill, "none", 0);
    }
}

}  // namespace

std::string_view layer_name(Layer layer) {
    switch (layer) {
        case Layer::Sg:
            return "sg";
        case Layer::Ssg:
            return "ssg";
        case Layer::Fg:
            return "fg";
        case Layer::Rectangle:
            return "rectangle";
        case Layer::Triangles:
            return "triangles";
    }
    return "";
}

std::set<Layer> all_layers() {
    return {Layer::Sg, Layer::Ssg, Layer::Fg, Layer::Rectangle, Layer::Triangles};
}

std::set<Layer> parse_layers(std::string_view text) {
    if (text == "all") {
        return all_layers();
    }
    std::set<Layer> out;
    if (text == "none" || text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view name = text.substr(pos, end - pos);
        bool found = false;
        for (Layer layer : all_layers()) {
            if (layer_name(layer) == name) {
                out.insert(layer);
                found = true;
            }
        }
        if (!found) {
            throw gapsym::Error(gapsym::ErrorKind::InvalidArgument, "unknown layer '" + std::string(name) + "'");
        }
        pos = end + 1;
    }
    return out;
}

void write_lattice_svg(const gapsym::TwoGenView &t, const std::set<Layer> &layers, std::ostream &out) {
    const Frame f{t.alpha(), t.beta()};
    const gapsym::NumericalSemigroup s = t.semigroup();

    out << "<svg";
    write_key_val(out, "viewBox", "0 0 " + std::to_string(f.width()) + " " + std::to_string(f.height()));
    write_key_val(out, "version", "1.1");
    write_key_val(out, "xmlns", "http://www.w3.org/2000/svg");
    out << ">\n";
    write_rect(out, 0, 0, f.width(), f.height(), "white", "none", 0);

    if (layers.count(Layer::Triangles)) {
        out << "<g id=\"triangles\">\n";
        write_cells(out, f, gapsym::triangle_u(t), "#dde8f5");
        write_cells(out, f, gapsym::triangle_r(t), "#f5e6d3");
        out << "</g>\n";
    }
    if (layers.count(Layer::Sg)) {
        out << "<g id=\"sg\">\n";
        write_cells(out, f, gapsym::supersymmetric_gaps(t).cells, "#8fb8e0");
        out << "</g>\n";
    }
    if (layers.count(Layer::Ssg)) {
        out << "<g id=\"ssg\">\n";
        write_cells(out, f, gapsym::self_symmetric_gaps(t), "#e0d060");
        out << "</g>\n";
    }
    if (layers.count(Layer::Fg)) {
        out << "<g id=\"fg\">\n";
        const gapsym::FundamentalGapSet fg = gapsym::fundamental_gaps(s);
        write_cells(out, f, gapsym::polyomino_from_values(t, fg.gaps), "#b0b0b0");
        out << "</g>\n";
    }

    out << "<g id=\"cells\">\n";
    for (const gapsym::LatticeGap &g : gapsym::lattice_gaps(t)) {
        const Int x = f.x(g.a);
        const Int y = f.y(g.b);
        write_rect(out, x, y, kCell, kCell, "none", "black", 1);
        write_text(out, x + kCell / 2, y + 20, 14, "black", std::to_string(g.value));
        const Int w = gapsym::wilf_gap_formula(t, g.a, g.b).w;
        write_text(out, x + kCell / 2, y + 40, 11, "#a02020", std::to_string(w));
    }
    out << "</g>\n";

    if (layers.count(Layer::Rectangle)) {
        const Int cols = t.beta() / 2;
        const Int rows = t.alpha() / 2;
        out << "<g id=\"rectangle\">\n";
        write_rect(out, f.x(1), f.y(rows), cols * kCell, rows * kCell, "none", "#208040", 3,
                   "stroke-dasharray=\"6 4\"");
        out << "</g>\n";
    }

    write_text(out, f.width() / 2, kMargin / 2 + 6, 16, "black",
               "&lt;" + std::to_string(t.alpha()) + "," + std::to_string(t.beta()) + "&gt;");
    out << "</svg>\n";
}

}  // namespace gapsym_cli
