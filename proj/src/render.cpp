#include "vmap/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace vmap {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string rect_attrs(const Rect& r) {
    return "x=\"" + num(r.x) + "\" y=\"" + num(r.y) + "\" width=\"" + num(r.w) + "\" height=\"" + num(r.h) + "\"";
}

}  // namespace

double text_width(std::string_view text) {
    double w = 0.0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if ((c & 0xC0) == 0x80) continue;  // UTF-8 continuation byte
        if (std::string_view("il.,:;'!|").find(static_cast<char>(c)) != std::string_view::npos)
            w += 0.28;
        else if (c == 'm' || c == 'w' || c == 'M' || c == 'W')
            w += 0.85;
        else if (c >= 'A' && c <= 'Z')
            w += 0.68;
        else if (c == ' ')
            w += 0.3;
        else
            w += 0.55;
    }
    return w;
}

double fit_font(std::string_view text, double width, double height) {
    const double unit = text_width(text);
    auto fits = [&](double f) { return f * unit <= 0.9 * width && f <= 0.9 * height; };
    if (!fits(kMinFont)) return 0.0;
    if (fits(kMaxFont)) return kMaxFont;
    double lo = kMinFont, hi = kMaxFont;
    while (hi - lo > 0.05) {
        const double mid = 0.5 * (lo + hi);
        (fits(mid) ? lo : hi) = mid;
    }
    return std::floor(lo * 10.0) / 10.0;
}

std::string render_svg(const LayoutDocument& doc, const RenderOptions& options) {
    const Rect& d = doc.display;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(d.x) << ' ' << num(d.y) << ' '
        << num(d.w) << ' ' << num(d.h) << "\" width=\"" << num(d.w) << "\" height=\"" << num(d.h) << "\">\n";
    svg << "<rect class=\"frame\" " << rect_attrs(d) << " fill=\"#000000\"/>\n";

    for (const auto& b : doc.bridges) {
        svg << "<rect class=\"bridge\" " << rect_attrs(b.half_a) << " fill=\""
            << doc.palette.at(doc.vertices.at(b.a).cluster) << "\"/>\n";
        svg << "<rect class=\"bridge\" " << rect_attrs(b.half_b) << " fill=\""
            << doc.palette.at(doc.vertices.at(b.b).cluster) << "\"/>\n";
    }

    const double outline = std::max(0.5, 0.25 * doc.border);
    for (const auto& v : doc.vertices)
        svg << "<rect class=\"vertex\" " << rect_attrs(v.rect) << " fill=\"" << doc.palette.at(v.cluster)
            << "\" stroke=\"#ffffff\" stroke-width=\"" << num(outline) << "\"><title>" << escape(v.label)
            << "</title></rect>\n";

    if (options.debug_cuts && !doc.cuts.empty()) {
        std::size_t deepest = 0;
        for (const auto& c : doc.cuts) deepest = std::max(deepest, c.depth);
        for (const auto& c : doc.cuts) {
            const double width = 0.5 + static_cast<double>(deepest - c.depth);
            svg << "<line class=\"cut\" x1=\"" << num(c.segment.a.x) << "\" y1=\"" << num(c.segment.a.y) << "\" x2=\""
                << num(c.segment.b.x) << "\" y2=\"" << num(c.segment.b.y) << "\" stroke=\"#ffffff\" stroke-width=\""
                << num(width) << "\"/>\n";
        }
    }

    if (options.labels) {
        for (const auto& v : doc.vertices) {
            const double font = fit_font(v.label, v.rect.w, v.rect.h);
            if (font == 0.0) continue;
            const Point c = v.rect.center();
            svg << "<text class=\"label\" x=\"" << num(c.x) << "\" y=\"" << num(c.y) << "\" font-size=\"" << num(font)
                << "\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">"
                << escape(v.label) << "</text>\n";
        }
    }

    std::set<std::size_t> marked(options.highlighted.begin(), options.highlighted.end());
    for (const auto& ch : options.channels) {
        marked.insert(ch.source);
        marked.insert(ch.target);
    }
    for (auto v : marked)
        svg << "<rect class=\"highlight\" " << rect_attrs(doc.vertices.at(v).rect)
            << " fill=\"none\" stroke=\"#e31a1c\" stroke-width=\"" << num(2.0 * outline) << "\"/>\n";
    for (const auto& ch : options.channels) {
        svg << "<polyline class=\"channel\" fill=\"none\" stroke=\"#e31a1c\" stroke-width=\""
            << num(std::max(2.5, doc.border)) << "\" stroke-linejoin=\"round\" points=\"";
        for (std::size_t i = 0; i < ch.polyline.size(); ++i)
            svg << (i ? " " : "") << num(ch.polyline[i].x) << ',' << num(ch.polyline[i].y);
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace vmap
