#include "bookem/render.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace bookem {

namespace {

const std::vector<std::string>& default_palette() {
    static const std::vector<std::string> colors = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
        "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
    };
    return colors;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

}  // namespace

std::string render_svg(const LinearEmbedding& emb, const RenderSpec& spec) {
    if (spec.width < 80 || spec.height < 80) {
        throw std::invalid_argument("render_svg: canvas must be at least 80x80");
    }
    const int n = emb.graph.n();
    const int m = emb.graph.m();
    const auto& palette = spec.palette.empty() ? default_palette() : spec.palette;

    const double base_y = spec.height - 40.0;
    const double margin = 40.0;
    // Semicircles must stay inside the canvas: the widest arc spans the whole
    // spine, so cap the spine length by twice the headroom above it.
    const double usable =
        std::min<double>(spec.width - 2.0 * margin, 2.0 * (base_y - 10.0));
    const double left = (spec.width - usable) / 2.0;
    auto x_of = [&](int pos) {
        if (n <= 1) return spec.width / 2.0;
        return left + usable * pos / (n - 1);
    };

    // An edge is drawn dashed when it appears in a violating pair of the
    // requested flavor: any same-page crossing normally, crossings within one
    // page component in union mode.
    std::vector<bool> dashed(static_cast<size_t>(m), false);
    if (m > 0) {
        const VerificationReport report = verify(emb, -1);
        for (const Violation& v : report.violations) {
            if (spec.union_mode && v.kind != Violation::Kind::same_component) continue;
            dashed[static_cast<size_t>(emb.graph.edge_index(v.e1.u, v.e1.v))] = true;
            dashed[static_cast<size_t>(emb.graph.edge_index(v.e2.u, v.e2.v))] = true;
        }
    }

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (n > 1) {
        svg += "<line x1=\"" + num(x_of(0)) + "\" y1=\"" + num(base_y) + "\" x2=\"" +
               num(x_of(n - 1)) + "\" y2=\"" + num(base_y) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }

    // Arcs in edge-index order; sweep flag 1 from the smaller position keeps
    // every arc on the upper half-plane.
    const auto& edges = emb.graph.edges();
    for (int e = 0; e < m; ++e) {
        int pu = emb.spine.position_of(edges[static_cast<size_t>(e)].u);
        int pv = emb.spine.position_of(edges[static_cast<size_t>(e)].v);
        if (pu > pv) std::swap(pu, pv);
        const double x1 = x_of(pu);
        const double x2 = x_of(pv);
        const double r = (x2 - x1) / 2.0;
        const int page = emb.pages.page_of_edge[static_cast<size_t>(e)];
        svg += "<path d=\"M " + num(x1) + " " + num(base_y) + " A " + num(r) + " " +
               num(r) + " 0 0 1 " + num(x2) + " " + num(base_y) + "\" fill=\"none\" stroke=\"" +
               palette[static_cast<size_t>(page) % palette.size()] +
               "\" stroke-width=\"2\"";
        if (dashed[static_cast<size_t>(e)]) svg += " stroke-dasharray=\"6 4\"";
        svg += "/>\n";
    }

    for (int pos = 0; pos < n; ++pos) {
        const double x = x_of(pos);
        svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(base_y) +
               "\" r=\"4\" fill=\"#000000\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(base_y + 22.0) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
               std::to_string(emb.spine.vertex_at(pos)) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace bookem
