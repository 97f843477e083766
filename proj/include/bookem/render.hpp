#pragma once

#include <string>
#include <vector>

#include "bookem/embedding.hpp"

namespace bookem {

// Arc-diagram drawing: vertices equally spaced on a horizontal spine line,
// every edge a semicircular arc above it, stroke color chosen by page.
// Edges involved in a violating pair are dashed: with union_mode false a
// violation is any same-page crossing, with union_mode true only crossings
// inside one connected component of a page count.
struct RenderSpec {
    int width = 800;
    int height = 360;
    bool union_mode = false;
    std::vector<std::string> palette;  // cycled; empty selects the default
};

// Well-formed standalone SVG 1.1 document; byte-deterministic for fixed
// inputs. Arcs are emitted in edge-index order, never below the spine.
std::string render_svg(const LinearEmbedding& emb, const RenderSpec& spec = {});

}  // namespace bookem
