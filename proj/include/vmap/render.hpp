#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vmap/layout_document.hpp"
#include "vmap/router.hpp"

namespace vmap {

struct RenderOptions {
    std::vector<RoutedChannel> channels;   // drawn in red on top
    std::vector<std::size_t> highlighted;  // vertices outlined in red
    bool labels = true;
    bool debug_cuts = false;  // draw cut lines, thicker for earlier cuts
};

inline constexpr double kMinFont = 6.0;
inline constexpr double kMaxFont = 24.0;

/// Estimated advance width of `text` at font size 1 (sans-serif).
double text_width(std::string_view text);

/// Largest font in [6, 24] whose text fits 90% of the width and height;
/// 0 when even 6 px does not fit.
double fit_font(std::string_view text, double width, double height);

std::string render_svg(const LayoutDocument& doc, const RenderOptions& options = {});

}  // namespace vmap
