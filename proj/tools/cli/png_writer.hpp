#pragma once

#include <filesystem>

#include "wigflow/grid.hpp"

namespace wigflow::cli {

/// Renders a field as an RGB image, p increasing upward, with a blue-white-red
/// map symmetric about 0 and saturating at +-scale.
void write_field_png(const std::filesystem::path& path, const Field2D& field, double scale);

}  // namespace wigflow::cli
