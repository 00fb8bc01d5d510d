#pragma once

#include <iosfwd>
#include <string>

#include "tricontain/region.hpp"

namespace tricontain::io {

struct RegionSpec {
    Region region;
    AnchorPoint anchor; // defaults to the origin when the file omits it
};

// Parses the textual region format (see docs/region-format.md):
//   # comment
//   kind = polygon | polar | slices | disk_slice | offset_disk
//   vertices = [x0, y0, x1, y1, ...]      (polygon)
//   family = limacon | circle | crescent  (polar / slices)
//   a = ... | R = ... | r = ...           (family parameters)
//   anchor = [x, y]
// Unknown or duplicate keys are rejected with a line/field diagnostic.
RegionSpec parse_region_file(std::istream& in);
RegionSpec parse_region_file(const std::string& path);

// Inline shorthands for the CLI: square, disk, crescent, triangle,
// limacon:a=2, circle:R=1, regular-polygon:m=2, disk-slice:a=0.25,
// offset-disk:r=0.5.
RegionSpec parse_inline_region(const std::string& text);

// Resolves a --region argument: an existing file path is parsed as a region
// file, anything else as an inline shorthand.
RegionSpec resolve_region(const std::string& text);

} // namespace tricontain::io
