#pragma once

#include <string>

#include "cdp/plfunction.hpp"

namespace cdp {

// Drawings of CDPs over one-dimensional bases in the table idiom: gray base
// segment, lattice dots, black graph polyline per function.
std::string render_ascii(const CDP& c);
std::string render_tikz(const CDP& c);
std::string render_svg(const CDP& c);

}  // namespace cdp
