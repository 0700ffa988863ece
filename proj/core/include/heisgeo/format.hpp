#pragma once

#include <string>

namespace heisgeo {

// Scientific form with 17 significant digits; parses back to the exact
// same double. All CSV output goes through this.
std::string format_sci17(double v);

}  // namespace heisgeo
