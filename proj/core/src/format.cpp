#include "heisgeo/format.hpp"

#include <cstdio>

namespace heisgeo {

std::string format_sci17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

}  // namespace heisgeo
