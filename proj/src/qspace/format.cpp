#include "qns/format.hpp"

#include <cstdio>

namespace qns {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace qns
