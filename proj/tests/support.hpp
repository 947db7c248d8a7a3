#pragma once

#include <array>
#include <string>

#include "otprh/otprh.hpp"

namespace support {

/// One weight from each family.
inline const std::array<std::string, 4> kCatalog{"const", "cos:0.5", "poisson:0.4",
                                                 "exptrig:0.5,0.2"};

inline double dist(const otprh::Complex& a, const otprh::Complex& b) { return std::abs(a - b); }
inline double dist(const otprh::Matrix2& a, const otprh::Matrix2& b) {
  return otprh::max_norm(otprh::Matrix2(a - b));
}

}  // namespace support
