#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "threedist/real_value.hpp"
#include "threedist/temperament.hpp"

namespace threedist {

// Drawing of U_n: every segment h = i alpha - j over the unit square.
struct UnMapSpec {
  std::int64_t n = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> lines;  // (i, j)
  bool show_farey_verticals = false;
  std::int64_t width_px = 480;
  std::int64_t height_px = 480;

  // All (i, j) with 1 <= i <= n, 0 <= j < i, ordered by i then j.
  static UnMapSpec make(std::int64_t n, bool show_farey_verticals = false,
                        std::int64_t width_px = 480, std::int64_t height_px = 480);
};

inline constexpr std::int64_t kMaxRenderOrder = 200;

// SVG 1.1 text. Output is a pure function of the arguments.
std::string render_un_map(const UnMapSpec& spec);
std::string render_partition_strip(const RealValue& alpha, std::int64_t n,
                                   std::int64_t width_px = 800);
std::string render_temperament_ladder(const TemperamentReport& report,
                                      std::int64_t width_px = 800);

}  // namespace threedist
