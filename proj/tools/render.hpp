#pragma once

// Coefficient-table pictures as plain-text pixmaps (P3).

#include "stieltjes/cfrac.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace stieltjes {

using Rgb = std::array<std::uint8_t, 3>;

struct RenderSpec {
  Track track = Track::Q;
  SequenceKind seq = SequenceKind::paperfolding;
  std::size_t n_first = 1;
  std::size_t n_last = 16;
  std::size_t i_first = 0;
  std::size_t i_last = 15;
  long modulus = 4;
  std::vector<Rgb> color_map;  // empty: default_color_map(modulus)
  std::size_t scale = 1;
};

// m = 4: white, red, green, blue. Other moduli: a grey ramp from white.
std::vector<Rgb> default_color_map(long modulus);

// Residue r at table position (n, i) becomes a scale x scale block; n grows
// to the right and the largest i is the top row.
std::string render_table(const RenderSpec& spec);
std::string render_table(const CoefficientTable<ResidueRing>& table, const RenderSpec& spec);

}  // namespace stieltjes
