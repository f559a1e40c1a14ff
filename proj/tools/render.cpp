#include "render.hpp"

#include <sstream>

namespace stieltjes {

std::vector<Rgb> default_color_map(long modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (modulus == 4) return {Rgb{255, 255, 255}, Rgb{255, 0, 0}, Rgb{0, 128, 0}, Rgb{0, 0, 255}};
  std::vector<Rgb> out;
  for (long r = 0; r < modulus; ++r) {
    const auto g = static_cast<std::uint8_t>(255 - (255 * r) / (modulus - 1));
    out.push_back({g, g, g});
  }
  return out;
}

std::string render_table(const RenderSpec& spec) {
  if (spec.n_last < spec.n_first || spec.i_last < spec.i_first) throw std::invalid_argument("empty render range");
  const auto seq = SignSequence::named(spec.seq, spec.n_last + 1);
  const auto table = coefficient_table(seq.values(), spec.n_last, spec.i_last, ResidueRing(spec.modulus), spec.track);
  return render_table(table, spec);
}

std::string render_table(const CoefficientTable<ResidueRing>& table, const RenderSpec& spec) {
  if (spec.scale < 1) throw std::invalid_argument("scale must be at least 1");
  if (spec.n_last < spec.n_first || spec.i_last < spec.i_first) throw std::invalid_argument("empty render range");
  if (spec.n_last > table.n_max() || spec.i_last > table.i_max()) throw std::out_of_range("render range exceeds table");
  const auto colors = spec.color_map.empty() ? default_color_map(spec.modulus) : spec.color_map;
  if (static_cast<long>(colors.size()) != table.ring().modulus()) {
    throw std::invalid_argument("color map must cover every residue");
  }
  const std::size_t cols = spec.n_last - spec.n_first + 1;
  const std::size_t rows = spec.i_last - spec.i_first + 1;
  const std::size_t width = cols * spec.scale;
  const std::size_t height = rows * spec.scale;
  check_resource(width * height, "render");

  std::ostringstream os;
  os << "P3\n" << width << ' ' << height << "\n255\n";
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t i = spec.i_last - r;
    std::string line;
    for (std::size_t n = spec.n_first; n <= spec.n_last; ++n) {
      const Rgb& c = colors.at(static_cast<std::size_t>(table.at(n, i)));
      const std::string px = std::to_string(c[0]) + ' ' + std::to_string(c[1]) + ' ' + std::to_string(c[2]);
      for (std::size_t s = 0; s < spec.scale; ++s) {
        if (!line.empty()) line += ' ';
        line += px;
      }
    }
    for (std::size_t s = 0; s < spec.scale; ++s) os << line << '\n';
  }
  return os.str();
}

}  // namespace stieltjes
