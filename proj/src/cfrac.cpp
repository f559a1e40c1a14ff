#include "stieltjes/cfrac.hpp"

namespace stieltjes {

Track parse_track(std::string_view name) {
  if (name == "P" || name == "p") return Track::P;
  if (name == "Q" || name == "q") return Track::Q;
  throw std::invalid_argument("track must be P or Q, got '" + std::string(name) + "'");
}

std::string_view track_name(Track track) { return track == Track::P ? "P" : "Q"; }

}  // namespace stieltjes
