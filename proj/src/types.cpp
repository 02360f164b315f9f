#include "crowdflow/types.hpp"

#include <array>

namespace crowdflow {

namespace {
constexpr std::array<std::string_view, 9> kNames = {
    "N", "NE", "E", "SE", "S", "SW", "W", "NW", "STATIONARY"};
constexpr std::array<Direction, 9> kOrder = {
    Direction::N,  Direction::NE, Direction::E, Direction::SE, Direction::S,
    Direction::SW, Direction::W,  Direction::NW, Direction::Stationary};
}  // namespace

std::string_view direction_name(Direction d) {
  for (std::size_t i = 0; i < kOrder.size(); ++i)
    if (kOrder[i] == d) return kNames[i];
  throw std::invalid_argument("direction_name: invalid Direction");
}

Direction direction_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kOrder[i];
  throw std::invalid_argument("direction_from_name: unknown direction '" +
                              std::string(name) + "'");
}

}  // namespace crowdflow
