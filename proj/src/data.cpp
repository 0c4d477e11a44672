#include "pacrl/data.hpp"

namespace pacrl {

std::string_view default_maze_text() {
  static constexpr std::string_view kText =
      "###################\n"
      "#o...............o#\n"
      "#.###.###.###.###.#\n"
      "#..##.###.###.##..#\n"
      "#.###.###.###.###.#\n"
      "#.................#\n"
      "#.###.###.###.###.#\n"
      "#.###.###.###.###.#\n"
      "#.###.###.###.###.#\n"
      "#.................#\n"
      "#.###.### ###.###.#\n"
      "#.###.###G###.###.#\n"
      "#.###.###.###.###.#\n"
      "#........P........#\n"
      "#.###.###.###.###.#\n"
      "#.###.###.###.###.#\n"
      "#.###.###.###.###.#\n"
      "#.................#\n"
      "#.###.###.###.###.#\n"
      "#..##.###.###.##..#\n"
      "#.###.###.###.###.#\n"
      "#o...............o#\n"
      "###################\n";
  return kText;
}

std::string_view handcoded_policy_text() {
  static constexpr std::string_view kText =
      "[1]: if (NearestGhost<4) then FromGhost+\n"
      "[1]: if (NearestGhost>7) and (MaxJunctionSafety>4) then FromGhost-\n"
      "[2]: if (NearestEdGhost>99) then ToEdGhost-\n"
      "[2]: if (NearestEdGhost<99) then ToEdGhost+\n"
      "[3]: if (Constant>0) then KeepDirection+\n"
      "[3]: if (FromPowerDot-) then ToPowerDot+\n"
      "[3]: if (GhostDensity<1.5) and (NearestPowerDot<5) then "
      "FromPowerDot+\n"
      "[3]: if (NearestEdGhost>99) then FromPowerDot-\n"
      "[3]: if (NearestPowerDot>10) then FromPowerDot-\n";
  return kText;
}

}  // namespace pacrl
