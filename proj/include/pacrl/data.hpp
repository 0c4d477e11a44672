#pragma once

#include <string_view>

namespace pacrl {

// Bundled assets, byte-identical to the files under data/.
std::string_view default_maze_text();
std::string_view handcoded_policy_text();

}  // namespace pacrl
