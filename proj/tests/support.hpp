#pragma once

#include <string>

#include <json.hpp>

#include "mmplan/scenario.hpp"

namespace mmtest {

using nlohmann::json;

// Square area [0, side]^2 with one uniform subarea holding `users` users.
inline json square_doc(double side, long users) {
  return json{{"name", "square"},
              {"area",
               {{"bounds", {0.0, side, 0.0, side}},
                {"central_office", {side / 2, side / 2}},
                {"rng_seed", 5},
                {"pixel_size_m", 10.0}}},
              {"subareas", json::array({{{"name", "all"}, {"rect", {0.0, side, 0.0, side}}, {"user_count", users}}})}};
}

inline mmplan::Scenario square(double side, long users) { return mmplan::parse_scenario(square_doc(side, users)); }

inline std::string data_path(const std::string& name) {
  return std::string(MMPLAN_TEST_DATA_DIR) + "/" + name + ".json";
}

}  // namespace mmtest
