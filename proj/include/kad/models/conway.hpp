#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kad/finite_semiring.hpp"

namespace kad {

/// Conway's small Kleene algebras: "A2", "A3_1", "A3_2", "A3_3", "A4_1".
/// Carriers are listed bottom-up in the order used by the printed tables.
/// Throws std::invalid_argument for unknown names.
FiniteSemiring conway_model(std::string_view name);

const std::vector<std::string>& conway_model_names();

}  // namespace kad
