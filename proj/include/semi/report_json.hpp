#pragma once

#include <json.hpp>

#include "semi/theorem.hpp"

namespace semi {

/// Report fields as an insertion-ordered JSON object.
nlohmann::ordered_json report_to_json(const TheoremReport& report);

}  // namespace semi
