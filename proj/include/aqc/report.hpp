#pragma once

#include <json.hpp>

namespace aqc {

/// Structured result of a verification run. `data` carries the estimated
/// constants and scan tables; `ok` is the overall verdict.
struct Report {
    bool ok = true;
    nlohmann::ordered_json data;
};

}  // namespace aqc
