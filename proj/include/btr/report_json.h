//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_REPORT_JSON_H_
#define BTR_REPORT_JSON_H_

#include <json.hpp>

#include "btr/bounds.h"
#include "btr/ramsey.h"
#include "btr/search.h"

namespace btr {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "btr/1";

// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json count_json(BigCount value);

Json to_json(const Quantity &q);
Json to_json(const RamseyValue &v);
Json to_json(const RamseyProvenance &p);
Json to_json(const BoundReport &r);
Json to_json(const Schedule &s);
Json to_json(const ConstraintSet &c);
Json to_json(const SearchConfig &c);
Json to_json(const SearchRecord &r);
Json to_json(const ScanOrderResult &r);

// Reads {n, constraints, budget, restarts, seed, schedule?, node_budget?}.
// Throws std::invalid_argument with the offending key.
SearchConfig search_config_from_json(const Json &j);

}  // namespace btr

#endif  // BTR_REPORT_JSON_H_
