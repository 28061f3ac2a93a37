#pragma once

#include <json.hpp>

#include "matchroid/campaigns.hpp"
#include "matchroid/matching.hpp"

namespace matchroid {

// Context: {"kind":"free","rank":k} or {"kind":"finite","moduli":[...]}.
nlohmann::json ctx_to_json(const GroupCtx& ctx);
GroupCtx ctx_from_json(const nlohmann::json& j);

// Elements are integer arrays; a bare integer is accepted as a single
// coordinate on input. All JSON numbers must be 64-bit integers.
nlohmann::json element_to_json(const GroupElement& x);
GroupElement element_from_json(const GroupCtx& ctx, const nlohmann::json& j);

/// Document form {"ctx":..., "ground":[...], "bases":[[indices],...]}.
nlohmann::json matroid_to_json(const Matroid& m);

/// Accepts the document form (validated through make_from_bases) or one of
/// the constructor shorthands:
///   {"uniform":   {"ctx":..., "ground":[...], "n":...}}
///   {"panhandle": {"ctx":..., "a":..., "n":..., "s":..., "m":...}}
///   {"schubert":  {"ctx":..., "a":..., "m":..., "S":[...]}}
///   {"from_bases": <document>}
///   {"dual": <matroid json>}
///   {"direct_sum": [<matroid json>, <matroid json>]}
Matroid matroid_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const MatchReport& report);
nlohmann::json result_to_json(const CampaignResult& result);

}  // namespace matchroid
