#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "burnside/analyzer.hpp"
#include "burnside/bounds.hpp"
#include "burnside/config.hpp"
#include "burnside/laws.hpp"
#include "burnside/series.hpp"
#include "burnside/structure.hpp"
#include "burnside/tower.hpp"

namespace burnside {

using ojson = nlohmann::ordered_json;

/// {"value": "E_h(f)", "height": h, "index": "<40 digits>", "inexact": b}
/// plus "decimal" when the value is below 1e30.
ojson to_json(const TowerNumber& t);
ojson to_json(const BoundReport& r);
ojson to_json(const AnalysisReport& r);
ojson to_json(const LawCheck& c);
ojson to_json(const ShortestLaw& s);
ojson to_json(const GeneratedPower& p);
ojson to_json(const SeriesVerification& v);
ojson to_json(const CompositionReport& r);
ojson to_json(const LambdaReport& r);

/// Envelope shared by every CLI command.
ojson make_envelope(const std::string& command, const Config& config, ojson result);

std::string render_text(const BoundReport& r);
std::string render_text(const AnalysisReport& r, int indent = 0);

}  // namespace burnside
