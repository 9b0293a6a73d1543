#pragma once

#include <string>
#include <vector>

#include "zeroheavy/hausdorff.hpp"
#include "zeroheavy/zigzag.hpp"

namespace zeroheavy {

/// One JSON object per line; rationals as "p/q".
std::string transcript_jsonl(const std::vector<TranscriptEntry>& transcript);

/// Certificate block. Runs that did not complete carry "status": "PARTIAL".
std::string certificates_json(const ConstructionResult& result);

std::string cover_report_csv(const CoverBoundReport& report);
std::string cover_report_json(const CoverBoundReport& report);

}  // namespace zeroheavy
