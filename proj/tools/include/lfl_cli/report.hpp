#pragma once

// JSON and CSV renderings of the experiment records. Floats carry 12
// significant digits; non-finite values become JSON null / CSV "nan"/"inf".

#include <string>
#include <vector>

#include <json.hpp>

#include "lfl/congruence.hpp"
#include "lfl/farey.hpp"
#include "lfl/lvalues.hpp"
#include "lfl/moments.hpp"
#include "lfl/mollifier.hpp"
#include "lfl/prime_survey.hpp"

namespace lfl::io {

using nlohmann::ordered_json;

/// x rounded to 12 significant digits, or null when not finite.
ordered_json number(double x);

/// "%.12g"
std::string format_float(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Header line plus one line per row, LF terminated.
  std::string render() const;
};

ordered_json to_json(const CongruenceRecord& rec);
ordered_json to_json(const ThetaResult& t);
ordered_json to_json(const LValue& v);
ordered_json to_json(const AkConstant& a);
ordered_json to_json(const MomentReport& rep);
ordered_json to_json(const TwistedMoments& t);
ordered_json to_json(const MollifiedMoments& mm);
ordered_json to_json(const MollifierReport& rep);
ordered_json to_json(const GrowthReport& rep);
ordered_json to_json(const CyclotomicPoly& poly);
ordered_json to_json(const SurveyReport& rep);
ordered_json to_json(const AlmostAllReport& rep);

CsvTable to_csv(const MomentReport& rep);
CsvTable to_csv(const MollifierReport& rep);
CsvTable to_csv(const SurveyReport& rep);
CsvTable to_csv(const AlmostAllReport& rep);
CsvTable to_csv(const GrowthReport& rep);

/// Two-column key,value table from a flat JSON object (nested values are
/// written as compact JSON text).
CsvTable flat_csv(const ordered_json& obj);

}  // namespace lfl::io
