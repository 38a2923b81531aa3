#pragma once

#include "sscgamma/converse.hpp"
#include "sscgamma/js_oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ssc {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

// CycloNumbers are written over their smallest conductor so equal values give equal bytes.
Json to_json(const CycloNumber& x);
Json to_json(const LaurentPoly& p);
Json to_json(const RatFun& f);
Json to_json(const TameChar& c);
Json to_json(const SscDatum& d);
Json to_json(const LocalFactors& f);
Json to_json(const GammaProfile& p);
Json to_json(const RecoveredParams& r);
Json to_json(const LemmaReport& r);
Json to_json(const DistinguishabilityReport& r);

CycloNumber cyclo_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
RatFun ratfun_from_json(const Json& j);
TameChar tame_char_from_json(const Json& j);
SscDatum datum_from_json(const Json& j);
LocalFactors local_factors_from_json(const Json& j);
GammaProfile profile_from_json(const Json& j);

// Compact JSON with a trailing newline.
std::string dump(const Json& j);

std::string to_csv(const std::vector<SscDatum>& data);
std::string to_csv(const GammaProfile& p);
std::string to_csv(const LemmaReport& r);
std::string to_csv(const DistinguishabilityReport& r);

std::string to_text(const RatFun& f);
std::string to_text(const SscDatum& d);
std::string to_text(const LocalFactors& f);
std::string to_text(const GammaProfile& p);
std::string to_text(const RecoveredParams& r);
std::string to_text(const LemmaReport& r);
std::string to_text(const DistinguishabilityReport& r);

// 64-bit FNV-1a, hex encoded
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ssc
