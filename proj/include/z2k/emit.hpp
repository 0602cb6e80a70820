#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "z2k/asymptotics.hpp"
#include "z2k/codes.hpp"
#include "z2k/extremal.hpp"

namespace z2k {

enum class Format { text, json, csv };

/// Parses "text" / "json" / "csv"; throws ParseError.
Format parse_format(const std::string& name);

// Big integers and reals are always rendered as decimal strings so readers
// never round them through a double.
using Json = nlohmann::ordered_json;

std::string big(const mpz_class& z);

Json to_json(const ExtremalProfile& prof);
Json to_json(const CrossoverResult& res);
Json to_json(const PositivityReport& rep);
Json to_json(const SaddleData& sd);
Json to_json(const Type2Report& rep);
Json to_json(const SweTable& table);
Json to_json(const std::vector<RatioRow>& rows);

std::string to_csv(const CrossoverResult& res);
/// Columns n, ratio, threshold, margin.
std::string to_csv(const std::vector<RatioRow>& rows);

std::string to_text(const ExtremalProfile& prof);
std::string to_text(const CrossoverResult& res);
std::string to_text(const std::vector<RatioRow>& rows);

/// Pretty-printed JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace z2k
