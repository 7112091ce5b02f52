#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "degen/combinatorics.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"
#include "degen/verifier.hpp"

namespace degen {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Series& s);
Json to_json(const StirlingTable& table);
/// n,k,value rows with a header line.
std::string to_csv(const StirlingTable& table);

Json to_json(const Witness& w);
Json to_json(const IdentityReport& report);
Json to_json(std::span<const IdentityReport> reports);

}  // namespace degen
