#pragma once

#include <string>

#include <json.hpp>

#include "bf/cohomology.hpp"
#include "bf/homology.hpp"
#include "bf/jss.hpp"
#include "bf/obstruct.hpp"

namespace bf {

using json = nlohmann::json;

const char* tool_version();
// FNV-1a 64 of the canonical (sorted-key, compact) dump, as 16 hex digits
std::string spec_hash(const json& resolved);
// {tool, tool_version, command, spec_hash, spec}
json envelope(const std::string& command, const json& resolved);

json bits_json(const BitVec& b);
json h1_json(const Group& g, const H1Class& c);
json to_json(const HomologyPresentation& h);
json to_json(const D2Matrix& d);
json to_json(const E2Page& p);
json to_json(const Group& g, const E3Entry& e);
json to_json(const FiltrationReport& r);
json to_json(const Group& g, const Coset& c);
json to_json(const Group& g, const PipelineResult& r);

}  // namespace bf
