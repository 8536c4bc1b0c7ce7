#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bf/cohomology.hpp"
#include "bf/forms.hpp"
#include "bf/group.hpp"
#include "bf/obstruct.hpp"

namespace bf {

using json = nlohmann::json;

// "trivial", "z", "z3", "z2xz2", "zxz2", ...
GroupSpec parse_group_shorthand(const std::string& s);
// shorthand, or a YAML file with a `group` key (or a bare group mapping)
GroupPtr load_group(const std::string& arg, json* resolved = nullptr);
// "0", "x1+x2", "t=1,s=1"
Character parse_character(const GroupPtr& g, const std::string& text);

struct LoadedXi {
  Xi1Type xi;
  json resolved;
};
LoadedXi load_xi(const std::string& path);
LoadedXi load_xi_text(const std::string& yaml, const std::string& name = "<string>");

struct LoadedY {
  std::optional<XiThreeManifoldRecord> three;
  std::optional<ClosedManifoldRecord> closed;
  json resolved;
};
LoadedY load_y(const std::string& path, const Xi1Type& xi);
LoadedY load_y_text(const std::string& yaml, const Xi1Type& xi, const std::string& name = "<string>");

FillingRecord load_filling(const std::string& path, const XiThreeManifoldRecord& m, json* resolved = nullptr);
FillingRecord load_filling_text(const std::string& yaml, const XiThreeManifoldRecord& m,
                                const std::string& name = "<string>", json* resolved = nullptr);

// every *.yaml / *.yml file in the directory, sorted by name; records without their own xi use `xi`
Registry load_registry(const std::string& dir, const Xi1Type& xi, json* resolved = nullptr);

// "zero" or a YAML list of classes, each a word ("t") or a list of abelianization bits
std::vector<H1Class> load_d3_image(const std::string& arg, const GroupPtr& g, json* resolved = nullptr);

}  // namespace bf
