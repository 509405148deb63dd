// Report assembly and serialization for the CLI.
#pragma once

#include "nwg/instance.hpp"
#include "nwg/namikawa.hpp"

namespace nwg {

struct Report {
  Instance instance;
  std::vector<int> kept;  // original indices retained by normalization
  NamikawaGroup group;
  std::vector<std::string> warnings;

  bool operator==(const Report&) const = default;
};

// Runs the full pipeline and collects the standing caveats.
Report compute_report(const Instance& inst);

// Machine format. schema_version 1; parse_report(report_json(r)) == r.
nlohmann::ordered_json report_json(const Report& r);
Report parse_report(const nlohmann::json& j);

std::string report_text(const Report& r);

}  // namespace nwg
