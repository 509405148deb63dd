// Named-vertex input files and the inline family shorthand used by the CLI.
#pragma once

#include <string>

#include "json.hpp"
#include "nwg/quiver.hpp"

namespace nwg {

struct Instance {
  FramedSetting fs;
  std::vector<std::string> names;  // vertex names, aligned with fs indices

  bool operator==(const Instance& o) const {
    return names == o.names && fs.v == o.fs.v && fs.w == o.fs.w && fs.q.loops == o.fs.q.loops &&
           fs.q.edges == o.fs.q.edges;
  }
};

// Schema: { "vertices": [names...], "loops": {name: count}, "edges": [[a, b, mult]...],
//           "v": {name: int}, "w": {name: int} }.
// loops, edges, w are optional; v must cover every vertex. Unknown names, repeated
// edge pairs, self-edges, or negative entries raise input_error.
Instance parse_instance(const nlohmann::json& j);
Instance parse_instance_file(const std::string& path);

nlohmann::json emit_instance(const Instance& inst);

// Standard diagrams by name: "A3", "D4", "E6", the affine forms "A~2", "D~4",
// "E~8", and "Jordan" (one vertex, one loop). Vertices are named "0", "1", ...
// v and w start at zero; callers fill them in.
Instance make_family(const std::string& family);

}  // namespace nwg
