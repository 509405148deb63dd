#include "nwg/instance.hpp"

#include <fstream>
#include <map>
#include <set>

namespace nwg {

namespace {

using nlohmann::json;

Int to_count(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw input_error(where + ": expected an integer");
  auto x = j.get<long long>();
  if (x < 0) throw input_error(where + ": negative value");
  return x;
}

int lookup(const std::map<std::string, int>& index, const json& j, const std::string& where) {
  if (!j.is_string()) throw input_error(where + ": expected a vertex name");
  auto it = index.find(j.get<std::string>());
  if (it == index.end())
    throw input_error(where + ": unknown vertex \"" + j.get<std::string>() + "\"");
  return it->second;
}

}  // namespace

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw input_error("instance: expected a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw input_error("instance: \"vertices\" must be an array of names");
  Instance inst;
  std::map<std::string, int> index;
  for (const auto& name : j["vertices"]) {
    if (!name.is_string() || name.get<std::string>().empty())
      throw input_error("vertices: names must be nonempty strings");
    auto s = name.get<std::string>();
    if (!index.emplace(s, (int)inst.names.size()).second)
      throw input_error("vertices: duplicate name \"" + s + "\"");
    inst.names.push_back(s);
  }
  int n = (int)inst.names.size();
  inst.fs.q = Quiver::make(n);
  inst.fs.v.assign(n, 0);
  inst.fs.w.assign(n, 0);

  if (j.contains("loops")) {
    if (!j["loops"].is_object()) throw input_error("loops: expected a map name -> count");
    for (auto it = j["loops"].begin(); it != j["loops"].end(); ++it)
      inst.fs.q.loops[lookup(index, json(it.key()), "loops")] = to_count(it.value(), "loops");
  }

  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw input_error("edges: expected an array of [a, b, mult]");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 3)
        throw input_error("edges: each entry is a triple [a, b, multiplicity]");
      int a = lookup(index, e[0], "edges");
      int b = lookup(index, e[1], "edges");
      Int mult = to_count(e[2], "edges");
      if (a == b)
        throw input_error("edges: \"" + inst.names[a] +
                          "\" joined to itself; declare loops via \"loops\" instead");
      if (mult < 1) throw input_error("edges: multiplicity must be at least 1");
      if (!seen.insert(std::minmax(a, b)).second)
        throw input_error("edges: pair (" + inst.names[a] + ", " + inst.names[b] +
                          ") listed twice; merge into one multiplicity");
      inst.fs.q.add_edge(a, b, mult);
    }
  }

  if (!j.contains("v") || !j["v"].is_object())
    throw input_error("instance: \"v\" must be a map name -> dimension");
  for (auto it = j["v"].begin(); it != j["v"].end(); ++it)
    inst.fs.v[lookup(index, json(it.key()), "v")] = to_count(it.value(), "v");
  for (int i = 0; i < n; ++i)
    if (!j["v"].contains(inst.names[i]))
      throw input_error("v: missing entry for vertex \"" + inst.names[i] + "\"");

  if (j.contains("w")) {
    if (!j["w"].is_object()) throw input_error("w: expected a map name -> framing");
    for (auto it = j["w"].begin(); it != j["w"].end(); ++it)
      inst.fs.w[lookup(index, json(it.key()), "w")] = to_count(it.value(), "w");
  }

  inst.fs.validate();
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
  return parse_instance(j);
}

nlohmann::json emit_instance(const Instance& inst) {
  json j = json::object();
  j["vertices"] = inst.names;
  json loops = json::object();
  for (int i = 0; i < inst.fs.q.n; ++i)
    if (inst.fs.q.loops[i] > 0) loops[inst.names[i]] = inst.fs.q.loops[i];
  if (!loops.empty()) j["loops"] = loops;
  json edges = json::array();
  for (int a = 0; a < inst.fs.q.n; ++a)
    for (int b = a + 1; b < inst.fs.q.n; ++b)
      if (inst.fs.q.edges[a][b] > 0)
        edges.push_back(json::array({inst.names[a], inst.names[b], inst.fs.q.edges[a][b]}));
  if (!edges.empty()) j["edges"] = edges;
  json v = json::object(), w = json::object();
  for (int i = 0; i < inst.fs.q.n; ++i) v[inst.names[i]] = inst.fs.v[i];
  j["v"] = v;
  for (int i = 0; i < inst.fs.q.n; ++i)
    if (inst.fs.w[i] > 0) w[inst.names[i]] = inst.fs.w[i];
  if (!w.empty()) j["w"] = w;
  return j;
}

Instance make_family(const std::string& family) {
  auto build = [](int n) {
    Instance inst;
    inst.fs.q = Quiver::make(n);
    inst.fs.v.assign(n, 0);
    inst.fs.w.assign(n, 0);
    for (int i = 0; i < n; ++i) inst.names.push_back(std::to_string(i));
    return inst;
  };
  if (family == "Jordan") {
    Instance inst = build(1);
    inst.fs.q.loops[0] = 1;
    return inst;
  }
  if (family.size() < 2) throw input_error("unknown family \"" + family + "\"");
  char letter = family[0];
  bool affine = family[1] == '~';
  std::string digits = family.substr(affine ? 2 : 1);
  if (digits.empty() || digits.size() > 4 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw input_error("unknown family \"" + family + "\"");
  int rank = std::stoi(digits);

  if (letter == 'A' && !affine) {
    if (rank < 1) throw input_error("A_n needs n >= 1");
    Instance inst = build(rank);
    for (int i = 0; i + 1 < rank; ++i) inst.fs.q.add_edge(i, i + 1);
    return inst;
  }
  if (letter == 'A' && affine) {
    if (rank < 1) throw input_error("A~n needs n >= 1");
    Instance inst = build(rank + 1);
    if (rank == 1) {
      inst.fs.q.add_edge(0, 1, 2);  // the cycle of length 2 degenerates to a double edge
    } else {
      for (int i = 0; i <= rank; ++i) inst.fs.q.add_edge(i, (i + 1) % (rank + 1));
    }
    return inst;
  }
  if (letter == 'D') {
    if (rank < 4) throw input_error("D_n needs n >= 4");
    Instance inst = build(affine ? rank + 1 : rank);
    for (int i = 0; i + 1 < rank - 1; ++i) inst.fs.q.add_edge(i, i + 1);
    inst.fs.q.add_edge(rank - 3, rank - 1);
    if (affine) inst.fs.q.add_edge(1, rank);  // second fork at the path's other end
    return inst;
  }
  if (letter == 'E') {
    if (rank < 6 || rank > 8) throw input_error("E_n needs n in {6, 7, 8}");
    Instance inst = build(affine ? rank + 1 : rank);
    for (int i = 0; i + 1 < rank - 1; ++i) inst.fs.q.add_edge(i, i + 1);
    inst.fs.q.add_edge(2, rank - 1);  // branch node off the third path vertex
    if (affine) {
      if (rank == 6) inst.fs.q.add_edge(rank - 1, rank);  // lengthen the branch arm
      if (rank == 7) inst.fs.q.add_edge(0, rank);         // lengthen the short path arm
      if (rank == 8) inst.fs.q.add_edge(rank - 2, rank);  // lengthen the long path arm
    }
    return inst;
  }
  throw input_error("unknown family \"" + family + "\"");
}

}  // namespace nwg
