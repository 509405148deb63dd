#include "nwg/report.hpp"

#include <algorithm>
#include <sstream>

namespace nwg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json vec_json(const Vec& v) { return ordered_json(v); }

Vec json_vec(const json& j, const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": expected an array of integers");
  Vec out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw input_error(where + ": expected an array of integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

std::vector<int> json_ints(const json& j, const std::string& where) {
  Vec v = json_vec(j, where);
  return std::vector<int>(v.begin(), v.end());
}

RootKind kind_from(const std::string& s) {
  if (s == "real") return RootKind::real;
  if (s == "isotropic") return RootKind::isotropic;
  if (s == "nonisotropic") return RootKind::nonisotropic;
  throw input_error("unknown root kind \"" + s + "\"");
}

CartanType type_from(const std::string& s) {
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G')
    throw input_error("unknown Cartan type \"" + s + "\"");
  return CartanType{s[0], std::stoi(s.substr(1))};
}

}  // namespace

Report compute_report(const Instance& inst) {
  Report r;
  r.instance = inst;
  normalized(inst.fs, &r.kept);
  r.group = namikawa_weyl_group(inst.fs);
  r.warnings.push_back(
      "nonemptiness of the variety is checked only through the necessary root condition "
      "on v + alpha_inf; no sufficient criterion is applied");
  for (const auto& f : r.group.factors)
    if (f.type.letter == 'B' || f.type.letter == 'C') {
      r.warnings.push_back(
          "a B/C factor is typed by the reconstructed Cartan matrix; the Weyl groups of B_n "
          "and C_n are isomorphic, so the order is unaffected by the transposed reading");
      break;
    }
  return r;
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["instance"] = emit_instance(r.instance);

  ordered_json red;
  ordered_json names = ordered_json::array();
  for (int i : r.kept) names.push_back(r.instance.names[i]);
  red["vertices"] = names;
  red["v"] = vec_json(r.group.reduced.v);
  red["w"] = vec_json(r.group.reduced.w);
  red["word"] = r.group.trace.word;
  red["v_start"] = vec_json(r.group.trace.v_before);
  j["reduced"] = red;

  ordered_json roots = ordered_json::array();
  for (const auto& c : r.group.roots) {
    ordered_json e;
    e["root"] = vec_json(c.root);
    e["kind"] = to_string(c.kind);
    e["leaf_type"] = c.leaf_type;
    roots.push_back(e);
  }
  j["codim2_roots"] = roots;

  ordered_json rels = ordered_json::array();
  for (const auto& rel : r.group.relations) {
    ordered_json e;
    e["form"] = std::string(1, rel.form);
    e["lhs"] = ordered_json::array(
        {ordered_json::array({rel.ci, rel.i}), ordered_json::array({rel.cj, rel.j})});
    e["rhs"] = ordered_json::array({rel.ck, rel.k});
    rels.push_back(e);
  }
  j["relations"] = rels;

  ordered_json factors = ordered_json::array();
  for (const auto& f : r.group.factors) {
    ordered_json e;
    e["type"] = to_string(f.type);
    e["members"] = f.members;
    e["m"] = vec_json(f.m);
    ordered_json adds = ordered_json::array();
    for (const auto& ad : f.additions) adds.push_back(ordered_json::array({ad.i, ad.j, ad.k}));
    e["additions"] = adds;
    e["simples"] = f.simples;
    ordered_json cartan = ordered_json::array();
    for (const auto& row : f.cartan) cartan.push_back(vec_json(row));
    e["cartan"] = cartan;
    e["order"] = weyl_group_order(f.type).str();
    factors.push_back(e);
  }
  j["factors"] = factors;

  j["group_order"] = r.group.order.str();
  j["codim2_leaf_count"] = r.group.factors.size();
  j["warnings"] = r.warnings;
  return j;
}

Report parse_report(const json& j) {
  if (!j.is_object() || !j.contains("schema_version") || j["schema_version"] != 1)
    throw input_error("report: missing or unsupported schema_version");
  Report r;
  r.instance = parse_instance(j.at("instance"));

  const json& red = j.at("reduced");
  for (const auto& name : red.at("vertices")) {
    auto it = std::find(r.instance.names.begin(), r.instance.names.end(), name.get<std::string>());
    if (it == r.instance.names.end())
      throw input_error("reduced: vertex \"" + name.get<std::string>() + "\" not in instance");
    r.kept.push_back((int)(it - r.instance.names.begin()));
  }
  int m = (int)r.kept.size();
  r.group.reduced.q = Quiver::make(m);
  for (int a = 0; a < m; ++a) {
    r.group.reduced.q.loops[a] = r.instance.fs.q.loops[r.kept[a]];
    for (int b = 0; b < m; ++b)
      r.group.reduced.q.edges[a][b] = r.instance.fs.q.edges[r.kept[a]][r.kept[b]];
  }
  r.group.reduced.v = json_vec(red.at("v"), "reduced.v");
  r.group.reduced.w = json_vec(red.at("w"), "reduced.w");
  r.group.trace.word = json_ints(red.at("word"), "reduced.word");
  r.group.trace.v_before = json_vec(red.at("v_start"), "reduced.v_start");
  r.group.trace.v_after = r.group.reduced.v;

  for (const auto& e : j.at("codim2_roots")) {
    CodimTwoRoot c;
    c.root = json_vec(e.at("root"), "codim2_roots.root");
    c.kind = kind_from(e.at("kind").get<std::string>());
    c.leaf_type = e.at("leaf_type").get<int>();
    r.group.roots.push_back(c);
  }

  for (const auto& e : j.at("relations")) {
    Relation rel;
    std::string form = e.at("form").get<std::string>();
    if (form.size() != 1) throw input_error("relations: form must be a single letter");
    rel.form = form[0];
    rel.ci = e.at("lhs").at(0).at(0).get<long long>();
    rel.i = e.at("lhs").at(0).at(1).get<int>();
    rel.cj = e.at("lhs").at(1).at(0).get<long long>();
    rel.j = e.at("lhs").at(1).at(1).get<int>();
    rel.ck = e.at("rhs").at(0).get<long long>();
    rel.k = e.at("rhs").at(1).get<int>();
    r.group.relations.push_back(rel);
  }

  for (const auto& e : j.at("factors")) {
    WeylFactor f;
    f.type = type_from(e.at("type").get<std::string>());
    f.members = json_ints(e.at("members"), "factors.members");
    f.m = json_vec(e.at("m"), "factors.m");
    for (const auto& ad : e.at("additions"))
      f.additions.push_back(
          FoldedAddition{ad.at(0).get<int>(), ad.at(1).get<int>(), ad.at(2).get<int>()});
    f.simples = json_ints(e.at("simples"), "factors.simples");
    for (const auto& row : e.at("cartan")) f.cartan.push_back(json_vec(row, "factors.cartan"));
    r.group.factors.push_back(f);
  }

  r.group.order = BigInt(j.at("group_order").get<std::string>());
  for (const auto& w : j.at("warnings")) r.warnings.push_back(w.get<std::string>());
  return r;
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  const auto& g = r.group;
  out << "input: " << r.instance.fs.q.n << " vertices, v = " << vec_to_string(r.instance.fs.v)
      << ", w = " << vec_to_string(r.instance.fs.w) << "\n";
  if ((int)r.kept.size() != r.instance.fs.q.n) {
    out << "normalized to " << r.kept.size() << " vertices (";
    for (size_t a = 0; a < r.kept.size(); ++a)
      out << (a ? " " : "") << r.instance.names[r.kept[a]];
    out << ")\n";
  }
  if (g.trace.word.empty()) {
    out << "parameter already dominant\n";
  } else {
    out << "reflection word:";
    for (int i : g.trace.word) out << " " << i;
    out << "\nreduced v = " << vec_to_string(g.reduced.v) << "\n";
  }
  out << "codimension-2 roots (" << g.roots.size() << "):\n";
  for (size_t i = 0; i < g.roots.size(); ++i)
    out << "  r" << i << " = " << vec_to_string(g.roots[i].root) << "  "
        << to_string(g.roots[i].kind) << ", type (" << g.roots[i].leaf_type << ")\n";
  out << "relations (" << g.relations.size() << "):\n";
  for (const auto& rel : g.relations) {
    auto term = [&](Int c, int idx) {
      std::ostringstream t;
      if (c != 1) t << c << "*";
      t << "r" << idx;
      return t.str();
    };
    out << "  " << term(rel.ci, rel.i) << " + " << term(rel.cj, rel.j) << " = "
        << term(rel.ck, rel.k) << "  [form " << rel.form << "]\n";
  }
  out << "factors (" << g.factors.size() << "):\n";
  for (const auto& f : g.factors) {
    out << "  " << to_string(f.type) << ": members {";
    for (size_t a = 0; a < f.members.size(); ++a) out << (a ? " " : "") << "r" << f.members[a];
    out << "}, m = " << vec_to_string(f.m) << ", order " << weyl_group_order(f.type).str() << "\n";
  }
  out << "codimension-2 leaves: " << g.factors.size() << "\n";
  out << "group order: " << g.order.str() << "\n";
  return out.str();
}

}  // namespace nwg
