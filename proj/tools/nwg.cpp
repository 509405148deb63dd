// Command line front end: compute the Namikawa-Weyl group of an affinized
// quiver variety, list roots, tabulate subgeneric strata, or cross-check the
// wall classification against the brute-force stratification.
#include <iostream>

#include "CLI11.hpp"
#include "nwg/report.hpp"
#include "nwg/strata.hpp"

namespace {

using namespace nwg;

Vec parse_csv(const std::string& s, const std::string& what) {
  Vec out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw input_error(what + ": \"" + tok + "\" is not an integer");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Instance load_instance(const std::string& file, const std::string& quiver, const std::string& v_csv,
                       const std::string& w_csv) {
  if (!file.empty() && !quiver.empty())
    throw input_error("give either an instance file or --quiver, not both");
  if (file.empty() && quiver.empty()) throw input_error("no input: pass a file or --quiver");
  if (!file.empty()) {
    if (!v_csv.empty() || !w_csv.empty())
      throw input_error("--v/--w are only for --quiver; the file carries its own vectors");
    return parse_instance_file(file);
  }
  Instance inst = make_family(quiver);
  if (v_csv.empty()) throw input_error("--quiver requires --v");
  Vec v = parse_csv(v_csv, "--v");
  if ((int)v.size() != inst.fs.q.n)
    throw input_error("--v has " + std::to_string(v.size()) + " entries; " + quiver + " has " +
                      std::to_string(inst.fs.q.n) + " vertices");
  if (!all_nonneg(v)) throw input_error("--v entries must be nonnegative");
  inst.fs.v = v;
  if (!w_csv.empty()) {
    Vec w = parse_csv(w_csv, "--w");
    if ((int)w.size() != inst.fs.q.n)
      throw input_error("--w has " + std::to_string(w.size()) + " entries; " + quiver + " has " +
                        std::to_string(inst.fs.q.n) + " vertices");
    if (!all_nonneg(w)) throw input_error("--w entries must be nonnegative");
    inst.fs.w = w;
  }
  inst.fs.validate();
  return inst;
}

int cmd_compute(const Instance& inst, const std::string& format) {
  Report r = compute_report(inst);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (format == "json")
    std::cout << report_json(r).dump(2) << "\n";
  else
    std::cout << report_text(r);
  return 0;
}

int cmd_roots(const Instance& inst, const std::string& format) {
  auto roots = positive_roots_leq(inst.fs.q, inst.fs.v);
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : roots) {
      nlohmann::ordered_json e;
      e["root"] = r.root;
      e["kind"] = to_string(r.kind);
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "positive roots <= v (" << roots.size() << "):\n";
    for (const auto& r : roots)
      std::cout << "  " << vec_to_string(r.root) << "  " << to_string(r.kind) << "\n";
  }
  return 0;
}

int cmd_strata(const Instance& inst, const std::string& v1_csv, const std::string& format) {
  if (v1_csv.empty()) throw input_error("strata requires --v1");
  Vec v1 = parse_csv(v1_csv, "--v1");
  if ((int)v1.size() != inst.fs.q.n)
    throw input_error("--v1 has " + std::to_string(v1.size()) + " entries; the quiver has " +
                      std::to_string(inst.fs.q.n) + " vertices");
  SubgenericContext ctx = make_subgeneric(inst.fs, v1);
  auto types = enumerate_representation_types(ctx);
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& t : types) {
      nlohmann::ordered_json e;
      nlohmann::ordered_json slots = nlohmann::ordered_json::array();
      for (const auto& s : t.slots)
        slots.push_back(nlohmann::ordered_json{{"dim", s.dim}, {"mult", s.mult}});
      e["slots"] = slots;
      e["dimension"] = t.dimension;
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "representation types (" << types.size() << "):\n";
    for (const auto& t : types) {
      std::cout << "  dim " << t.dimension << ":";
      for (const auto& s : t.slots) std::cout << " " << vec_to_string(s.dim) << "x" << s.mult;
      std::cout << "\n";
    }
  }
  return 0;
}

// Wall classification vs brute-force stratification on every candidate wall,
// and fast path vs general pipeline where one applies. Nonzero exit on any
// disagreement.
int cmd_check(const Instance& inst) {
  const FramedSetting& fs = inst.fs;
  if (!nu_dominant(fs))
    throw input_error("check requires a dominant parameter; run compute to see the reduction");
  NamikawaGroup general = namikawa_weyl_group(fs);  // throws if the variety is empty

  int checked = 0, mismatches = 0;
  for (const auto& cand : positive_roots_leq(fs.q, fs.v)) {
    if (!is_primitive_root(fs.q, cand.root)) continue;
    SubgenericContext ctx = make_subgeneric(fs, cand.root);
    bool classified = classify_codim2_root(fs, cand.root).has_value();
    bool leaf = has_codim2_leaf_bruteforce(ctx);
    ++checked;
    if (classified != leaf) {
      ++mismatches;
      std::cout << "MISMATCH at v1 = " << vec_to_string(cand.root) << ": classification says "
                << (classified ? "leaf" : "no leaf") << ", stratification says "
                << (leaf ? "leaf" : "no leaf") << "\n";
    }
  }
  std::cout << "classification vs stratification: " << checked << " walls checked, " << mismatches
            << " mismatches\n";

  bool fast_ok = true;
  if (is_dynkin_type(fs.q)) {
    fast_ok = dynkin_fast_path(fs) == general;
    std::cout << "finite-type fast path vs pipeline: " << (fast_ok ? "agree" : "DISAGREE") << "\n";
  } else if (is_affine_type(fs.q)) {
    fast_ok = affine_fast_path(fs) == general;
    std::cout << "affine fast path vs pipeline: " << (fast_ok ? "agree" : "DISAGREE") << "\n";
  }
  std::cout << "group order: " << general.order.str() << "\n";
  return (mismatches == 0 && fast_ok) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Namikawa-Weyl groups of affinized quiver varieties"};
  app.require_subcommand(1);

  std::string file, quiver, v_csv, w_csv, v1_csv, format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "instance file (JSON)");
    sub->add_option("--quiver", quiver, "family shorthand, e.g. A3, D~4, E6, Jordan");
    sub->add_option("--v", v_csv, "dimension vector, comma separated (with --quiver)");
    sub->add_option("--w", w_csv, "framing vector, comma separated (with --quiver)");
    sub->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* compute = app.add_subcommand("compute", "full Namikawa-Weyl group report");
  add_common(compute);
  CLI::App* roots = app.add_subcommand("roots", "positive roots of the base quiver up to v");
  add_common(roots);
  CLI::App* strata = app.add_subcommand("strata", "representation types on a subgeneric wall");
  add_common(strata);
  strata->add_option("--v1", v1_csv, "the wall root, comma separated");
  CLI::App* check = app.add_subcommand("check", "cross-validate the two independent methods");
  add_common(check);

  CLI11_PARSE(app, argc, argv);

  try {
    Instance inst = load_instance(file, quiver, v_csv, w_csv);
    if (compute->parsed()) return cmd_compute(inst, format);
    if (roots->parsed()) return cmd_roots(inst, format);
    if (strata->parsed()) return cmd_strata(inst, v1_csv, format);
    return cmd_check(inst);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const empty_variety_error& e) {
    std::cerr << "empty variety: " << e.what() << "\n";
    return 3;
  } catch (const theorem_error& e) {
    std::cerr << "theorem contradiction: " << e.what() << "\n";
    return 4;
  } catch (const contract_error& e) {
    std::cerr << "internal contract violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
