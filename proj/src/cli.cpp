#include "kirwan/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "kirwan/errors.hpp"
#include "kirwan/fixtures.hpp"
#include "kirwan/json_io.hpp"

namespace kirwan {

namespace {

using json_io::json;
using json_io::to_json;

struct Options {
  std::string input_file;
  std::string inline_json;
  std::string format = "json";
  std::string field_ext = "allow";
  int charge = 0;
};

struct Outcome {
  json result;
  std::vector<std::string> notes;
};

const json& field(const json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return payload[key];
}

json load_payload(const Options& opt) {
  if (!opt.input_file.empty() && !opt.inline_json.empty()) throw SchemaError("use either --input or --json, not both");
  std::string text = opt.inline_json;
  if (!opt.input_file.empty()) {
    std::ifstream in(opt.input_file);
    if (!in) throw SchemaError("cannot read " + opt.input_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  if (text.empty()) return json::object();
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw SchemaError("the request payload must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

XTildePoint point_from_json(const json& j) {
  return make_xtilde_point(json_io::pencil_from_json(field(j, "base")), json_io::phi_from_json(field(j, "phi")));
}

PencilFamily family_from_payload(const json& payload) {
  if (payload.contains("fixture")) {
    const json& name = payload["fixture"];
    if (!name.is_string()) throw SchemaError("fixture must be a name");
    for (const auto& f : family_fixtures())
      if (f.name == name.get<std::string>()) return f.family;
    throw SchemaError("unknown fixture " + name.dump());
  }
  return json_io::family_from_json(field(payload, "family"));
}

json stability_json(Stability s) { return stability_name(s); }

Outcome classify_pencil(const json& payload) {
  Outcome o;
  const PencilMatrix a = json_io::pencil_from_json(field(payload, "pencil"));
  const QuadraticForm det = det_pencil(a);
  json& r = o.result;
  r["pencil"] = to_json(a);
  r["det"] = to_json(det);
  r["det_class"] = to_json(classify_form(det));
  r["stability"] = stability_json(stability_grassmannian(a));
  if (det.is_zero()) {
    o.notes.push_back("det(A) vanishes identically: the pencil is unstable and has no sheaf analysis");
  } else {
    r["singularities"] = to_json(sheaf_singularities(a));
  }
  if (is_in_ZG(a)) {
    o.notes.push_back("pencil lies in Z_G; its lift depends on a family through it");
    return o;
  }
  const XTildePoint p = lift_to_xtilde(a);
  const Stability sx = stability_xtilde(p);
  const StratumFlags flags = strata(p);
  json xt{{"point", to_json(p)}, {"stability", stability_json(sx)}, {"strata", to_json(flags)}};
  if (sx != Stability::Unstable) {
    xt["complete_conic"] = to_json(complete_conic(p));
  } else {
    o.notes.push_back("unstable point: no complete conic");
  }
  r["xtilde"] = xt;
  if (flags.in_GZR_closure) {
    o.notes.push_back("point lies in the closure of GZ_R; its Y lift depends on a family");
  } else {
    const YPoint y = lift_to_Y(p);
    r["y"] = json{{"psi", to_json(y.psi)}, {"stability", stability_json(stability_Y(y))}};
  }
  return o;
}

Outcome classify_family_command(const json& payload) {
  Outcome o;
  const PencilFamily f = family_from_payload(payload);
  const YPoint limit = limit_lift(f);
  const DegenerationType type = classify_family(f);
  json& r = o.result;
  r["family"] = to_json(f);
  r["limit"] = to_json(limit);
  r["limit_strata"] = to_json(strata(limit.xpoint));
  r["limit_stability"] = stability_json(stability_Y(limit));
  r["type"] = degeneration_type_name(type);
  if (type == DegenerationType::NotSemistable) {
    o.notes.push_back("limit is not semistable in Y: no tree bundle descriptor");
    return o;
  }
  const TreeBundleDescriptor d = tree_bundle_descriptor(f);
  r["descriptor"] = to_json(d);
  return o;
}

Outcome lift_command(const json& payload) {
  Outcome o;
  if (payload.contains("family")) {
    o.result["limit"] = to_json(limit_lift(json_io::family_from_json(payload["family"])));
    return o;
  }
  const XTildePoint p = payload.contains("point") ? point_from_json(payload["point"])
                                                  : lift_to_xtilde(json_io::pencil_from_json(field(payload, "pencil")));
  o.result["xtilde"] = to_json(p);
  o.result["y"] = to_json(lift_to_Y(p));
  return o;
}

Outcome canonical_command(const json& payload) {
  Outcome o;
  const Phi phi = json_io::phi_from_json(field(payload, "phi"));
  const CanonicalClass c = canonical_reduce(phi);
  o.result["phi"] = to_json(phi);
  o.result["kind"] = canonical_kind_name(c.kind);
  o.result["reduced"] = to_json(c.reduced);
  o.result["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  if (!c.witness) o.notes.push_back("the discriminant has rank 3: phi is already generic and is not reduced");
  return o;
}

Outcome trees_command(const json& payload, const Options& opt) {
  Outcome o;
  int n = opt.charge;
  if (payload.contains("charge")) {
    if (!payload["charge"].is_number_integer()) throw SchemaError("charge must be an integer");
    n = payload["charge"].get<int>();
  }
  const TreeEnumeration e = enumerate_trees(n);
  json trees = json::array(), shapes = json::array();
  for (const auto& t : e.weighted) trees.push_back(to_json(t));
  for (const auto& s : e.shapes) shapes.push_back(s.encoding);
  o.result = json{{"charge", n},
                  {"weighted_count", e.weighted.size()},
                  {"shape_count", e.shapes.size()},
                  {"trees", trees},
                  {"shapes", shapes}};
  return o;
}

Outcome dual_command(const json& payload) {
  Outcome o;
  const XTildePoint p = payload.contains("point") ? point_from_json(payload["point"])
                                                  : lift_to_xtilde(json_io::pencil_from_json(field(payload, "pencil")));
  o.result["point"] = to_json(p);
  o.result["dual"] = to_json(dual_conic(p));
  return o;
}

Outcome fixtures_command() {
  Outcome o;
  json families = json::array();
  bool all_match = true;
  for (const auto& f : family_fixtures()) {
    const DegenerationType type = classify_family(f.family);
    all_match = all_match && type == f.expected;
    families.push_back(json{{"name", f.name},
                            {"description", f.description},
                            {"family", to_json(f.family)},
                            {"expected", degeneration_type_name(f.expected)},
                            {"classified", degeneration_type_name(type)},
                            {"limit", to_json(limit_lift(f.family))},
                            {"tree", to_json(tree_bundle_descriptor(f.family).tree)},
                            {"match", type == f.expected}});
  }
  json pencils = json::array();
  for (const auto& p : stable_pencil_fixtures()) {
    pencils.push_back(json{{"name", p.name},
                           {"pencil", to_json(p.pencil)},
                           {"det", to_json(det_pencil(p.pencil))},
                           {"stability", stability_json(stability_grassmannian(p.pencil))}});
  }
  o.result = json{{"families", families}, {"stable_pencils", pencils}, {"all_match", all_match}};
  if (!all_match) o.notes.push_back("some fixtures do not classify as expected");
  return o;
}

// Text rendering.

std::optional<std::string> leaf_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return std::string("-");
  if (j.is_boolean() || j.is_number()) return j.dump();
  if (j.is_object() && j.size() == 3 && j.contains("a") && j.contains("b") && j.contains("d")) {
    return j["a"].get<std::string>() + " + " + j["b"].get<std::string>() + "*sqrt(" + j["d"].get<std::string>() + ")";
  }
  return std::nullopt;
}

/// A leaf, or a flat list of leaves.
std::optional<std::string> inline_text(const json& j) {
  if (auto leaf = leaf_text(j)) return leaf;
  if (!j.is_array()) return std::nullopt;
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto item = leaf_text(j[i]);
    if (!item) return std::nullopt;
    out += (i ? ", " : "") + *item;
  }
  return out + "]";
}

/// One matrix row: inline items separated by two spaces.
std::optional<std::string> row_text(const json& j) {
  if (auto t = inline_text(j)) return t;
  if (!j.is_array()) return std::nullopt;
  std::string out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto item = inline_text(j[i]);
    if (!item) return std::nullopt;
    out += (i ? "  " : "") + *item;
  }
  return out;
}

void render_tree(const json& t, const std::string& pad, std::ostream& out) {
  const json& parent = t["parent"];
  const json& charge = t["charge"];
  std::vector<std::vector<std::size_t>> kids(parent.size());
  std::size_t root = 0;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v].is_null()) {
      root = v;
    } else {
      kids[parent[v].get<std::size_t>()].push_back(v);
    }
  }
  std::function<void(std::size_t, const std::string&)> walk = [&](std::size_t v, const std::string& indent) {
    out << pad << indent << "vertex " << v << " charge " << charge[v].get<int>() << "\n";
    for (std::size_t c : kids[v]) walk(c, indent + "  ");
  };
  walk(root, "");
  out << pad << "encoding " << t["encoding"].get<std::string>() << "\n";
}

void render(const json& j, const std::string& pad, std::ostream& out) {
  if (auto t = inline_text(j)) {
    out << pad << *t << "\n";
    return;
  }
  if (j.is_object() && j.contains("parent") && j.contains("charge") && j.contains("encoding")) {
    render_tree(j, pad, out);
    return;
  }
  if (j.is_array()) {
    bool matrix = !j.empty();
    for (const auto& row : j) matrix = matrix && row_text(row).has_value();
    for (const auto& row : j) {
      if (matrix) {
        out << pad << "| " << *row_text(row) << "\n";
      } else {
        out << pad << "-\n";
        render(row, pad + "  ", out);
      }
    }
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (auto t = inline_text(value)) {
      out << pad << key << ": " << *t << "\n";
    } else {
      out << pad << key << ":\n";
      render(value, pad + "  ", out);
    }
  }
}

void render_text(const json& report, std::ostream& out) {
  out << "command: " << report["command"].get<std::string>() << "\n";
  out << "input digest: " << report["input_digest"].get<std::string>() << "\n";
  render(report["result"], "", out);
  for (const auto& n : report["notes"]) out << "note: " << n.get<std::string>() << "\n";
}

int execute(const std::string& command, const Options& opt, std::ostream& out) {
  if (opt.format != "json" && opt.format != "text") throw SchemaError("--format must be json or text");
  if (opt.field_ext != "allow" && opt.field_ext != "deny") throw SchemaError("--field-ext must be allow or deny");
  json payload = load_payload(opt);
  if (command == "trees" && !payload.contains("charge")) payload["charge"] = opt.charge;

  Outcome o;
  if (command == "classify-pencil") {
    o = classify_pencil(payload);
  } else if (command == "classify-family") {
    o = classify_family_command(payload);
  } else if (command == "lift") {
    o = lift_command(payload);
  } else if (command == "canonical") {
    o = canonical_command(payload);
  } else if (command == "trees") {
    o = trees_command(payload, opt);
  } else if (command == "dual") {
    o = dual_command(payload);
  } else {
    o = fixtures_command();
  }

  if (json_io::uses_field_extension(o.result)) {
    if (opt.field_ext == "deny") {
      throw FieldExtensionError("the result needs a quadratic field extension and --field-ext is deny");
    }
    o.notes.push_back("result uses a quadratic field extension");
  }
  json report{{"command", command},
              {"input_digest", fnv1a_hex(command + "\n" + payload.dump())},
              {"result", o.result},
              {"notes", o.notes}};
  if (opt.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out);
  }
  return kExitOk;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << h;
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on pencils of conics, their Kirwan blow-ups and limit tree bundles", "kirwan"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"classify-pencil", "Determinant conic, stability, singularities and lifts of a pencil"},
      {"classify-family", "Limit point, degeneration type and tree bundle descriptor of a family"},
      {"lift", "Coordinates in the first and second blow-up"},
      {"canonical", "Reduce the exceptional coordinate to a normal form with a witness"},
      {"trees", "Enumerate weighted trees of a given total charge"},
      {"dual", "Dual conic of a stable point"},
      {"fixtures", "Classify the built-in families and stable pencils"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", opt.input_file, "Read the request JSON from a file");
    sub->add_option("--json", opt.inline_json, "Inline request JSON");
    sub->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--field-ext", opt.field_ext, "allow or deny quadratic extensions")
        ->check(CLI::IsMember({"allow", "deny"}));
    if (name == "trees") sub->add_option("--charge", opt.charge, "Total charge n")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitSchema;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, opt, out);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace kirwan
