#include <doctest.h>

#include <sstream>

#include "kirwan/cli.hpp"
#include "kirwan/fixtures.hpp"
#include "kirwan/json_io.hpp"
#include "support.hpp"

using namespace kirwan;
using json_io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json report(std::vector<std::string> args) {
  Run r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

const std::vector<std::vector<std::string>>& sample_requests() {
  static const std::vector<std::vector<std::string>> requests{
      {"classify-pencil", "--json", R"({"pencil": [["e0", "0"], ["e1", "e2"]]})"},
      {"classify-pencil", "--json", R"({"pencil": [["e0", "e1"], ["-e2", "e0"]]})"},
      {"classify-pencil", "--json", R"({"pencil": [["e0", "0"], ["0", "e0"]]})"},
      {"classify-family", "--json", R"({"fixture": "type1"})"},
      {"classify-family", "--json", R"({"family": [["e0", "-t^2*e1"], ["-t^2*e1", "e2"]]})"},
      {"lift", "--json", R"({"pencil": [["e0", "e1"], ["e1", "e2"]]})"},
      {"lift", "--json", R"({"family": [["e0", "-t^3*e1"], ["-t^3*e1", "e0 + t*e2"]]})"},
      {"canonical", "--json", R"({"phi": ["z0", "z1", "z0 + z2"]})"},
      {"canonical", "--json", R"({"phi": ["z0", "0", "-2*z0"]})"},
      {"dual", "--json", R"({"pencil": [["e0", "e1"], ["-e2", "e0"]]})"},
      {"trees", "--charge", "2"},
      {"fixtures"}};
  return requests;
}

}  // namespace

TEST_CASE("reports are deterministic and well formed") {
  for (auto args : sample_requests()) {
    CAPTURE(args[0]);
    Run first = run(args), second = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    json r = json::parse(first.out);
    CHECK(r["command"] == args[0]);
    CHECK(r["input_digest"].get<std::string>().size() == 16);
    CHECK(r["notes"].is_array());
    CHECK(r["result"].is_object());

    args.insert(args.end(), {"--format", "text"});
    Run text = run(args);
    CHECK(text.code == 0);
    CHECK(text.out == run(args).out);
    CHECK(text.out.rfind("command: " + args[0], 0) == 0);
  }
}

TEST_CASE("digest depends on the request only") {
  json a = report({"classify-pencil", "--json", R"({"pencil": [["e0", "e1"], ["-e2", "e0"]]})"});
  json b = report({"classify-pencil", "--json", R"({ "pencil" : [["e0","e1"],["-e2","e0"]] })"});
  json c = report({"classify-pencil", "--json", R"({"pencil": [["e0", "e1"], ["-e2", "e1"]]})"});
  CHECK(a["input_digest"] == b["input_digest"]);
  CHECK(a["input_digest"] != c["input_digest"]);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("exit codes") {
  CHECK(run({"classify-pencil", "--json", "{not json"}).code == kExitSchema);
  CHECK(run({"classify-pencil", "--json", R"({"pencil": [["e0"]]})"}).code == kExitSchema);
  CHECK(run({"classify-pencil", "--json", R"({"pencil": [["e0", "x"], ["e1", "e2"]]})"}).code == kExitSchema);
  CHECK(run({"classify-pencil", "--json", R"({"pencil": [["e0", "e0*e1"], ["e1", "e2"]]})"}).code == kExitSchema);
  CHECK(run({"classify-pencil"}).code == kExitSchema);
  CHECK(run({"classify-family", "--json", R"({"fixture": "nope"})"}).code == kExitSchema);
  CHECK(run({"trees"}).code == kExitSchema);
  CHECK(run({"trees", "--charge", "2", "--format", "xml"}).code == kExitSchema);
  CHECK(run({"unknown-command"}).code == kExitSchema);
  CHECK(run({"classify-pencil", "--input", "/nonexistent/request.json"}).code == kExitSchema);

  Run zg = run({"lift", "--json", R"({"pencil": [["e0", "0"], ["0", "e0"]]})"});
  CHECK(zg.code == kExitPrecondition);
  CHECK(zg.err.find("Z_G") != std::string::npos);
  CHECK(run({"classify-family", "--json", R"({"family": [["e0", "0"], ["0", "e2"]]})"}).code == kExitPrecondition);
  CHECK(run({"trees", "--charge", "0"}).code == kExitPrecondition);
  CHECK(run({"canonical", "--json", R"({"phi": ["0", "0", "0"]})"}).code == kExitPrecondition);
  CHECK(run({"dual", "--json", R"({"pencil": [["e0", "0"], ["e1", "0"]]})"}).code == kExitPrecondition);
  CHECK(run({"canonical", "--json", R"({"phi": ["z0", "0", "-2*z0"]})", "--field-ext", "deny"}).code ==
        kExitPrecondition);
  CHECK(run({"canonical", "--json", R"({"phi": ["z0", "0", "-2*z0"]})"}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("command results") {
  json trees = report({"trees", "--charge", "2"})["result"];
  CHECK(trees["weighted_count"] == 6);
  CHECK(trees["shape_count"] == 5);

  json notice = report({"classify-pencil", "--json", R"({"pencil": [["e0", "0"], ["e1", "e2"]]})"})["result"];
  CHECK(notice["stability"] == "ProperlySemistable");
  CHECK(notice["singularities"]["singular_points"] == json::array({json::array({"1", "0", "0"})}));

  json type1 = report({"classify-family", "--json", R"({"fixture": "type1"})"})["result"];
  CHECK(type1["type"] == "Type1");
  CHECK(type1["descriptor"]["tree"]["encoding"] == canonical_encoding(WeightedTree::chain({0, 2})));

  json fixtures = report({"fixtures"})["result"];
  CHECK(fixtures["all_match"] == true);
  CHECK(fixtures["families"].size() == 4);
  CHECK(fixtures["stable_pencils"].size() == 5);

  json irrational = report({"canonical", "--json", R"({"phi": ["z0", "0", "-2*z0"]})"});
  CHECK(json_io::uses_field_extension(irrational["result"]));
  CHECK(irrational["notes"].size() == 1);
}

TEST_CASE("emitted coordinates parse back") {
  for (const auto& f : family_fixtures()) {
    CAPTURE(f.name);
    CHECK(json_io::family_from_json(json_io::to_json(f.family)) == f.family);
    json limit = report({"classify-family", "--json", json{{"fixture", f.name}}.dump()})["result"]["limit"];
    YPoint y = limit_lift(f.family);
    XTildePoint p = make_xtilde_point(json_io::pencil_from_json(limit["base"]), json_io::phi_from_json(limit["phi"]));
    CHECK(projectively_equal(p, y.xpoint));
  }
  for (int i = 0; i < 50; ++i) {
    PencilMatrix a = testing_support::random_pencil();
    CHECK(json_io::pencil_from_json(json_io::to_json(a)) == a);
    if (is_in_ZG(a) || is_zero(pairwise_wedges(pluecker_phi(a)))) continue;
    json y = report({"lift", "--json", json{{"pencil", json_io::to_json(a)}}.dump()})["result"]["y"];
    json again = report({"lift", "--json", json{{"point", {{"base", y["base"]}, {"phi", y["phi"]}}}}.dump()});
    CHECK(again["result"]["y"] == y);
  }
  Scalar s(Rational(1, 3), Rational(-2, 5), 7);
  CHECK(json_io::scalar_from_json(json_io::to_json(s)) == s);
  CHECK(json_io::vec_from_json("1/2*e0 - e2") == VecV(Scalar(Rational(1, 2)), Scalar(0), Scalar(-1)));
}
