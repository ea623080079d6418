#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/json_io.hpp"

using fixtures::involutions;
using gp::GraphProduct;
using gp::GroupIso;
using gp::Json;
using gp::NormalForm;
using gp::Syllable;
using gp::VertexGroup;
using gp::VertexId;
using gp::Word;

namespace {

bool message_mentions(const gp::Error& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

#define CHECK_INPUT_ERROR(expr, needle)                      \
  do {                                                       \
    try {                                                    \
      (void)(expr);                                          \
      FAIL("expected InputError");                           \
    } catch (const gp::InputError& e) {                      \
      CHECK_MESSAGE(message_mentions(e, needle), e.what());  \
    }                                                        \
  } while (0)

}  // namespace

TEST_CASE("graph documents round-trip and name offenders") {
  const GraphProduct p = fixtures::c5_racg();
  const Json doc = gp::graph_to_json(p.graph());
  const gp::SimplicialGraph back = gp::graph_from_json(doc);
  CHECK(back.names() == p.graph().names());
  CHECK(back.edges() == p.graph().edges());

  CHECK_INPUT_ERROR(gp::graph_from_json(gp::parse_document(R"({"edges": []})")),
                    "missing key \"vertices\"");
  CHECK_INPUT_ERROR(
      gp::graph_from_json(gp::parse_document(
          R"({"vertices": ["a"], "edges": [["a"]]})")),
      "pair");
  CHECK_THROWS_AS(gp::graph_from_json(gp::parse_document(
                      R"({"vertices": ["a"], "edges": [["a", "q"]]})")),
                  gp::InputError);
}

TEST_CASE("group documents cover every kind") {
  const VertexGroup z2 = VertexGroup::cyclic(2);
  const VertexGroup back2 = gp::vertex_group_from_json(gp::vertex_group_to_json(z2));
  CHECK(back2.kind() == gp::GroupKind::Cyclic);
  CHECK(back2.order() == 2);

  const VertexGroup zz = VertexGroup::infinite_cyclic();
  CHECK_FALSE(gp::vertex_group_from_json(gp::vertex_group_to_json(zz)).is_finite());

  const VertexGroup z3t = VertexGroup::finite_table(
      {"e", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const VertexGroup back3 = gp::vertex_group_from_json(gp::vertex_group_to_json(z3t));
  CHECK(back3.kind() == gp::GroupKind::FiniteTable);
  CHECK(back3.order() == 3);
  CHECK(back3.value_name(1) == "a");
  CHECK(back3.mul(1, 2) == 0);

  CHECK_INPUT_ERROR(gp::vertex_group_from_json(gp::parse_document(
                        R"({"type": "quaternion"})")),
                    "unknown group type");
  CHECK_INPUT_ERROR(gp::vertex_group_from_json(gp::parse_document(
                        R"({"type": "cyclic"})")),
                    "missing key \"order\"");
}

TEST_CASE("product documents bind groups to vertices") {
  const GraphProduct p = fixtures::z2_z3_z2_path();
  const Json doc = gp::product_to_json(p);
  const GraphProduct back = gp::product_from_json(doc);
  CHECK(back.graph().names() == p.graph().names());
  CHECK(back.graph().edges() == p.graph().edges());
  for (VertexId v = 0; v < p.graph().size(); ++v) {
    CHECK(back.group(v).kind() == p.group(v).kind());
    CHECK(back.group(v).order() == p.group(v).order());
  }

  SUBCASE("order override permutes the ids") {
    Json reordered = doc;
    reordered["order"] = Json::array({"c", "b", "a"});
    const GraphProduct q = gp::product_from_json(reordered);
    CHECK(q.graph().name(0) == "c");
    CHECK(q.graph().name(2) == "a");
    CHECK(q.group(1).order() == 3);
    CHECK(q.graph().adjacent(0, 1));
    CHECK_FALSE(q.graph().adjacent(0, 2));

    reordered["order"] = Json::array({"a", "b"});
    CHECK_INPUT_ERROR(gp::product_from_json(reordered), "every vertex");
    reordered["order"] = Json::array({"a", "b", "q"});
    CHECK_INPUT_ERROR(gp::product_from_json(reordered), "unknown vertex \"q\"");
  }

  SUBCASE("missing and unknown group keys are named") {
    Json missing = doc;
    missing["groups"].erase("b");
    CHECK_INPUT_ERROR(gp::product_from_json(missing), "missing vertex \"b\"");
    Json extra = doc;
    extra["groups"]["q"] = Json{{"type", "cyclic"}, {"order", 2}};
    CHECK_INPUT_ERROR(gp::product_from_json(extra), "unknown vertex \"q\"");
  }
}

TEST_CASE("word documents name vertices and elements") {
  const GraphProduct p = fixtures::c5_racg();
  const Word w = gp::word_from_json(p, gp::parse_document(R"([["0","1"],["2","1"]])"));
  CHECK(w == involutions({0, 2}));
  CHECK(gp::word_to_json(p, p.reduce(w)).dump() == R"([["0","1"],["2","1"]])");

  const GraphProduct q = fixtures::z2_z3_z2_path();
  const Word wb = gp::word_from_json(q, gp::parse_document(R"([["b","2"]])"));
  CHECK(wb == Word{Syllable{1, 2}});
  // Cyclic exponents reduce mod the order.
  CHECK(gp::word_from_json(q, gp::parse_document(R"([["b","5"]])")) == wb);
  // Bare integers are tolerated on input.
  CHECK(gp::word_from_json(q, gp::parse_document(R"([["b",2]])")) == wb);

  const GraphProduct z = fixtures::c5_one_int();
  const Word neg = gp::word_from_json(z, gp::parse_document(R"([["0","-3"]])"));
  CHECK(neg == Word{Syllable{0, -3}});
  CHECK(gp::word_to_json(z, neg)[0][1] == "-3");

  CHECK_INPUT_ERROR(gp::word_from_json(p, gp::parse_document(R"([["9","1"]])")),
                    "unknown vertex \"9\"");
  CHECK_INPUT_ERROR(gp::word_from_json(p, gp::parse_document(R"([["0","x"]])")),
                    "word entry 0");
  CHECK_INPUT_ERROR(gp::word_from_json(p, gp::parse_document(R"([["0"]])")),
                    "pair");
  CHECK_INPUT_ERROR(gp::word_from_json(p, gp::parse_document(R"({})")),
                    "must be an array");
}

TEST_CASE("hyperplane documents canonicalize the base") {
  const GraphProduct p = fixtures::c5_racg();
  // x1 lies in <star(0)>, so the base strips to the identity.
  const gp::Hyperplane h = gp::hyperplane_from_json(
      p, gp::parse_document(R"({"label": "0", "base": [["1","1"]]})"));
  CHECK(h.label == 0);
  CHECK(h.base.is_identity());

  const gp::Hyperplane deep = gp::make_hyperplane(p, 2, involutions({0}));
  CHECK(gp::hyperplane_from_json(p, gp::hyperplane_to_json(p, deep)) == deep);
  CHECK_INPUT_ERROR(
      gp::hyperplane_from_json(p, gp::parse_document(R"({"label": "0"})")),
      "missing key \"base\"");
}

TEST_CASE("isomorphism documents carry tables and powers") {
  const VertexGroup z3 = VertexGroup::cyclic(3);
  const GroupIso inv = gp::iso_from_json(
      z3, z3, gp::parse_document(R"({"table": ["0","2","1"]})"));
  CHECK(inv.apply(1) == 2);
  CHECK(gp::iso_from_json(z3, z3, gp::iso_to_json(z3, z3, inv)) == inv);

  const VertexGroup zz = VertexGroup::infinite_cyclic();
  const GroupIso flip = gp::iso_from_json(zz, zz, gp::parse_document(R"({"power": -1})"));
  CHECK(flip.apply(4) == -4);
  CHECK(gp::iso_to_json(zz, zz, flip)["power"] == -1);

  CHECK_INPUT_ERROR(gp::iso_from_json(z3, z3, gp::parse_document(R"({"power": 1})")),
                    "groups are finite");
  CHECK_INPUT_ERROR(gp::iso_from_json(zz, zz, gp::parse_document(R"({"table": []})")),
                    "infinite");
  CHECK_INPUT_ERROR(gp::iso_from_json(z3, z3, gp::parse_document(R"({"table": ["0","2"]})")),
                    "one image per source element");
  CHECK_INPUT_ERROR(gp::iso_from_json(z3, z3, gp::parse_document(R"({})")),
                    "needs \"table\" or \"power\"");
}

TEST_CASE("local automorphism documents rebuild the relabelling") {
  const GraphProduct p = fixtures::c5_racg();
  const Json doc = gp::parse_document(R"({
    "sigma": {"0": "1", "1": "2", "2": "3", "3": "4", "4": "0"},
    "phis": {"0": {"table": ["0","1"]}, "1": {"table": ["0","1"]},
             "2": {"table": ["0","1"]}, "3": {"table": ["0","1"]},
             "4": {"table": ["0","1"]}}
  })");
  const gp::LocalAutomorphism rot = gp::local_from_json(p, doc);
  CHECK(rot.sigma == std::vector<VertexId>{1, 2, 3, 4, 0});
  CHECK(gp::local_from_json(p, gp::local_to_json(p, rot)) == rot);

  Json bad = doc;
  bad["sigma"].erase("3");
  CHECK_INPUT_ERROR(gp::local_from_json(p, bad), "missing vertex \"3\"");
  Json notiso = doc;
  notiso["sigma"] = Json{{"0", "1"}, {"1", "0"}, {"2", "2"}, {"3", "3"}, {"4", "4"}};
  CHECK_THROWS_AS(gp::local_from_json(p, notiso), gp::InputError);
}

TEST_CASE("automorphism documents compose generator records") {
  const GraphProduct p = fixtures::c5_racg();
  const Json doc = gp::parse_document(R"([
    {"kind": "inner", "g": [["0","1"]]},
    {"kind": "partial", "u": "0", "component": ["2","3"], "h": "1"}
  ])");
  const gp::Automorphism phi = gp::automorphism_from_json(p, doc);
  REQUIRE(phi.gens.size() == 2);
  const Json back = gp::automorphism_to_json(p, phi);
  const gp::Automorphism again = gp::automorphism_from_json(p, back);
  for (const Word& w : {involutions({2}), involutions({0, 2, 4}), Word{}}) {
    CHECK(gp::apply(p, phi, w) == gp::apply(p, again, w));
  }

  CHECK_INPUT_ERROR(
      gp::automorphism_from_json(p, gp::parse_document(R"([{"kind": "outer"}])")),
      "unknown automorphism kind");
  CHECK_THROWS_AS(
      gp::automorphism_from_json(p, gp::parse_document(
          R"([{"kind": "partial", "u": "0", "component": ["1"], "h": "1"}])")),
      gp::InputError);
}

TEST_CASE("conjugating data documents drive decomposition") {
  const GraphProduct p = fixtures::c5_racg();
  const gp::ConjugatingData d = gp::inner_conjugating(p, involutions({0}));
  const Json doc = gp::conjugating_to_json(d);
  const gp::ConjugatingData back = gp::conjugating_from_json(p, p, doc);
  for (VertexId u = 0; u < p.graph().size(); ++u) {
    CHECK(back.map[u].g == d.map[u].g);
    CHECK(back.map[u].w == d.map[u].w);
    CHECK(back.map[u].psi == d.map[u].psi);
  }

  const gp::DecompositionResult r = gp::decompose(back);
  const Json report = gp::decomposition_to_json(p, p, r);
  CHECK(report["complexities"] == Json::array({2, 0}));
  CHECK(report.dump().find("\"complexities\":[2,0]") != std::string::npos);
  CHECK(report["isometry"]["3"] == "3");

  Json missing = doc;
  missing["map"].erase("2");
  CHECK_INPUT_ERROR(gp::conjugating_from_json(p, p, missing),
                    "missing vertex \"2\"");
  Json extra = doc;
  extra["map"]["q"] = doc["map"]["0"];
  CHECK_INPUT_ERROR(gp::conjugating_from_json(p, p, extra),
                    "unknown vertex \"q\"");
  Json nopsi = doc;
  nopsi["map"]["1"].erase("psi");
  CHECK_INPUT_ERROR(gp::conjugating_from_json(p, p, nopsi),
                    "missing key \"psi\"");
}

TEST_CASE("images documents list one word per generator") {
  const GraphProduct p = fixtures::z2_z3_z2_path();
  std::vector<std::vector<Word>> images(3);
  images[0] = {Word{Syllable{0, 1}}};
  images[1] = {Word{Syllable{1, 1}}};
  images[2] = {Word{Syllable{2, 1}, Syllable{0, 1}, Syllable{2, 1}}};
  const Json doc = gp::images_to_json(p, p, images);
  CHECK(gp::images_from_json(p, p, doc) == images);

  Json wrong = doc;
  wrong["b"] = Json::array();
  CHECK_INPUT_ERROR(gp::images_from_json(p, p, wrong),
                    "needs 1 generator images, got 0");
  Json missing = doc;
  missing.erase("a");
  CHECK_INPUT_ERROR(gp::images_from_json(p, p, missing), "missing vertex \"a\"");
  Json extra = doc;
  extra["q"] = Json::array();
  CHECK_INPUT_ERROR(gp::images_from_json(p, p, extra), "unknown vertex \"q\"");
}

TEST_CASE("ball dumps list vertices edges and keys") {
  const GraphProduct p = fixtures::c5_racg();
  const gp::QmBall ball = gp::build_ball(p, 1);
  const Json doc = gp::ball_to_json(p, ball);
  CHECK(doc["radius"] == 1);
  REQUIRE(doc["vertices"].size() == 6);
  CHECK(doc["vertices"][0] == Json::array());
  REQUIRE(doc["edges"].size() == 5);
  for (const Json& e : doc["edges"]) {
    CHECK(e["from"] == 0);  // radius 1: every edge leaves the identity
    CHECK(e["element"] == "1");
  }
  CHECK(doc["hyperplanes"].size() == 5);

  const gp::TransversalityGraph tg =
      gp::transversality_graph(p, gp::build_ball(p, 2));
  const Json tdoc = gp::transversality_to_json(p, tg);
  CHECK(tdoc["nodes"].size() == tg.nodes.size());
  for (const Json& e : tdoc["edges"]) CHECK(e[0] < e[1]);
}

TEST_CASE("coset ball dumps carry reps types and squares") {
  const GraphProduct p = fixtures::c5_racg();
  const gp::DavisBall ball = gp::build_davis_ball(p, 0);
  const Json doc = gp::davis_ball_to_json(p, ball);
  CHECK(doc["vertices"].size() == 11);
  CHECK(doc["vertices"][0]["rep"] == Json::array());
  CHECK(doc["vertices"][0]["lambda"] == Json::array());
  CHECK(doc["squares"].size() == 5);
  for (const Json& sq : doc["squares"]) CHECK(sq.size() == 4);
  for (const Json& e : doc["edges"]) CHECK(e.contains("label"));
}

TEST_CASE("classification dumps spell out the girth") {
  const GraphProduct c5 = fixtures::c5_racg();
  const Json doc = gp::classification_to_json(c5.graph(), c5.graph().classify());
  CHECK(doc["girth"] == 5);
  CHECK(doc["molecular"] == true);
  CHECK(doc["atomic"] == true);
  CHECK(doc["separating_stars"] == Json::array());

  const GraphProduct k13 = fixtures::k13_racg();
  const Json star = gp::classification_to_json(k13.graph(), k13.graph().classify());
  CHECK(star["girth"] == "infinity");
  CHECK(star["molecular"] == false);
}

TEST_CASE("dot dumps name every vertex") {
  const GraphProduct p = fixtures::c5_racg();
  const std::string dot = gp::ball_to_dot(p, gp::build_ball(p, 1));
  CHECK(dot.find("graph ball {") == 0);
  CHECK(dot.find("v0 [label=\"e\"]") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);

  const std::string cdot = gp::davis_ball_to_dot(p, gp::build_davis_ball(p, 0));
  CHECK(cdot.find("<0,1>") != std::string::npos);
}

TEST_CASE("documents load from disk and reject bad syntax") {
  CHECK_THROWS_AS(gp::parse_document("{"), gp::InputError);
  CHECK_THROWS_AS(gp::load_document("/nonexistent/nowhere.json"), gp::InputError);

  const std::string path = "tmp_json_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"vertices": ["a"], "edges": []})";
  }
  const Json doc = gp::load_document(path);
  CHECK(gp::graph_from_json(doc).size() == 1);
  std::remove(path.c_str());
}
