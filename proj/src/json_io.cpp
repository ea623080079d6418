#include "graphprod/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/errors.hpp"

namespace gp {

namespace {

const Json& require_key(const Json& doc, const std::string& key,
                        const std::string& what) {
  if (!doc.is_object())
    throw InputError(what + " must be an object, got " + doc.type_name());
  auto it = doc.find(key);
  if (it == doc.end())
    throw InputError(what + " is missing key \"" + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string())
    throw InputError(what + " must be a string, got " + j.type_name());
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw InputError(what + " must be an integer, got " + j.type_name());
  return j.get<int>();
}

const Json& as_array(const Json& j, const std::string& what) {
  if (!j.is_array())
    throw InputError(what + " must be an array, got " + j.type_name());
  return j;
}

const Json& as_object(const Json& j, const std::string& what) {
  if (!j.is_object())
    throw InputError(what + " must be an object, got " + j.type_name());
  return j;
}

VertexId vertex_by_name(const SimplicialGraph& g, const Json& j,
                        const std::string& what) {
  const std::string name = as_string(j, what);
  const auto id = g.index_of(name);
  if (!id) throw InputError(what + " names an unknown vertex \"" + name + "\"");
  return *id;
}

// Element names are strings throughout; bare integers are tolerated on input
// for the cyclic kinds.
std::string element_name_of(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw InputError(what + " must be an element name, got " + j.type_name());
}

GroupValue element_by_name(const VertexGroup& g, const Json& j,
                           const std::string& what) {
  const std::string name = element_name_of(j, what);
  try {
    return g.value_by_name(name);
  } catch (const InputError& e) {
    throw InputError(what + ": " + e.what());
  }
}

}  // namespace

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("invalid JSON document");
  return doc;
}

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  Json doc = Json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) throw InputError("invalid JSON in \"" + path + "\"");
  return doc;
}

SimplicialGraph graph_from_json(const Json& doc) {
  const Json& vs = as_array(require_key(doc, "vertices", "graph document"),
                            "\"vertices\"");
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (const Json& v : vs) names.push_back(as_string(v, "vertex name"));

  const Json& es = as_array(require_key(doc, "edges", "graph document"),
                            "\"edges\"");
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(es.size());
  for (const Json& e : es) {
    as_array(e, "edge");
    if (e.size() != 2) throw InputError("edge must be a pair of vertex names");
    edges.emplace_back(as_string(e[0], "edge endpoint"),
                       as_string(e[1], "edge endpoint"));
  }
  return SimplicialGraph(std::move(names), edges);
}

Json graph_to_json(const SimplicialGraph& g) {
  Json vs = Json::array();
  for (VertexId v = 0; v < g.size(); ++v) vs.push_back(g.name(v));
  Json es = Json::array();
  for (const auto& [a, b] : g.edges())
    es.push_back(Json::array({g.name(a), g.name(b)}));
  return Json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

VertexGroup vertex_group_from_json(const Json& doc) {
  const std::string type =
      as_string(require_key(doc, "type", "group document"), "\"type\"");
  if (type == "cyclic") {
    return VertexGroup::cyclic(
        as_int(require_key(doc, "order", "cyclic group document"), "\"order\""));
  }
  if (type == "int") return VertexGroup::infinite_cyclic();
  if (type == "table") {
    const Json& els = as_array(
        require_key(doc, "elements", "table group document"), "\"elements\"");
    std::vector<std::string> elements;
    elements.reserve(els.size());
    for (const Json& e : els) elements.push_back(as_string(e, "element name"));
    const Json& rows = as_array(
        require_key(doc, "table", "table group document"), "\"table\"");
    std::vector<std::vector<int>> table;
    table.reserve(rows.size());
    for (const Json& row : rows) {
      as_array(row, "table row");
      std::vector<int> r;
      r.reserve(row.size());
      for (const Json& cell : row) r.push_back(as_int(cell, "table cell"));
      table.push_back(std::move(r));
    }
    return VertexGroup::finite_table(std::move(elements), std::move(table));
  }
  throw InputError("unknown group type \"" + type + "\"");
}

Json vertex_group_to_json(const VertexGroup& g) {
  switch (g.kind()) {
    case GroupKind::Cyclic:
      return Json{{"type", "cyclic"}, {"order", g.order()}};
    case GroupKind::InfiniteCyclic:
      return Json{{"type", "int"}};
    case GroupKind::FiniteTable: {
      Json els = Json::array();
      for (int i = 0; i < g.order(); ++i) els.push_back(g.value_name(i));
      Json rows = Json::array();
      for (int i = 0; i < g.order(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < g.order(); ++j)
          row.push_back(static_cast<int>(g.mul(i, j)));
        rows.push_back(std::move(row));
      }
      return Json{{"type", "table"}, {"elements", std::move(els)},
                  {"table", std::move(rows)}};
    }
  }
  throw InputError("unknown group kind");
}

GraphProduct product_from_json(const Json& doc) {
  SimplicialGraph graph =
      graph_from_json(require_key(doc, "graph", "product document"));

  if (doc.is_object() && doc.contains("order")) {
    const Json& order = as_array(doc["order"], "\"order\"");
    if (static_cast<int>(order.size()) != graph.size())
      throw InputError("\"order\" must list every vertex exactly once");
    std::vector<std::string> names;
    names.reserve(order.size());
    for (const Json& v : order) {
      const std::string name = as_string(v, "\"order\" entry");
      if (!graph.index_of(name))
        throw InputError("\"order\" names an unknown vertex \"" + name + "\"");
      names.push_back(name);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : graph.edges())
      edges.emplace_back(graph.name(a), graph.name(b));
    graph = SimplicialGraph(std::move(names), edges);  // rejects duplicates
  }

  const Json& groups_doc =
      as_object(require_key(doc, "groups", "product document"), "\"groups\"");
  for (const auto& [key, unused] : groups_doc.items()) {
    (void)unused;
    if (!graph.index_of(key))
      throw InputError("groups document names an unknown vertex \"" + key +
                       "\"");
  }
  std::vector<VertexGroup> groups;
  groups.reserve(graph.size());
  for (VertexId v = 0; v < graph.size(); ++v) {
    const std::string& name = graph.name(v);
    auto it = groups_doc.find(name);
    if (it == groups_doc.end())
      throw InputError("groups document is missing vertex \"" + name + "\"");
    try {
      groups.push_back(vertex_group_from_json(*it));
    } catch (const InputError& e) {
      throw InputError("group of vertex \"" + name + "\": " + e.what());
    }
  }
  return GraphProduct(std::move(graph), VertexGroups(std::move(groups)));
}

Json product_to_json(const GraphProduct& p) {
  Json groups = Json::object();
  for (VertexId v = 0; v < p.graph().size(); ++v)
    groups[p.graph().name(v)] = vertex_group_to_json(p.group(v));
  return Json{{"graph", graph_to_json(p.graph())}, {"groups", std::move(groups)}};
}

Word word_from_json(const GraphProduct& p, const Json& doc) {
  const Json& arr = as_array(doc, "word document");
  Word w;
  w.reserve(arr.size());
  int i = 0;
  for (const Json& entry : arr) {
    const std::string what = "word entry " + std::to_string(i);
    as_array(entry, what);
    if (entry.size() != 2)
      throw InputError(what + " must be a [vertex, element] pair");
    const VertexId v = vertex_by_name(p.graph(), entry[0], what);
    const GroupValue a = element_by_name(p.group(v), entry[1], what);
    w.push_back(Syllable{v, a});
    ++i;
  }
  return w;
}

Json word_to_json(const GraphProduct& p, const Word& w) {
  Json arr = Json::array();
  for (const Syllable& s : w)
    arr.push_back(Json::array(
        {p.graph().name(s.vertex), p.group(s.vertex).value_name(s.value)}));
  return arr;
}

Json word_to_json(const GraphProduct& p, const NormalForm& w) {
  return word_to_json(p, w.syllables());
}

Hyperplane hyperplane_from_json(const GraphProduct& p, const Json& doc) {
  const VertexId label = vertex_by_name(
      p.graph(), require_key(doc, "label", "hyperplane document"), "\"label\"");
  const Word base =
      word_from_json(p, require_key(doc, "base", "hyperplane document"));
  return make_hyperplane(p, label, base);
}

Json hyperplane_to_json(const GraphProduct& p, const Hyperplane& h) {
  return Json{{"label", p.graph().name(h.label)},
              {"base", word_to_json(p, h.base)}};
}

GroupIso iso_from_json(const VertexGroup& source, const VertexGroup& target,
                       const Json& doc) {
  as_object(doc, "isomorphism document");
  if (doc.contains("power")) {
    if (source.is_finite() || target.is_finite())
      throw InputError(
          "isomorphism document has \"power\" but the groups are finite");
    return GroupIso::infinite_cyclic(as_int(doc["power"], "\"power\""));
  }
  if (!doc.contains("table"))
    throw InputError("isomorphism document needs \"table\" or \"power\"");
  if (!source.is_finite() || !target.is_finite())
    throw InputError(
        "isomorphism document has \"table\" but a group is infinite");
  const Json& entries = as_array(doc["table"], "\"table\"");
  if (static_cast<int>(entries.size()) != source.order())
    throw InputError("isomorphism table must list one image per source element");
  std::vector<GroupValue> table;
  table.reserve(entries.size());
  for (const Json& e : entries)
    table.push_back(element_by_name(target, e, "isomorphism table entry"));
  return GroupIso::finite(source, target, std::move(table));
}

Json iso_to_json(const VertexGroup& source, const VertexGroup& target,
                 const GroupIso& iso) {
  if (!iso.finite_kind()) return Json{{"power", iso.power()}};
  Json table = Json::array();
  for (int a = 0; a < source.order(); ++a)
    table.push_back(target.value_name(iso.apply(a)));
  return Json{{"table", std::move(table)}};
}

LocalAutomorphism local_from_json(const GraphProduct& p, const Json& doc) {
  const Json& sigma_doc =
      as_object(require_key(doc, "sigma", "local automorphism"), "\"sigma\"");
  const Json& phis_doc =
      as_object(require_key(doc, "phis", "local automorphism"), "\"phis\"");
  const int n = p.graph().size();
  LocalAutomorphism la;
  la.sigma.resize(n, -1);
  for (VertexId u = 0; u < n; ++u) {
    const std::string& name = p.graph().name(u);
    auto it = sigma_doc.find(name);
    if (it == sigma_doc.end())
      throw InputError("\"sigma\" is missing vertex \"" + name + "\"");
    la.sigma[u] = vertex_by_name(p.graph(), *it, "\"sigma\" image");
  }
  la.phis.reserve(n);
  for (VertexId u = 0; u < n; ++u) {
    const std::string& name = p.graph().name(u);
    auto it = phis_doc.find(name);
    if (it == phis_doc.end())
      throw InputError("\"phis\" is missing vertex \"" + name + "\"");
    la.phis.push_back(iso_from_json(p.group(u), p.group(la.sigma[u]), *it));
  }
  validate_local(p, la);
  return la;
}

Json local_to_json(const GraphProduct& p, const LocalAutomorphism& la) {
  Json sigma = Json::object();
  Json phis = Json::object();
  for (VertexId u = 0; u < p.graph().size(); ++u) {
    sigma[p.graph().name(u)] = p.graph().name(la.sigma[u]);
    phis[p.graph().name(u)] =
        iso_to_json(p.group(u), p.group(la.sigma[u]), la.phis[u]);
  }
  return Json{{"sigma", std::move(sigma)}, {"phis", std::move(phis)}};
}

Automorphism automorphism_from_json(const GraphProduct& p, const Json& doc) {
  const Json& arr = as_array(doc, "automorphism document");
  Automorphism phi;
  phi.gens.reserve(arr.size());
  for (const Json& gen : arr) {
    const std::string kind =
        as_string(require_key(gen, "kind", "automorphism generator"),
                  "\"kind\"");
    AutoGen g;
    if (kind == "inner") {
      g.kind = AutoGen::Kind::Inner;
      g.inner_g =
          word_from_json(p, require_key(gen, "g", "inner generator"));
    } else if (kind == "partial") {
      g.kind = AutoGen::Kind::Partial;
      g.partial.u = vertex_by_name(
          p.graph(), require_key(gen, "u", "partial conjugation"), "\"u\"");
      const Json& comp = as_array(
          require_key(gen, "component", "partial conjugation"), "\"component\"");
      std::vector<VertexId> vs;
      for (const Json& v : comp)
        vs.push_back(vertex_by_name(p.graph(), v, "\"component\" entry"));
      g.partial.component = make_vertex_set(std::move(vs));
      g.partial.h = element_by_name(
          p.group(g.partial.u), require_key(gen, "h", "partial conjugation"),
          "\"h\"");
      validate_partial(p, g.partial);
    } else if (kind == "local") {
      g.kind = AutoGen::Kind::Local;
      g.local = local_from_json(p, gen);
    } else {
      throw InputError("unknown automorphism kind \"" + kind + "\"");
    }
    phi.gens.push_back(std::move(g));
  }
  return phi;
}

Json automorphism_to_json(const GraphProduct& p, const Automorphism& phi) {
  Json arr = Json::array();
  for (const AutoGen& g : phi.gens) {
    switch (g.kind) {
      case AutoGen::Kind::Inner:
        arr.push_back(Json{{"kind", "inner"}, {"g", word_to_json(p, g.inner_g)}});
        break;
      case AutoGen::Kind::Partial: {
        Json comp = Json::array();
        for (VertexId v : g.partial.component) comp.push_back(p.graph().name(v));
        arr.push_back(Json{{"kind", "partial"},
                           {"u", p.graph().name(g.partial.u)},
                           {"component", std::move(comp)},
                           {"h", p.group(g.partial.u).value_name(g.partial.h)}});
        break;
      }
      case AutoGen::Kind::Local: {
        Json local = local_to_json(p, g.local);
        local["kind"] = "local";
        arr.push_back(std::move(local));
        break;
      }
    }
  }
  return arr;
}

ConjugatingData conjugating_from_json(const GraphProduct& source,
                                      const GraphProduct& target,
                                      const Json& doc) {
  const Json& map =
      as_object(require_key(doc, "map", "conjugating data"), "\"map\"");
  for (const auto& [key, unused] : map.items()) {
    (void)unused;
    if (!source.graph().index_of(key))
      throw InputError("conjugating data names an unknown vertex \"" + key +
                       "\"");
  }
  ConjugatingData d;
  d.source = source;
  d.target = target;
  d.map.reserve(source.graph().size());
  for (VertexId u = 0; u < source.graph().size(); ++u) {
    const std::string& name = source.graph().name(u);
    auto it = map.find(name);
    if (it == map.end())
      throw InputError("conjugating data is missing vertex \"" + name + "\"");
    NormalForm g = target.reduce(
        word_from_json(target, require_key(*it, "g", "conjugating entry")));
    const VertexId w = vertex_by_name(
        target.graph(), require_key(*it, "w", "conjugating entry"), "\"w\"");
    GroupIso psi = iso_from_json(source.group(u), target.group(w),
                                 require_key(*it, "psi", "conjugating entry"));
    d.map.push_back(VertexConjugation{std::move(g), w, std::move(psi)});
  }
  return d;
}

Json conjugating_to_json(const ConjugatingData& d) {
  Json map = Json::object();
  for (VertexId u = 0; u < d.source.graph().size(); ++u) {
    const VertexConjugation& vc = d.map[u];
    map[d.source.graph().name(u)] =
        Json{{"g", word_to_json(d.target, vc.g)},
             {"w", d.target.graph().name(vc.w)},
             {"psi", iso_to_json(d.source.group(u), d.target.group(vc.w),
                                 vc.psi)}};
  }
  return Json{{"map", std::move(map)}};
}

std::vector<std::vector<Word>> images_from_json(const GraphProduct& source,
                                                const GraphProduct& target,
                                                const Json& doc) {
  as_object(doc, "images document");
  for (const auto& [key, unused] : doc.items()) {
    (void)unused;
    if (!source.graph().index_of(key))
      throw InputError("images document names an unknown vertex \"" + key +
                       "\"");
  }
  std::vector<std::vector<Word>> images(source.graph().size());
  for (VertexId u = 0; u < source.graph().size(); ++u) {
    const std::string& name = source.graph().name(u);
    auto it = doc.find(name);
    if (it == doc.end())
      throw InputError("images document is missing vertex \"" + name + "\"");
    const Json& arr = as_array(*it, "images of vertex \"" + name + "\"");
    const auto gens = source.group(u).generators();
    if (arr.size() != gens.size())
      throw InputError("vertex \"" + name + "\" needs " +
                       std::to_string(gens.size()) + " generator images, got " +
                       std::to_string(arr.size()));
    for (const Json& w : arr) images[u].push_back(word_from_json(target, w));
  }
  return images;
}

Json images_to_json(const GraphProduct& source, const GraphProduct& target,
                    const std::vector<std::vector<Word>>& images) {
  Json doc = Json::object();
  for (VertexId u = 0; u < source.graph().size(); ++u) {
    Json arr = Json::array();
    for (const Word& w : images[u]) arr.push_back(word_to_json(target, w));
    doc[source.graph().name(u)] = std::move(arr);
  }
  return doc;
}

Json decomposition_to_json(const GraphProduct& source, const GraphProduct& target,
                           const DecompositionResult& r) {
  Json pcs = Json::array();
  for (const PartialConjugation& pc : r.partial_conjugations) {
    Json comp = Json::array();
    for (VertexId v : pc.component) comp.push_back(source.graph().name(v));
    pcs.push_back(Json{{"u", source.graph().name(pc.u)},
                       {"component", std::move(comp)},
                       {"h", source.group(pc.u).value_name(pc.h)}});
  }
  Json isometry = Json::object();
  Json isos = Json::object();
  for (VertexId u = 0; u < source.graph().size(); ++u) {
    isometry[source.graph().name(u)] = target.graph().name(r.isometry[u]);
    isos[source.graph().name(u)] = iso_to_json(
        source.group(u), target.group(r.isometry[u]), r.vertex_isos[u]);
  }
  return Json{{"partial_conjugations", std::move(pcs)},
              {"isometry", std::move(isometry)},
              {"vertex_isos", std::move(isos)},
              {"complexities", r.complexity_log}};
}

Json ball_to_json(const GraphProduct& p, const QmBall& ball) {
  Json vs = Json::array();
  for (const NormalForm& v : ball.vertices) vs.push_back(word_to_json(p, v));
  Json es = Json::array();
  for (const QmEdge& e : ball.edges)
    es.push_back(Json{{"from", e.from},
                      {"vertex", p.graph().name(e.gen.vertex)},
                      {"element", p.group(e.gen.vertex).value_name(e.gen.value)}});
  Json hs = Json::array();
  for (const Hyperplane& h : ball_hyperplanes(ball))
    hs.push_back(hyperplane_to_json(p, h));
  return Json{{"radius", ball.radius},
              {"vertices", std::move(vs)},
              {"edges", std::move(es)},
              {"hyperplanes", std::move(hs)}};
}

Json transversality_to_json(const GraphProduct& p, const TransversalityGraph& tg) {
  Json nodes = Json::array();
  for (const Hyperplane& h : tg.nodes) nodes.push_back(hyperplane_to_json(p, h));
  Json edges = Json::array();
  const int n = static_cast<int>(tg.nodes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (tg.adj[i][j]) edges.push_back(Json::array({i, j}));
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Json davis_ball_to_json(const GraphProduct& p, const DavisBall& ball) {
  Json vs = Json::array();
  for (const DavisVertex& v : ball.vertices) {
    Json lambda = Json::array();
    for (VertexId u : v.lambda) lambda.push_back(p.graph().name(u));
    vs.push_back(Json{{"rep", word_to_json(p, v.rep)},
                      {"lambda", std::move(lambda)}});
  }
  Json es = Json::array();
  for (const DavisEdge& e : ball.edges)
    es.push_back(Json{{"lower", e.lower},
                      {"upper", e.upper},
                      {"label", p.graph().name(e.label)}});
  Json squares = Json::array();
  for (const DavisCube& c : ball.cubes)
    if (c.axes.size() == 2) squares.push_back(cube_corners(p, ball, c));
  return Json{{"radius", ball.radius},
              {"vertices", std::move(vs)},
              {"edges", std::move(es)},
              {"squares", std::move(squares)}};
}

Json classification_to_json(const SimplicialGraph& g, const GraphClassification& c) {
  Json stars = Json::array();
  for (VertexId v : c.separating_stars) stars.push_back(g.name(v));
  Json doc{{"connected", c.connected},
           {"min_valence", c.min_valence},
           {"separating_stars", std::move(stars)},
           {"molecular", c.molecular},
           {"atomic", c.atomic}};
  if (c.girth)
    doc["girth"] = *c.girth;
  else
    doc["girth"] = "infinity";
  return doc;
}

namespace {

std::string dot_word_label(const GraphProduct& p, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Syllable& s : w) {
    if (!out.empty()) out += " ";
    out += p.graph().name(s.vertex) + ":" + p.group(s.vertex).value_name(s.value);
  }
  return out;
}

}  // namespace

std::string ball_to_dot(const GraphProduct& p, const QmBall& ball) {
  std::ostringstream out;
  out << "graph ball {\n";
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i)
    out << "  v" << i << " [label=\""
        << dot_word_label(p, ball.vertices[i].syllables()) << "\"];\n";
  for (const QmEdge& e : ball.edges)
    out << "  v" << e.from << " -- v" << e.to << " [label=\""
        << p.graph().name(e.gen.vertex) << ":"
        << p.group(e.gen.vertex).value_name(e.gen.value) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string davis_ball_to_dot(const GraphProduct& p, const DavisBall& ball) {
  std::ostringstream out;
  out << "graph coset_ball {\n";
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i) {
    const DavisVertex& v = ball.vertices[i];
    std::string lambda;
    for (VertexId u : v.lambda) {
      if (!lambda.empty()) lambda += ",";
      lambda += p.graph().name(u);
    }
    out << "  v" << i << " [label=\""
        << dot_word_label(p, v.rep.syllables()) << "<" << lambda << ">\"];\n";
  }
  for (const DavisEdge& e : ball.edges)
    out << "  v" << e.lower << " -- v" << e.upper << " [label=\""
        << p.graph().name(e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace gp
