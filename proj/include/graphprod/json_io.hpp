#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "graphprod/automorphisms.hpp"
#include "graphprod/davis.hpp"
#include "graphprod/geometry.hpp"
#include "graphprod/graph.hpp"
#include "graphprod/vertex_groups.hpp"
#include "graphprod/word.hpp"

namespace gp {

using Json = nlohmann::json;

// Parse a JSON document from text / from a file. InputError on bad syntax or
// an unreadable path.
Json parse_document(const std::string& text);
Json load_document(const std::string& path);

// {"vertices": ["a", ...], "edges": [["a", "b"], ...]}. The vertex listing
// fixes the id order used everywhere else.
SimplicialGraph graph_from_json(const Json& doc);
Json graph_to_json(const SimplicialGraph& g);

// {"type": "cyclic", "order": n} | {"type": "int"} |
// {"type": "table", "elements": ["e", ...], "table": [[...], ...]}
VertexGroup vertex_group_from_json(const Json& doc);
Json vertex_group_to_json(const VertexGroup& g);

// {"graph": <graph>, "groups": {vertex: <group>, ...}, "order": [vertex, ...]?}
// Every graph vertex needs a group and vice versa; the optional "order" array
// is a permutation of the vertex names overriding the graph's id order.
GraphProduct product_from_json(const Json& doc);
Json product_to_json(const GraphProduct& p);

// [[vertex, element], ...] with elements by name (finite tables) or by
// exponent string (cyclic kinds). The empty array is the identity.
Word word_from_json(const GraphProduct& p, const Json& doc);
Json word_to_json(const GraphProduct& p, const Word& w);
Json word_to_json(const GraphProduct& p, const NormalForm& w);

// {"label": vertex, "base": <word>}; the base is canonicalized on parse.
Hyperplane hyperplane_from_json(const GraphProduct& p, const Json& doc);
Json hyperplane_to_json(const GraphProduct& p, const Hyperplane& h);

// {"table": [target element names indexed by source value]} for finite
// kinds, {"power": +1 | -1} for infinite cyclic.
GroupIso iso_from_json(const VertexGroup& source, const VertexGroup& target,
                       const Json& doc);
Json iso_to_json(const VertexGroup& source, const VertexGroup& target,
                 const GroupIso& iso);

// {"sigma": {vertex: vertex, ...}, "phis": {vertex: <iso>, ...}}, both
// covering every vertex.
LocalAutomorphism local_from_json(const GraphProduct& p, const Json& doc);
Json local_to_json(const GraphProduct& p, const LocalAutomorphism& la);

// Composition list, applied left to right:
// [{"kind": "inner", "g": <word>} |
//  {"kind": "partial", "u": vertex, "component": [vertex, ...], "h": element} |
//  {"kind": "local", "sigma": ..., "phis": ...}, ...]
Automorphism automorphism_from_json(const GraphProduct& p, const Json& doc);
Json automorphism_to_json(const GraphProduct& p, const Automorphism& phi);

// {"map": {source vertex: {"g": <word over target>, "w": target vertex,
//                          "psi": <iso>}, ...}}
ConjugatingData conjugating_from_json(const GraphProduct& source,
                                      const GraphProduct& target,
                                      const Json& doc);
Json conjugating_to_json(const ConjugatingData& d);

// {source vertex: [<word over target> per canonical generator], ...}
std::vector<std::vector<Word>> images_from_json(const GraphProduct& source,
                                                const GraphProduct& target,
                                                const Json& doc);
Json images_to_json(const GraphProduct& source, const GraphProduct& target,
                    const std::vector<std::vector<Word>>& images);

Json decomposition_to_json(const GraphProduct& source, const GraphProduct& target,
                           const DecompositionResult& r);

Json ball_to_json(const GraphProduct& p, const QmBall& ball);
Json transversality_to_json(const GraphProduct& p, const TransversalityGraph& tg);
Json davis_ball_to_json(const GraphProduct& p, const DavisBall& ball);
Json classification_to_json(const SimplicialGraph& g, const GraphClassification& c);

std::string ball_to_dot(const GraphProduct& p, const QmBall& ball);
std::string davis_ball_to_dot(const GraphProduct& p, const DavisBall& ball);

}  // namespace gp
