#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graphprod/automorphisms.hpp"
#include "graphprod/davis.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/geometry.hpp"
#include "graphprod/json_io.hpp"
#include "graphprod/verify.hpp"

namespace {

using gp::GraphProduct;
using gp::Json;
using gp::Word;

// Document arguments are file paths when such a file exists and inline JSON
// otherwise, so small words can be passed directly on the command line.
Json load_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::exists(arg, ec)) return gp::load_document(arg);
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '['))
    throw gp::InputError("cannot read file \"" + arg + "\"");
  return gp::parse_document(arg);
}

GraphProduct load_product(const std::string& arg) {
  return gp::product_from_json(load_arg(arg));
}

gp::SimplicialGraph load_graph(const std::string& arg) {
  const Json doc = load_arg(arg);
  if (doc.is_object() && doc.contains("graph"))
    return gp::graph_from_json(doc["graph"]);
  return gp::graph_from_json(doc);
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

gp::Syllable load_syllable(const GraphProduct& p, const std::string& arg) {
  Json doc = load_arg(arg);
  if (doc.is_array() && doc.size() == 2 && !doc[0].is_array())
    doc = Json::array({doc});
  const Word w = gp::word_from_json(p, doc);
  if (w.size() != 1)
    throw gp::InputError("the generator argument must be one [vertex, element] pair");
  return w[0];
}

Json report_to_json(const gp::VerifyReport& r, const std::string& suite,
                    int radius, unsigned seed) {
  Json checks = Json::array();
  for (const gp::VerifyCheck& c : r.checks) {
    Json entry{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return Json{{"suite", suite},   {"radius", radius},   {"seed", seed},
              {"checks", std::move(checks)}, {"passed", r.passed},
              {"failed", r.failed}};
}

Json sil_to_json(const gp::SimplicialGraph& g,
                 const std::optional<gp::SilWitness>& w) {
  Json doc{{"has_sil", w.has_value()}};
  if (w) {
    Json comp = Json::array();
    for (gp::VertexId v : w->component) comp.push_back(g.name(v));
    doc["witness"] = Json{{"u", g.name(w->u)},
                          {"v", g.name(w->v)},
                          {"component", std::move(comp)}};
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph products of groups: normal forms, hyperplane geometry, "
               "coset complexes, and conjugating-automorphism decomposition"};
  app.require_subcommand(1);
  int rc = 0;

  struct Args {
    std::string spec, a, b, c;
    int radius = 3;
    unsigned seed = 0;
    std::string suite = "all";
    bool davis = false;
    bool dot = false;
  };
  auto args = std::make_shared<Args>();

  auto* reduce = app.add_subcommand("reduce", "canonical normal form of a word");
  reduce->add_option("spec", args->spec, "product description")->required();
  reduce->add_option("word", args->a, "word document")->required();
  reduce->callback([args] {
    const GraphProduct p = load_product(args->spec);
    emit(gp::word_to_json(p, p.reduce(gp::word_from_json(p, load_arg(args->a)))));
  });

  auto* mul = app.add_subcommand("mul", "product of two words");
  mul->add_option("spec", args->spec)->required();
  mul->add_option("a", args->a)->required();
  mul->add_option("b", args->b)->required();
  mul->callback([args] {
    const GraphProduct p = load_product(args->spec);
    emit(gp::word_to_json(p, p.mul(gp::word_from_json(p, load_arg(args->a)),
                                   gp::word_from_json(p, load_arg(args->b)))));
  });

  auto* inv = app.add_subcommand("inv", "inverse of a word");
  inv->add_option("spec", args->spec)->required();
  inv->add_option("word", args->a)->required();
  inv->callback([args] {
    const GraphProduct p = load_product(args->spec);
    emit(gp::word_to_json(p, p.inv(gp::word_from_json(p, load_arg(args->a)))));
  });

  auto* dist = app.add_subcommand("dist", "word-metric distance of two elements");
  dist->add_option("spec", args->spec)->required();
  dist->add_option("a", args->a)->required();
  dist->add_option("b", args->b)->required();
  dist->callback([args] {
    const GraphProduct p = load_product(args->spec);
    emit(Json{{"distance",
               gp::distance(p, gp::word_from_json(p, load_arg(args->a)),
                            gp::word_from_json(p, load_arg(args->b)))}});
  });

  auto* hyp = app.add_subcommand("hyperplane", "key of the hyperplane dual to an edge");
  hyp->add_option("spec", args->spec)->required();
  hyp->add_option("word", args->a, "edge tail")->required();
  hyp->add_option("generator", args->b, "[vertex, element] pair")->required();
  hyp->callback([args] {
    const GraphProduct p = load_product(args->spec);
    const Word x = gp::word_from_json(p, load_arg(args->a));
    emit(gp::hyperplane_to_json(
        p, gp::hyperplane_of_edge(p, x, load_syllable(p, args->b))));
  });

  auto* sep = app.add_subcommand("separates", "whether a hyperplane separates two elements");
  sep->add_option("spec", args->spec)->required();
  sep->add_option("hyperplane", args->a)->required();
  sep->add_option("x", args->b)->required();
  sep->add_option("y", args->c)->required();
  sep->callback([args] {
    const GraphProduct p = load_product(args->spec);
    emit(Json{{"separates",
               gp::separates(p, gp::hyperplane_from_json(p, load_arg(args->a)),
                             gp::word_from_json(p, load_arg(args->b)),
                             gp::word_from_json(p, load_arg(args->c)))}});
  });

  auto* tra = app.add_subcommand("transverse", "whether two hyperplanes cross");
  tra->add_option("spec", args->spec)->required();
  tra->add_option("a", args->a)->required();
  tra->add_option("b", args->b)->required();
  tra->callback([args] {
    const GraphProduct p = load_product(args->spec);
    emit(Json{{"transverse",
               gp::transverse(p, gp::hyperplane_from_json(p, load_arg(args->a)),
                              gp::hyperplane_from_json(p, load_arg(args->b)))}});
  });

  auto* ball = app.add_subcommand("ball", "ball dump around the identity");
  ball->add_option("spec", args->spec)->required();
  ball->add_option("--radius", args->radius, "ball radius")->capture_default_str();
  ball->add_flag("--davis", args->davis, "coset-complex ball instead of the element ball");
  ball->add_flag("--dot", args->dot, "emit DOT instead of JSON");
  ball->callback([args] {
    const GraphProduct p = load_product(args->spec);
    if (args->davis) {
      const gp::DavisBall b = gp::build_davis_ball(p, args->radius);
      if (args->dot)
        std::cout << gp::davis_ball_to_dot(p, b);
      else
        emit(gp::davis_ball_to_json(p, b));
    } else {
      const gp::QmBall b = gp::build_ball(p, args->radius);
      if (args->dot)
        std::cout << gp::ball_to_dot(p, b);
      else
        emit(gp::ball_to_json(p, b));
    }
  });

  auto* tg = app.add_subcommand("transversality-graph",
                                "crossing graph of the ball's hyperplanes");
  tg->add_option("spec", args->spec)->required();
  tg->add_option("--radius", args->radius)->capture_default_str();
  tg->callback([args] {
    const GraphProduct p = load_product(args->spec);
    emit(gp::transversality_to_json(
        p, gp::transversality_graph(p, gp::build_ball(p, args->radius))));
  });

  auto* cls = app.add_subcommand("classify", "connectivity, girth, and star separation");
  cls->add_option("graph", args->spec, "graph or product document")->required();
  cls->callback([args] {
    const gp::SimplicialGraph g = load_graph(args->spec);
    emit(gp::classification_to_json(g, g.classify()));
  });

  auto* sil = app.add_subcommand("sil", "separating-intersection-of-links witness");
  sil->add_option("graph", args->spec, "graph or product document")->required();
  sil->callback([args] {
    const gp::SimplicialGraph g = load_graph(args->spec);
    emit(sil_to_json(g, g.sil_witness()));
  });

  auto* outf = app.add_subcommand("out-finite",
                                  "whether the outer automorphism group is finite");
  outf->add_option("spec", args->spec)->required();
  outf->callback([args] {
    const GraphProduct p = load_product(args->spec);
    const bool finite = gp::out_finite(p);
    Json doc{{"finite", finite}};
    if (!finite) {
      const auto w = p.graph().sil_witness();
      if (w) doc["witness"] = sil_to_json(p.graph(), w)["witness"];
    }
    emit(doc);
  });

  auto* dec = app.add_subcommand("decompose",
                                 "factor conjugating data into partial conjugations "
                                 "and a relabelling");
  dec->add_option("source", args->spec)->required();
  dec->add_option("target", args->a)->required();
  dec->add_option("data", args->b, "conjugating data document")->required();
  dec->callback([args, &rc] {
    const GraphProduct src = load_product(args->spec);
    const GraphProduct tgt = load_product(args->a);
    const gp::ConjugatingData d =
        gp::conjugating_from_json(src, tgt, load_arg(args->b));
    try {
      emit(gp::decomposition_to_json(src, tgt, gp::decompose(d)));
    } catch (const gp::PreconditionError& e) {
      emit(Json{{"status", "not_conjugating"}, {"why", e.what()}});
      std::cerr << "decompose: " << e.what() << "\n";
      rc = 2;
    } catch (const gp::NotIsomorphismError& e) {
      emit(Json{{"status", "not_isomorphism"}, {"why", e.what()}});
      std::cerr << "decompose: " << e.what() << "\n";
      rc = 2;
    }
  });

  auto* fi = app.add_subcommand("from-images",
                                "recover conjugating data from generator images");
  fi->add_option("spec", args->spec)->required();
  fi->add_option("images", args->a, "per-vertex generator image words")->required();
  fi->callback([args, &rc] {
    const GraphProduct p = load_product(args->spec);
    const auto images = gp::images_from_json(p, p, load_arg(args->a));
    std::string why;
    const auto data = gp::conjugating_data_from_images(p, p, images, &why);
    if (!data) {
      emit(Json{{"status", "not_conjugating"}, {"why", why}});
      std::cerr << "from-images: " << why << "\n";
      rc = 2;
      return;
    }
    Json doc = gp::conjugating_to_json(*data);
    doc["status"] = "conjugating";
    emit(doc);
  });

  auto* rig = app.add_subcommand("rigid",
                                 "element with a unique reduced spelling over an "
                                 "atomic graph");
  rig->add_option("spec", args->spec)->required();
  rig->callback([args] {
    const GraphProduct p = load_product(args->spec);
    emit(gp::word_to_json(p, gp::rigid_element(p)));
  });

  auto* fl = app.add_subcommand("fixing-locals",
                                "relabelling automorphisms fixing a word");
  fl->add_option("spec", args->spec)->required();
  fl->add_option("word", args->a)->required();
  fl->callback([args] {
    const GraphProduct p = load_product(args->spec);
    const auto locals =
        gp::fixing_locals(p, gp::word_from_json(p, load_arg(args->a)));
    Json arr = Json::array();
    for (const gp::LocalAutomorphism& la : locals)
      arr.push_back(gp::local_to_json(p, la));
    emit(Json{{"count", locals.size()}, {"locals", std::move(arr)}});
  });

  auto* ver = app.add_subcommand("verify", "replay the library's invariants");
  ver->add_option("spec", args->spec)->required();
  ver->add_option("--radius", args->radius)->capture_default_str();
  ver->add_option("--suite", args->suite, "all, qm, davis, or auto")
      ->capture_default_str();
  ver->add_option("--seed", args->seed)->capture_default_str();
  ver->callback([args, &rc] {
    const GraphProduct p = load_product(args->spec);
    gp::VerifyReport r;
    if (args->suite == "all")
      r = gp::verify_all(p, args->radius, args->seed);
    else if (args->suite == "qm")
      r = gp::verify_qm(p, args->radius);
    else if (args->suite == "davis")
      r = gp::verify_davis(p, args->radius);
    else if (args->suite == "auto")
      r = gp::verify_auto(p, args->radius, args->seed);
    else
      throw gp::InputError("unknown suite \"" + args->suite +
                           "\" (expected all, qm, davis, or auto)");
    emit(report_to_json(r, args->suite, args->radius, args->seed));
    if (r.failed > 0) rc = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const gp::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const gp::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 1;
  } catch (const gp::NotIsomorphismError& e) {
    std::cerr << "not an isomorphism: " << e.what() << "\n";
    return 2;
  } catch (const gp::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const gp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
