#include "graphprod/automorphisms.hpp"

#include <string>
#include <utility>

#include "graphprod/errors.hpp"

namespace gp {

namespace {

std::string vertex_label(const GraphProduct& p, VertexId v) {
  return p.graph().name(v);
}

// Image of one syllable under conjugating data, reduced in the target.
NormalForm syllable_image(const ConjugatingData& d, const Syllable& s) {
  const VertexConjugation& vc = d.map[s.vertex];
  const GraphProduct& t = d.target;
  Word core{Syllable{vc.w, vc.psi.apply(s.value)}};
  return t.mul(t.mul(vc.g, core), t.inv(vc.g));
}

// Re-validate a GroupIso against the groups it is supposed to connect;
// GroupIso carries no group references, so a stale table slips through
// equality checks otherwise.
void check_iso_shape(const GraphProduct& p, const GroupIso& phi, VertexId from,
                     VertexId to, const std::string& role) {
  const VertexGroup& src = p.group(from);
  const VertexGroup& dst = p.group(to);
  if (!src.is_finite() || !dst.is_finite()) {
    if (src.is_finite() != dst.is_finite() || phi.finite_kind())
      throw InputError(role + ": incompatible vertex groups at " +
                       vertex_label(p, from) + " -> " + vertex_label(p, to));
    return;  // the +1/-1 power was validated at construction
  }
  if (!phi.finite_kind())
    throw InputError(role + ": power map given for finite groups at " +
                     vertex_label(p, from));
  // Rebuilding runs the full bijectivity/multiplicativity validation.
  GroupIso::finite(src, dst, phi.table());
}

}  // namespace

Automorphism inner_auto(Word g) {
  AutoGen gen;
  gen.kind = AutoGen::Kind::Inner;
  gen.inner_g = std::move(g);
  return Automorphism{{std::move(gen)}};
}

Automorphism partial_auto(PartialConjugation pc) {
  AutoGen gen;
  gen.kind = AutoGen::Kind::Partial;
  gen.partial = std::move(pc);
  return Automorphism{{std::move(gen)}};
}

Automorphism local_auto(LocalAutomorphism la) {
  AutoGen gen;
  gen.kind = AutoGen::Kind::Local;
  gen.local = std::move(la);
  return Automorphism{{std::move(gen)}};
}

LocalAutomorphism identity_local(const GraphProduct& p) {
  LocalAutomorphism la;
  for (VertexId v = 0; v < p.graph().size(); ++v) {
    la.sigma.push_back(v);
    la.phis.push_back(GroupIso::identity(p.group(v)));
  }
  return la;
}

Automorphism compose(Automorphism a, const Automorphism& b) {
  a.gens.insert(a.gens.end(), b.gens.begin(), b.gens.end());
  return a;
}

void validate_partial(const GraphProduct& p, const PartialConjugation& pc) {
  const int n = p.graph().size();
  if (pc.u < 0 || pc.u >= n)
    throw InputError("partial conjugation names an unknown vertex");
  if (!p.group(pc.u).is_valid(pc.h) || pc.h == 0)
    throw InputError("partial conjugation needs a non-trivial element of the vertex group at " +
                     vertex_label(p, pc.u));
  for (const VertexSet& comp : p.graph().components_minus_star(pc.u))
    if (comp == pc.component) return;
  throw InputError("partial conjugation component is not a component of the graph minus star(" +
                   vertex_label(p, pc.u) + ")");
}

void validate_local(const GraphProduct& p, const LocalAutomorphism& la) {
  const int n = p.graph().size();
  if (static_cast<int>(la.sigma.size()) != n ||
      static_cast<int>(la.phis.size()) != n)
    throw InputError("local automorphism must list one image and one group map per vertex");
  std::vector<bool> hit(n, false);
  for (VertexId img : la.sigma) {
    if (img < 0 || img >= n || hit[img])
      throw InputError("local automorphism vertex map is not a bijection");
    hit[img] = true;
  }
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (p.graph().adjacent(i, j) != p.graph().adjacent(la.sigma[i], la.sigma[j]))
        throw InputError("local automorphism vertex map does not preserve adjacency (" +
                         vertex_label(p, i) + ", " + vertex_label(p, j) + ")");
  for (VertexId v = 0; v < n; ++v)
    check_iso_shape(p, la.phis[v], v, la.sigma[v], "local automorphism");
}

NormalForm apply(const GraphProduct& p, const AutoGen& gen, const Word& w) {
  switch (gen.kind) {
    case AutoGen::Kind::Inner:
      return p.mul(p.mul(gen.inner_g, w), p.inv(gen.inner_g));
    case AutoGen::Kind::Partial: {
      const Syllable fwd{gen.partial.u, gen.partial.h};
      const Syllable bwd{gen.partial.u, p.group(gen.partial.u).inv(gen.partial.h)};
      Word out;
      for (const Syllable& s : w) {
        p.check_syllable(s);
        if (vertex_set_contains(gen.partial.component, s.vertex)) {
          out.push_back(fwd);
          out.push_back(s);
          out.push_back(bwd);
        } else {
          out.push_back(s);
        }
      }
      return p.reduce(out);
    }
    case AutoGen::Kind::Local: {
      Word out;
      for (const Syllable& s : w) {
        p.check_syllable(s);
        GroupValue img = gen.local.phis[s.vertex].apply(s.value);
        out.push_back(Syllable{gen.local.sigma[s.vertex], img});
      }
      return p.reduce(out);
    }
  }
  throw InputError("unknown automorphism generator kind");
}

NormalForm apply(const GraphProduct& p, const Automorphism& phi, const Word& w) {
  NormalForm cur = p.reduce(w);
  for (const AutoGen& gen : phi.gens) cur = apply(p, gen, cur.syllables());
  return cur;
}

std::vector<LocalAutomorphism> enumerate_locals(const GraphProduct& p) {
  const int n = p.graph().size();
  std::vector<LocalAutomorphism> out;
  for (const std::vector<VertexId>& sigma : graph_isometries(p.graph())) {
    std::vector<std::vector<GroupIso>> choices(n);
    bool feasible = true;
    for (VertexId v = 0; v < n && feasible; ++v) {
      choices[v] = enumerate_isos(p.group(v), p.group(sigma[v]));
      feasible = !choices[v].empty();
    }
    if (!feasible) continue;
    // Odometer over per-vertex choices, last vertex fastest.
    std::vector<int> pick(n, 0);
    while (true) {
      LocalAutomorphism la;
      la.sigma = sigma;
      for (VertexId v = 0; v < n; ++v) la.phis.push_back(choices[v][pick[v]]);
      out.push_back(std::move(la));
      int v = n - 1;
      while (v >= 0 && pick[v] + 1 == static_cast<int>(choices[v].size()))
        pick[v--] = 0;
      if (v < 0) break;
      ++pick[v];
    }
  }
  return out;
}

ConjugatingData identity_conjugating(const GraphProduct& p) {
  ConjugatingData d{p, p, {}};
  for (VertexId v = 0; v < p.graph().size(); ++v)
    d.map.push_back(VertexConjugation{NormalForm{}, v, GroupIso::identity(p.group(v))});
  return d;
}

ConjugatingData inner_conjugating(const GraphProduct& p, const Word& g) {
  ConjugatingData d = identity_conjugating(p);
  NormalForm conj = p.reduce(g);
  for (VertexConjugation& vc : d.map) vc.g = conj;
  return d;
}

NormalForm apply(const ConjugatingData& d, const Word& w) {
  if (static_cast<int>(d.map.size()) != d.source.graph().size())
    throw InputError("conjugating data must cover every source vertex");
  NormalForm acc;
  for (const Syllable& s : w) {
    d.source.check_syllable(s);
    acc = d.target.mul(acc, syllable_image(d, s));
  }
  return acc;
}

std::optional<CommutationWitness> homomorphism_failure(const ConjugatingData& d) {
  const int n = d.source.graph().size();
  if (static_cast<int>(d.map.size()) != n)
    throw InputError("conjugating data must cover every source vertex");
  for (VertexId u = 0; u < n; ++u) {
    const VertexConjugation& vc = d.map[u];
    if (vc.w < 0 || vc.w >= d.target.graph().size())
      throw InputError("conjugating data names an unknown target vertex for " +
                       vertex_label(d.source, u));
    const VertexGroup& src = d.source.group(u);
    const VertexGroup& dst = d.target.group(vc.w);
    if (src.is_finite() != dst.is_finite() || vc.psi.finite_kind() != src.is_finite())
      throw InputError("conjugating data pairs incompatible vertex groups at " +
                       vertex_label(d.source, u));
    if (src.is_finite()) GroupIso::finite(src, dst, vc.psi.table());
  }
  // Each vertex group maps by a conjugated isomorphism, so only the defining
  // edge relations can break. All element pairs for finite groups; generator
  // pairs suffice for infinite cyclic ones since commutation passes to powers.
  const auto relation_elements = [](const VertexGroup& g) {
    return g.is_finite() ? g.nontrivial_elements() : g.generators();
  };
  for (const auto& [u, v] : d.source.graph().edges()) {
    for (GroupValue a : relation_elements(d.source.group(u))) {
      const NormalForm ia = syllable_image(d, Syllable{u, a});
      for (GroupValue b : relation_elements(d.source.group(v))) {
        const NormalForm ib = syllable_image(d, Syllable{v, b});
        if (d.target.mul(ia, ib) != d.target.mul(ib, ia))
          return CommutationWitness{u, v, a, b};
      }
    }
  }
  return std::nullopt;
}

bool is_homomorphism(const ConjugatingData& d) {
  return !homomorphism_failure(d).has_value();
}

Hyperplane image_hyperplane(const ConjugatingData& d, VertexId u) {
  if (u < 0 || u >= static_cast<int>(d.map.size()))
    throw InputError("vertex id out of range");
  return make_hyperplane(d.target, d.map[u].w, d.map[u].g.syllables());
}

int complexity(const ConjugatingData& d) {
  int total = 0;
  for (VertexId u = 0; u < static_cast<int>(d.map.size()); ++u)
    total += image_hyperplane(d, u).base.length();
  return total;
}

DecompositionResult decompose(ConjugatingData d) {
  if (auto bad = homomorphism_failure(d)) {
    throw PreconditionError(
        "conjugating data is not a homomorphism: the images of " +
        vertex_label(d.source, bad->u) + " and " + vertex_label(d.source, bad->v) +
        " do not commute");
  }
  const GraphProduct& src = d.source;
  const GraphProduct& tgt = d.target;
  const int n = src.graph().size();

  DecompositionResult result;
  int cur = complexity(d);
  result.complexity_log.push_back(cur);

  while (cur > 0) {
    std::vector<Hyperplane> image(n);
    for (VertexId u = 0; u < n; ++u) image[u] = image_hyperplane(d, u);

    VertexId a = -1, b = -1;
    for (VertexId i = 0; i < n && a < 0; ++i)
      for (VertexId j = 0; j < n; ++j)
        if (i != j && separates_identity_from(tgt, image[i], image[j])) {
          a = i;
          b = j;
          break;
        }
    if (a < 0)
      throw NotIsomorphismError(
          "image hyperplanes leave no separating pair at positive complexity; "
          "the map is not onto a graph product of the vertex groups");
    if (b == a || src.graph().adjacent(a, b))
      throw NotIsomorphismError("adjacent source vertices have separated images");

    // x moves the gate of image[b] in the clique of image[a] back to the
    // gate of the identity, so conjugating the image of b's group by x
    // strictly shortens its carrier.
    const NormalForm c1 = clique_gate(tgt, image[a], Word{});
    const NormalForm c2 = clique_gate(tgt, image[a], image[b].base.syllables());
    const NormalForm x = tgt.mul(c1, tgt.inv(c2));

    // x lies in the conjugate g_a G_{w_a} g_a^-1, so it pulls back to a
    // single source syllable at a.
    const VertexConjugation& vca = d.map[a];
    const NormalForm pulled = tgt.mul(tgt.mul(tgt.inv(vca.g), x), vca.g);
    if (pulled.length() != 1 || pulled.syllables()[0].vertex != vca.w)
      throw NotIsomorphismError("separating correction does not pull back to " +
                                vertex_label(src, a));
    const GroupValue y = vca.psi.inverse().apply(pulled.syllables()[0].value);

    VertexSet component;
    for (const VertexSet& comp : src.graph().components_minus_star(a))
      if (vertex_set_contains(comp, b)) component = comp;
    result.partial_conjugations.push_back(PartialConjugation{a, component, y});

    // Precomposing with the partial conjugation conjugates the images over
    // the component by x.
    for (VertexId u : component) d.map[u].g = tgt.mul(x, d.map[u].g);

    const int next = complexity(d);
    if (next >= cur)
      throw NotIsomorphismError("carrier complexity did not decrease; "
                                "the map does not conjugate vertex groups onto vertex groups");
    cur = next;
    result.complexity_log.push_back(cur);
  }

  // Complexity zero: every conjugator lies in the star of its target vertex,
  // so the residual map reads off vertex by vertex.
  if (tgt.graph().size() != n)
    throw NotIsomorphismError("source and target have different vertex counts");
  std::vector<bool> hit(n, false);
  for (VertexId u = 0; u < n; ++u) {
    const VertexId w = d.map[u].w;
    if (hit[w])
      throw NotIsomorphismError("two vertex groups land in the conjugate of " +
                                vertex_label(tgt, w));
    hit[w] = true;
    result.isometry.push_back(w);
  }
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (src.graph().adjacent(i, j) !=
          tgt.graph().adjacent(result.isometry[i], result.isometry[j]))
        throw NotIsomorphismError("the residual vertex map is not a graph isometry");

  for (VertexId u = 0; u < n; ++u) {
    const VertexConjugation& vc = d.map[u];
    // The residual conjugator splits as h * ell with h the w-syllable and
    // ell central in the target vertex group, so only h twists the group map.
    GroupValue h = 0;
    for (const Syllable& s : vc.g.syllables())
      if (s.vertex == vc.w) h = s.value;
    const VertexGroup& dst = tgt.group(vc.w);
    if (!vc.psi.finite_kind()) {
      result.vertex_isos.push_back(vc.psi);  // conjugation is trivial in Z
      continue;
    }
    std::vector<GroupValue> table(dst.order(), 0);
    for (GroupValue k = 0; k < dst.order(); ++k)
      table[k] = dst.mul(dst.mul(h, vc.psi.apply(k)), dst.inv(h));
    result.vertex_isos.push_back(GroupIso::finite(src.group(u), dst, std::move(table)));
  }
  return result;
}

std::optional<ConjugatingData> conjugating_data_from_images(
    const GraphProduct& source, const GraphProduct& target,
    const std::vector<std::vector<Word>>& images, std::string* why) {
  const auto fail = [&](const std::string& reason) -> std::optional<ConjugatingData> {
    if (why) *why = reason;
    return std::nullopt;
  };
  const int n = source.graph().size();
  if (static_cast<int>(images.size()) != n)
    throw InputError("need one image list per source vertex");

  ConjugatingData d{source, target, {}};
  for (VertexId u = 0; u < n; ++u) {
    const VertexGroup& src = source.group(u);
    const std::vector<GroupValue> gens = src.generators();
    if (images[u].size() != gens.size())
      throw InputError("vertex " + vertex_label(source, u) + " needs " +
                       std::to_string(gens.size()) + " generator images");
    for (const Word& w : images[u])
      for (const Syllable& s : w) target.check_syllable(s);

    // The image of any non-trivial element must be conjugate into a vertex
    // group, so its cyclic core must be a single syllable.
    const GraphProduct::CyclicReduction cr = target.cyclic_reduce(images[u][0]);
    if (cr.core.length() != 1)
      return fail("the image of the first generator of vertex " +
                  vertex_label(source, u) + " has cyclic core of length " +
                  std::to_string(cr.core.length()) +
                  "; a conjugating map needs a single syllable");
    const VertexId w = cr.core.syllables()[0].vertex;
    const NormalForm g = cr.conjugator;
    const VertexGroup& dst = target.group(w);

    // Image of an arbitrary source element in terms of the generator images.
    const auto image_of = [&](GroupValue k) -> NormalForm {
      switch (src.kind()) {
        case GroupKind::FiniteTable:
          return target.reduce(images[u][k - 1]);  // generators are 1..order-1
        case GroupKind::Cyclic: {
          NormalForm acc;
          for (GroupValue i = 0; i < k; ++i) acc = target.mul(acc, images[u][0]);
          return acc;
        }
        case GroupKind::InfiniteCyclic: {
          NormalForm acc;
          const Word& base = images[u][0];
          for (GroupValue i = 0; i < (k < 0 ? -k : k); ++i)
            acc = target.mul(acc, base);
          return k < 0 ? target.inv(acc) : acc;
        }
      }
      throw InputError("unknown group kind");
    };
    const auto syllable_at_w = [&](const NormalForm& nf, GroupValue* out) {
      if (nf.length() != 1 || nf.syllables()[0].vertex != w) return false;
      *out = nf.syllables()[0].value;
      return true;
    };

    GroupIso psi = GroupIso::identity(dst);
    if (src.kind() == GroupKind::InfiniteCyclic) {
      if (dst.kind() != GroupKind::InfiniteCyclic)
        return fail("vertex " + vertex_label(source, u) +
                    " is infinite cyclic but its image lands in the finite group at " +
                    vertex_label(target, w));
      const GroupValue e = cr.core.syllables()[0].value;
      if (e != 1 && e != -1)
        return fail("the generator of vertex " + vertex_label(source, u) +
                    " maps to the " + std::to_string(e) +
                    "-th power of a generator; the map cannot be onto");
      psi = GroupIso::infinite_cyclic(static_cast<int>(e));
    } else {
      if (!dst.is_finite())
        return fail("vertex " + vertex_label(source, u) +
                    " is finite but its image lands in the infinite cyclic group at " +
                    vertex_label(target, w));
      if (src.order() != dst.order())
        return fail("vertex groups at " + vertex_label(source, u) + " and " +
                    vertex_label(target, w) + " have different orders");
      std::vector<GroupValue> table(src.order(), 0);
      for (GroupValue k = 1; k < src.order(); ++k) {
        const NormalForm img = image_of(k);
        const NormalForm core = target.mul(target.mul(target.inv(g), img), g);
        GroupValue val = 0;
        if (!syllable_at_w(core, &val))
          return fail("the image of element " + src.value_name(k) + " of vertex " +
                      vertex_label(source, u) +
                      " does not lie in the same conjugate of the vertex group at " +
                      vertex_label(target, w));
        table[k] = val;
      }
      try {
        psi = GroupIso::finite(src, dst, std::move(table));
      } catch (const InputError&) {
        return fail("the generator images of vertex " + vertex_label(source, u) +
                    " do not define an isomorphism onto the vertex group at " +
                    vertex_label(target, w));
      }
    }
    d.map.push_back(VertexConjugation{g, w, psi});
  }
  return d;
}

bool out_finite(const GraphProduct& p) {
  if (!p.groups().all_finite())
    throw PreconditionError(
        "outer automorphism finiteness is only decided over finite vertex groups");
  return !p.graph().has_sil();
}

bool inn_loc_intersection_trivial(const GraphProduct& p) {
  const int n = p.graph().size();
  for (VertexId v = 0; v < n; ++v)
    if (p.graph().is_star_of(v))
      throw PreconditionError("the defining graph is the star of " +
                              vertex_label(p, v) +
                              "; central conjugations act as local automorphisms");
  const QmBall ball = build_ball(p, 2);
  for (const LocalAutomorphism& la : enumerate_locals(p)) {
    bool trivial = true;
    for (VertexId v = 0; v < n && trivial; ++v)
      trivial = la.sigma[v] == v && la.phis[v].is_identity();
    if (trivial) continue;
    // A homomorphism is determined by generator syllables, so agreement
    // there is agreement everywhere.
    const Automorphism phi = local_auto(la);
    for (const NormalForm& g : ball.vertices) {
      bool match = true;
      for (VertexId v = 0; v < n && match; ++v)
        for (GroupValue a : p.group(v).generators()) {
          const Word syl{Syllable{v, a}};
          if (apply(p, phi, syl) != p.mul(p.mul(g, syl), p.inv(g))) {
            match = false;
            break;
          }
        }
      if (match) return false;
    }
  }
  return true;
}

}  // namespace gp
