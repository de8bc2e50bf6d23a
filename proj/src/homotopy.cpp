#include "xmodlab/homotopy.hpp"

#include <string>  // for string, to_string

namespace xmodlab {

  namespace {

    void require_same_endpoints(XModMorphism const& f, XModMorphism const& g) {
      if (!same_structure(f.source, g.source)
          || !same_structure(f.target, g.target)) {
        throw Error(ErrorCode::EndpointMismatch,
                    "morphisms '" + f.source.name() + "' -> '"
                        + f.target.name() + "' and '" + g.source.name()
                        + "' -> '" + g.target.name()
                        + "' do not share endpoints");
      }
    }

    void require_same_endpoints(InternalFunctor const& f,
                                InternalFunctor const& g) {
      if (!same_structure(f.source, g.source)
          || !same_structure(f.target, g.target)) {
        throw Error(ErrorCode::EndpointMismatch,
                    "functors do not share source and target groupoids");
      }
    }

    PairCoding arrow_coding(InternalGroupoid const& g) {
      std::size_t const objects = g.objects->order();
      return {g.arrows->order() / objects, objects};
    }

    // Converts back from the groupoid side, where a failure means the
    // construction itself is wrong.
    XModHomotopy back(GroupoidHomotopy const& n,
                      CrossedModule const&    source,
                      CrossedModule const&    target) {
      try {
        return natural_iso_to_homotopy(n, source, target);
      } catch (Error const& e) {
        throw Error(ErrorCode::InternalInconsistency,
                    std::string("composite 2-cell does not convert back: ")
                        + e.what());
      }
    }

  }  // namespace

  ValidationReport validate_xmod_homotopy(XModHomotopy const& h) {
    auto const& f = h.from;
    auto const& g = h.to;
    require_same_endpoints(f, g);
    auto const&       src = f.source;
    auto const&       tgt = f.target;
    auto const&       B   = *src.base();
    auto const&       C   = *tgt.module();
    auto const&       D   = *tgt.base();
    auto const&       act = tgt.action();
    std::size_t const na = src.module()->order(), nb = B.order();
    if (h.d.size() != nb) {
      throw Error(ErrorCode::DimensionMismatch,
                  "homotopy table has " + std::to_string(h.d.size())
                      + " entries, expected " + std::to_string(nb));
    }
    check_range(h.d, C.order(), "homotopy");

    ValidationReport r;
    r.merge(check_xmod_morphism(f), "from");
    r.merge(check_xmod_morphism(g), "to");

    auto const& d  = h.d;
    auto const& f0 = f.bottom;
    r.expect<2>("H-i", "", {nb, nb}, [&](auto const& t) {
      auto [b, b1] = t;
      return d[B.add(b, b1)] == C.add(d[b], act.dot(f0(b), d[b1]));
    });
    auto const& sig = B.signature();
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      r.expect<2>("H-ii", sig.binary_name(k), {nb, nb}, [&](auto const& t) {
        auto [b, b1] = t;
        Elem rhs = C.add(C.add(C.op(k, d[b], d[b1]), act.right(k, d[b], f0(b1))),
                         act.left(k, f0(b), d[b1]));
        return d[B.op(k, b, b1)] == rhs;
      });
    }
    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      r.expect<1>("H-iii", sig.unary_name(u), {nb}, [&](auto const& t) {
        return d[B.unop(u, t[0])] == C.unop(u, d[t[0]]);
      });
    }
    r.expect<1>("H-iv", "", {nb}, [&](auto const& t) {
      Elem b = t[0];
      return tgt.boundary()(d[b]) == D.sub(g.bottom(b), f0(b));
    });
    r.expect<1>("H-v", "", {na}, [&](auto const& t) {
      Elem a = t[0];
      return d[src.boundary()(a)] == C.sub(g.top(a), f.top(a));
    });
    return r;
  }

  XModHomotopy zero_homotopy(XModMorphism const& f) {
    return {f, f, std::vector<Elem>(f.source.base()->order(), 0)};
  }

  ValidationReport validate_groupoid_homotopy(GroupoidHomotopy const& n) {
    auto const& F = n.from;
    auto const& G = n.to;
    require_same_endpoints(F, G);
    auto const& S = F.source;
    auto const& T = F.target;
    if (!same_structure(n.eta.source, S.objects)
        || !same_structure(n.eta.target, T.arrows)) {
      throw Error(ErrorCode::SignatureMismatch,
                  "components must map objects of '" + S.name
                      + "' to arrows of '" + T.name + "'");
    }
    ValidationReport r;
    r.merge(check_functor(F), "from");
    r.merge(check_functor(G), "to");
    r.merge(check_morphism(n.eta), "eta");
    auto const&       eta = n.eta;
    std::size_t const m = S.objects->order(), k = S.arrows->order();
    r.expect<1>("eta-source", "", {m}, [&](auto const& t) {
      return T.source(eta(t[0])) == F.on_objects(t[0]);
    });
    r.expect<1>("eta-target", "", {m}, [&](auto const& t) {
      return T.target(eta(t[0])) == G.on_objects(t[0]);
    });
    r.expect<1>("naturality", "", {k}, [&](auto const& t) {
      Elem c = t[0];
      Elem x = S.source(c), y = S.target(c);
      Elem lhs_a = G.on_arrows(c), lhs_b = eta(x);
      Elem rhs_a = eta(y), rhs_b = F.on_arrows(c);
      return T.composable(lhs_a, lhs_b) && T.composable(rhs_a, rhs_b)
             && T.compose(lhs_a, lhs_b) == T.compose(rhs_a, rhs_b);
    });
    return r;
  }

  GroupoidHomotopy natural_candidate(InternalFunctor const& from,
                                     InternalFunctor const& to,
                                     std::span<Elem const>  d) {
    require_same_endpoints(from, to);
    auto const&       T  = from.target;
    PairCoding const  pc = arrow_coding(T);
    std::size_t const nb = from.source.objects->order();
    if (d.size() != nb) {
      throw Error(ErrorCode::DimensionMismatch,
                  "homotopy table has " + std::to_string(d.size())
                      + " entries, expected " + std::to_string(nb));
    }
    std::vector<Elem> eta(nb);
    for (Elem b = 0; b < nb; ++b) {
      if (d[b] >= pc.first_order) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "homotopy entry " + std::to_string(d[b])
                        + " out of range");
      }
      eta[b] = pc.encode(d[b], from.on_objects(b));
    }
    return {from, to, AlgMorphism{from.source.objects, T.arrows, std::move(eta)}};
  }

  GroupoidHomotopy homotopy_to_natural_iso(XModHomotopy const& h) {
    auto r = validate_xmod_homotopy(h);
    if (!r.valid()) {
      throw Error(ErrorCode::InvalidHomotopy, r.summary());
    }
    return natural_candidate(to_functor(h.from), to_functor(h.to), h.d);
  }

  XModHomotopy natural_iso_to_homotopy(GroupoidHomotopy const& n,
                                       CrossedModule const&    source,
                                       CrossedModule const&    target) {
    auto const G = to_groupoid(source);
    auto const H = to_groupoid(target);
    for (auto const* F : {&n.from, &n.to}) {
      if (!same_structure(F->source, G) || !same_structure(F->target, H)) {
        throw Error(ErrorCode::NotDeltaImage,
                    "functor does not run between the images of '"
                        + source.name() + "' and '" + target.name() + "'");
      }
    }
    auto r = validate_groupoid_homotopy(n);
    if (!r.valid()) {
      throw Error(ErrorCode::InvalidHomotopy, r.summary());
    }
    PairCoding const src{source.module()->order(), source.base()->order()};
    PairCoding const tgt{target.module()->order(), target.base()->order()};

    auto recover = [&](InternalFunctor const& F) {
      std::vector<Elem> top(source.module()->order());
      for (Elem a = 0; a < top.size(); ++a) {
        top[a] = tgt.first(F.on_arrows(src.encode(a, 0)));
      }
      XModMorphism m{source,
                     target,
                     AlgMorphism{source.module(), target.module(), std::move(top)},
                     AlgMorphism{source.base(), target.base(), F.on_objects.map}};
      try {
        if (to_functor(m) == F) {
          return m;
        }
      } catch (Error const&) {
      }
      throw Error(ErrorCode::NotDeltaImage,
                  "functor is not the image of a crossed module morphism");
    };

    std::vector<Elem> d(source.base()->order());
    for (Elem b = 0; b < d.size(); ++b) {
      d[b] = tgt.first(n.eta(b));
    }
    XModHomotopy h{recover(n.from), recover(n.to), std::move(d)};
    auto hr = validate_xmod_homotopy(h);
    if (!hr.valid()) {
      throw Error(ErrorCode::InvalidHomotopy, hr.summary());
    }
    return h;
  }

  GroupoidHomotopy vertical_compose(GroupoidHomotopy const& n2,
                                    GroupoidHomotopy const& n1) {
    if (!(n1.to == n2.from)) {
      throw Error(ErrorCode::NotComposable,
                  "first 2-cell does not end where the second starts");
    }
    auto const&       T = n1.from.target;
    std::size_t const m = n1.eta.map.size();
    std::vector<Elem> eta(m);
    for (Elem x = 0; x < m; ++x) {
      eta[x] = T.compose(n2.eta(x), n1.eta(x));
    }
    return {n1.from, n2.to, AlgMorphism{n1.eta.source, n1.eta.target, std::move(eta)}};
  }

  GroupoidHomotopy inverse(GroupoidHomotopy const& n) {
    auto const&       T = n.from.target;
    std::vector<Elem> eta(n.eta.map.size());
    for (Elem x = 0; x < eta.size(); ++x) {
      eta[x] = T.inverse(n.eta(x));
    }
    return {n.to, n.from, AlgMorphism{n.eta.source, n.eta.target, std::move(eta)}};
  }

  GroupoidHomotopy whisker_left(InternalFunctor const&  k,
                                GroupoidHomotopy const& n) {
    if (!same_structure(k.source, n.from.target)) {
      throw Error(ErrorCode::NotComposable,
                  "functor does not start at the 2-cell's target");
    }
    return {compose(k, n.from), compose(k, n.to), compose(k.on_arrows, n.eta)};
  }

  GroupoidHomotopy whisker_right(GroupoidHomotopy const& n,
                                 InternalFunctor const&  p) {
    if (!same_structure(p.target, n.from.source)) {
      throw Error(ErrorCode::NotComposable,
                  "functor does not end at the 2-cell's source");
    }
    return {compose(n.from, p), compose(n.to, p), compose(n.eta, p.on_objects)};
  }

  XModHomotopy vertical_compose(XModHomotopy const& h2, XModHomotopy const& h1) {
    if (!(h1.to == h2.from)) {
      throw Error(ErrorCode::NotComposable,
                  "first homotopy does not end where the second starts");
    }
    auto n = vertical_compose(homotopy_to_natural_iso(h2),
                              homotopy_to_natural_iso(h1));
    return back(n, h1.from.source, h1.from.target);
  }

  XModHomotopy inverse(XModHomotopy const& h) {
    return back(inverse(homotopy_to_natural_iso(h)),
                h.from.source,
                h.from.target);
  }

  XModHomotopy whisker_left(XModMorphism const& k, XModHomotopy const& h) {
    auto n = whisker_left(to_functor(k), homotopy_to_natural_iso(h));
    return back(n, h.from.source, k.target);
  }

  XModHomotopy whisker_right(XModHomotopy const& h, XModMorphism const& p) {
    auto n = whisker_right(homotopy_to_natural_iso(h), to_functor(p));
    return back(n, p.source, h.from.target);
  }

}  // namespace xmodlab
