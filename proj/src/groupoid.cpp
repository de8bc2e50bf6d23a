#include "xmodlab/groupoid.hpp"

#include <limits>  // for numeric_limits
#include <vector>  // for vector

namespace xmodlab {

  namespace {

    constexpr Elem kUnset = std::numeric_limits<Elem>::max();

    // Composable pairs (b, a), i.e. target(a) == source(b), in
    // lexicographic order.
    std::vector<std::pair<Elem, Elem>>
    composable_pairs(InternalGroupoid const& g) {
      std::vector<std::pair<Elem, Elem>> out;
      std::size_t const                  n = g.arrows->order();
      for (Elem b = 0; b < n; ++b) {
        for (Elem a = 0; a < n; ++a) {
          if (g.composable(b, a)) {
            out.emplace_back(b, a);
          }
        }
      }
      return out;
    }

    // Checks (x o y) op (z o w) == (x op z) o (y op w) for composable
    // (x, y) and (z, w); witness (x, z, y, w) so it reads as the operands
    // of the left-hand side.
    template <typename Op>
    void check_interchange(ValidationReport&                         r,
                           InternalGroupoid const&                   g,
                           std::vector<std::pair<Elem, Elem>> const& pairs,
                           std::string const&                        name,
                           Op&&                                      op) {
      for (auto [x, y] : pairs) {
        for (auto [z, w] : pairs) {
          Elem xz = op(x, z), yw = op(y, w);
          bool ok = g.composable(xz, yw)
                    && g.compose(xz, yw) == op(g.compose(x, y),
                                               g.compose(z, w));
          if (!ok) {
            r.add({"interchange",
                   name,
                   {x, z, y, w},
                   "(a*b)o(c*d) = (aoc)*(bod) fails for a,b,c,d = witness"});
            return;
          }
        }
      }
    }

    void require_valid(ValidationReport const& r,
                       ErrorCode               code,
                       std::string const&      what) {
      if (!r.valid()) {
        throw Error(code, what + " is not valid:\n" + r.summary());
      }
    }

  }  // namespace

  bool same_structure(InternalGroupoid const& g, InternalGroupoid const& h) {
    return g.source == h.source && g.target == h.target
           && g.identity == h.identity;
  }

  ValidationReport validate_groupoid(InternalGroupoid const& g) {
    ValidationReport r;
    r.merge(check_morphism(g.source), "source");
    r.merge(check_morphism(g.target), "target");
    r.merge(check_morphism(g.identity), "identity");
    if (!same_structure(g.source.source, g.arrows)
        || !same_structure(g.target.source, g.arrows)
        || !same_structure(g.identity.target, g.arrows)
        || !same_structure(g.source.target, g.objects)
        || !same_structure(g.target.target, g.objects)
        || !same_structure(g.identity.source, g.objects)) {
      throw Error(ErrorCode::SignatureMismatch,
                  "groupoid '" + g.name
                      + "': structure maps do not sit over its algebras");
    }

    auto const&       C1 = *g.arrows;
    std::size_t const n = C1.order(), m = g.objects->order();

    r.expect<1>("eps-section", "d0", {m}, [&](auto const& t) {
      return g.source(g.identity(t[0])) == t[0];
    });
    r.expect<1>("eps-section", "d1", {m}, [&](auto const& t) {
      return g.target(g.identity(t[0])) == t[0];
    });

    r.expect<2>("comp-source", "", {n, n}, [&](auto const& t) {
      auto [b, a] = t;
      return !g.composable(b, a) || g.source(g.compose(b, a)) == g.source(a);
    });
    r.expect<2>("comp-target", "", {n, n}, [&](auto const& t) {
      auto [b, a] = t;
      return !g.composable(b, a) || g.target(g.compose(b, a)) == g.target(b);
    });
    r.expect<3>("comp-assoc", "", {n, n, n}, [&](auto const& t) {
      auto [c, b, a] = t;
      if (!g.composable(c, b) || !g.composable(b, a)) {
        return true;
      }
      return g.compose(g.compose(c, b), a) == g.compose(c, g.compose(b, a));
    });
    r.expect<1>("comp-identity", "", {n}, [&](auto const& t) {
      Elem a = t[0];
      return g.compose(g.identity(g.target(a)), a) == a
             && g.compose(a, g.identity(g.source(a))) == a;
    });
    r.expect<1>("inverse", "", {n}, [&](auto const& t) {
      Elem a = t[0], inv = g.inverse(a);
      return g.source(inv) == g.target(a) && g.target(inv) == g.source(a)
             && g.compose(inv, a) == g.identity(g.source(a))
             && g.compose(a, inv) == g.identity(g.target(a));
    });

    auto const pairs = composable_pairs(g);
    check_interchange(
        r, g, pairs, "+", [&](Elem x, Elem y) { return C1.add(x, y); });
    auto const& sig = C1.signature();
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      check_interchange(r, g, pairs, sig.binary_name(k), [&](Elem x, Elem y) {
        return C1.op(k, x, y);
      });
    }
    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      for (auto [b, a] : pairs) {
        Elem wb = C1.unop(u, b), wa = C1.unop(u, a);
        if (!g.composable(wb, wa)
            || C1.unop(u, g.compose(b, a)) != g.compose(wb, wa)) {
          r.add({"interchange", sig.unary_name(u), {b, a}, ""});
          break;
        }
      }
    }
    return r;
  }

  bool operator==(InternalFunctor const& f, InternalFunctor const& g) {
    return f.on_arrows == g.on_arrows && f.on_objects == g.on_objects
           && same_structure(f.source, g.source)
           && same_structure(f.target, g.target);
  }

  ValidationReport check_functor(InternalFunctor const& f) {
    auto const& G = f.source;
    auto const& H = f.target;
    if (!same_structure(f.on_arrows.source, G.arrows)
        || !same_structure(f.on_arrows.target, H.arrows)
        || !same_structure(f.on_objects.source, G.objects)
        || !same_structure(f.on_objects.target, H.objects)) {
      throw Error(ErrorCode::SignatureMismatch,
                  "functor components do not match '" + G.name + "' -> '"
                      + H.name + "'");
    }
    ValidationReport r;
    r.merge(check_morphism(f.on_arrows), "arrows");
    r.merge(check_morphism(f.on_objects), "objects");
    auto const&       F1 = f.on_arrows;
    auto const&       F0 = f.on_objects;
    std::size_t const n = G.arrows->order(), m = G.objects->order();
    r.expect<1>("F-source", "", {n}, [&](auto const& t) {
      return F0(G.source(t[0])) == H.source(F1(t[0]));
    });
    r.expect<1>("F-target", "", {n}, [&](auto const& t) {
      return F0(G.target(t[0])) == H.target(F1(t[0]));
    });
    r.expect<1>("F-identity", "", {m}, [&](auto const& t) {
      return F1(G.identity(t[0])) == H.identity(F0(t[0]));
    });
    r.expect<2>("F-compose", "", {n, n}, [&](auto const& t) {
      auto [b, a] = t;
      if (!G.composable(b, a)) {
        return true;
      }
      return H.composable(F1(b), F1(a))
             && F1(G.compose(b, a)) == H.compose(F1(b), F1(a));
    });
    return r;
  }

  InternalFunctor compose(InternalFunctor const& g, InternalFunctor const& f) {
    if (!same_structure(f.target, g.source)) {
      throw Error(ErrorCode::NotComposable,
                  "target '" + f.target.name + "' differs from source '"
                      + g.source.name + "'");
    }
    return {f.source,
            g.target,
            compose(g.on_arrows, f.on_arrows),
            compose(g.on_objects, f.on_objects)};
  }

  InternalFunctor identity_functor(InternalGroupoid const& g) {
    return {g, g, identity_morphism(g.arrows), identity_morphism(g.objects)};
  }

  InternalGroupoid to_groupoid(CrossedModule const& x) {
    require_valid(validate_crossed_module(x),
                  ErrorCode::InvalidCrossedModule,
                  "crossed module '" + x.name() + "'");
    auto const&      A = x.module();
    auto const&      B = x.base();
    auto             E = semidirect_product(x.action()).algebra;
    PairCoding const pc{A->order(), B->order()};

    std::vector<Elem> source(pc.size()), target(pc.size()), identity(B->order());
    for (Elem p = 0; p < pc.size(); ++p) {
      source[p] = pc.second(p);
      target[p] = B->add(x.boundary()(pc.first(p)), pc.second(p));
    }
    for (Elem b = 0; b < B->order(); ++b) {
      identity[b] = pc.encode(0, b);
    }
    return {x.name() + "-groupoid",
            E,
            B,
            AlgMorphism{E, B, std::move(source)},
            AlgMorphism{E, B, std::move(target)},
            AlgMorphism{B, E, std::move(identity)}};
  }

  InternalFunctor to_functor(XModMorphism const& m) {
    require_valid(check_xmod_morphism(m),
                  ErrorCode::InvalidMorphism,
                  "crossed module morphism");
    auto G = to_groupoid(m.source);
    auto H = to_groupoid(m.target);
    PairCoding const  src{m.source.module()->order(), m.source.base()->order()};
    PairCoding const  tgt{m.target.module()->order(), m.target.base()->order()};
    std::vector<Elem> arrows(src.size());
    for (Elem p = 0; p < src.size(); ++p) {
      arrows[p] = tgt.encode(m.top(src.first(p)), m.bottom(src.second(p)));
    }
    AlgMorphism on_arrows{G.arrows, H.arrows, std::move(arrows)};
    AlgMorphism on_objects{G.objects, H.objects, m.bottom.map};
    return {std::move(G), std::move(H), std::move(on_arrows),
            std::move(on_objects)};
  }

  CrossedModule to_crossed_module(InternalGroupoid const& g) {
    require_valid(validate_groupoid(g),
                  ErrorCode::InvalidGroupoid,
                  "groupoid '" + g.name + "'");
    auto const&       C1  = *g.arrows;
    auto              ker = kernel_of(g.source);
    auto const&       A   = ker.algebra;
    auto const&       B   = g.objects;
    std::size_t const na = A->order(), nb = B->order();

    std::vector<Elem> preimage(C1.order(), kUnset);
    for (Elem k = 0; k < na; ++k) {
      preimage[ker.inclusion(k)] = k;
    }
    auto pull = [&](Elem c) {
      if (preimage[c] == kUnset) {
        throw Error(ErrorCode::InternalInconsistency,
                    "action leaves the kernel of the source map");
      }
      return preimage[c];
    };

    std::vector<Elem> boundary(na);
    for (Elem k = 0; k < na; ++k) {
      boundary[k] = g.target(ker.inclusion(k));
    }
    Table dot(nb, na);
    for (Elem x = 0; x < nb; ++x) {
      Elem one = g.identity(x);
      for (Elem k = 0; k < na; ++k) {
        dot(x, k) = pull(C1.sub(C1.add(one, ker.inclusion(k)), one));
      }
    }
    std::vector<Table> star;
    for (std::size_t op = 0; op < C1.signature().num_binary(); ++op) {
      Table t(nb, na);
      for (Elem x = 0; x < nb; ++x) {
        for (Elem k = 0; k < na; ++k) {
          t(x, k) = pull(C1.op(op, g.identity(x), ker.inclusion(k)));
        }
      }
      star.push_back(std::move(t));
    }
    return CrossedModule(g.name + "-xmod",
                         AlgMorphism{A, B, std::move(boundary)},
                         ActionSet(B, A, std::move(dot), std::move(star)));
  }

  InternalGroupoid pair_groupoid(AlgebraPtr const& a) {
    auto             C1 = direct_product(*a, *a, a->name() + "x" + a->name());
    PairCoding const pc{a->order(), a->order()};
    std::vector<Elem> source(pc.size()), target(pc.size()), identity(a->order());
    for (Elem p = 0; p < pc.size(); ++p) {
      source[p] = pc.first(p);
      target[p] = pc.second(p);
    }
    for (Elem x = 0; x < a->order(); ++x) {
      identity[x] = pc.encode(x, x);
    }
    return {"pair-" + a->name(),
            C1,
            a,
            AlgMorphism{C1, a, std::move(source)},
            AlgMorphism{C1, a, std::move(target)},
            AlgMorphism{a, C1, std::move(identity)}};
  }

  XModMorphism roundtrip(CrossedModule const& x) {
    auto const y = [&] {
      try {
        return to_crossed_module(to_groupoid(x));
      } catch (Error const& e) {
        throw Error(ErrorCode::RoundTripFailure, e.what());
      }
    }();
    auto const yr = validate_crossed_module(y);
    if (!yr.valid()) {
      throw Error(ErrorCode::RoundTripFailure,
                  "image of '" + x.name() + "' is invalid:\n" + yr.summary());
    }
    PairCoding const  pc{x.module()->order(), x.base()->order()};
    // The kernel of the source map is {(a, 0)}, numbered in increasing
    // order of the pair code, i.e. by a.
    std::vector<Elem> index(pc.size(), kUnset);
    for (Elem k = 0; k < y.module()->order(); ++k) {
      index[pc.encode(k, 0)] = k;
    }
    std::vector<Elem> top(x.module()->order());
    for (Elem a = 0; a < top.size(); ++a) {
      top[a] = index[pc.encode(a, 0)];
      if (top[a] == kUnset) {
        throw Error(ErrorCode::RoundTripFailure,
                    "(" + std::to_string(a) + ", 0) is not in the kernel");
      }
    }
    XModMorphism m{x,
                   y,
                   AlgMorphism{x.module(), y.module(), std::move(top)},
                   AlgMorphism{x.base(), y.base(), identity_morphism(x.base()).map}};
    auto r = check_xmod_morphism(m);
    if (!r.valid() || !is_bijective(m.top) || !is_bijective(m.bottom)) {
      throw Error(ErrorCode::RoundTripFailure,
                  "canonical map for '" + x.name()
                      + "' is not an isomorphism:\n" + r.summary());
    }
    return m;
  }

  InternalFunctor roundtrip(InternalGroupoid const& g) {
    auto const [x, h] = [&] {
      try {
        auto y = to_crossed_module(g);
        return std::pair{y, to_groupoid(y)};
      } catch (Error const& e) {
        throw Error(ErrorCode::RoundTripFailure, e.what());
      }
    }();
    auto const ker = kernel_of(g.source);
    std::vector<Elem> preimage(g.arrows->order(), kUnset);
    for (Elem k = 0; k < ker.algebra->order(); ++k) {
      preimage[ker.inclusion(k)] = k;
    }
    PairCoding const  pc{x.module()->order(), x.base()->order()};
    std::vector<Elem> arrows(g.arrows->order());
    for (Elem c = 0; c < arrows.size(); ++c) {
      Elem s = g.source(c);
      Elem k = preimage[g.arrows->sub(c, g.identity(s))];
      if (k == kUnset) {
        throw Error(ErrorCode::RoundTripFailure,
                    "c - 1_source(c) is not in the kernel at "
                        + std::to_string(c));
      }
      arrows[c] = pc.encode(k, s);
    }
    InternalFunctor f{g,
                      h,
                      AlgMorphism{g.arrows, h.arrows, std::move(arrows)},
                      AlgMorphism{g.objects, h.objects,
                                  identity_morphism(g.objects).map}};
    auto r = check_functor(f);
    if (!r.valid() || !is_bijective(f.on_arrows)
        || !is_bijective(f.on_objects)) {
      throw Error(ErrorCode::RoundTripFailure,
                  "canonical functor for '" + g.name
                      + "' is not an isomorphism:\n" + r.summary());
    }
    return f;
  }

}  // namespace xmodlab
