#include "xmodlab/xmod.hpp"

namespace xmodlab {

  CrossedModule::CrossedModule(std::string name,
                               AlgMorphism boundary,
                               ActionSet   action)
      : name_(std::move(name)),
        boundary_(std::move(boundary)),
        action_(std::move(action)) {
    if (!same_structure(boundary_.source, action_.acted())
        || !same_structure(boundary_.target, action_.actor())) {
      throw Error(ErrorCode::SignatureMismatch,
                  "crossed module '" + name_
                      + "': action is not an action of the boundary's target "
                        "on its source");
    }
    if (boundary_.map.size() != boundary_.source->order()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "crossed module '" + name_ + "': boundary has "
                      + std::to_string(boundary_.map.size()) + " entries");
    }
    check_range(boundary_.map, boundary_.target->order(), "boundary");
  }

  CrossedModule CrossedModule::renamed(std::string name) const {
    CrossedModule copy = *this;
    copy.name_         = std::move(name);
    return copy;
  }

  bool same_structure(CrossedModule const& x, CrossedModule const& y) {
    return x.boundary() == y.boundary() && x.action() == y.action();
  }

  ValidationReport validate_crossed_module(CrossedModule const& x) {
    ValidationReport r;
    auto const&      A   = *x.module();
    auto const&      B   = *x.base();
    auto const&      act = x.action();
    auto const&      bd  = x.boundary();
    std::size_t const na = A.order(), nb = B.order();

    auto boundary_report = check_morphism(bd);
    auto action_report   = check_derived_action(act);
    r.merge(boundary_report, "boundary");
    r.merge(action_report);

    ValidationReport cm;
    cm.expect<2>("CM1", "", {nb, na}, [&](auto const& t) {
      auto [b, a] = t;
      return bd(act.dot(b, a)) == B.sub(B.add(b, bd(a)), b);
    });
    cm.expect<2>("CM2", "", {na, na}, [&](auto const& t) {
      auto [a, a1] = t;
      return act.dot(bd(a), a1) == A.sub(A.add(a, a1), a);
    });
    for (std::size_t k = 0; k < A.signature().num_binary(); ++k) {
      auto const& op = A.signature().binary_name(k);
      cm.expect<2>("CM3", op, {nb, na}, [&](auto const& t) {
        auto [b, a] = t;
        return bd(act.left(k, b, a)) == B.op(k, b, bd(a))
               && bd(act.right(k, a, b)) == B.op(k, bd(a), b);
      });
      cm.expect<2>("CM4", op, {na, na}, [&](auto const& t) {
        auto [a, a1] = t;
        Elem p = A.op(k, a, a1);
        return act.left(k, bd(a), a1) == p && act.right(k, a, bd(a1)) == p;
      });
    }
    r.merge(cm);

    if (boundary_report.valid() && action_report.valid()) {
      bool const maps_ok = check_semidirect_maps(x).valid();
      if (maps_ok != cm.valid()) {
        throw Error(ErrorCode::InternalInconsistency,
                    "crossed module '" + x.name()
                        + "': CM1-CM4 verdict disagrees with the semidirect "
                          "product formulation");
      }
    }
    return r;
  }

  ValidationReport check_semidirect_maps(CrossedModule const& x) {
    auto const& A  = x.module();
    auto const& B  = x.base();
    auto const& bd = x.boundary();

    auto AA = semidirect_product(conjugation_action(A)).algebra;
    auto AB = semidirect_product(x.action()).algebra;
    auto BB = semidirect_product(conjugation_action(B)).algebra;

    PairCoding const  aa{A->order(), A->order()};
    PairCoding const  ab{A->order(), B->order()};
    PairCoding const  bb{B->order(), B->order()};
    std::vector<Elem> left(aa.size()), right(ab.size());
    for (Elem p = 0; p < aa.size(); ++p) {
      left[p] = ab.encode(aa.first(p), bd(aa.second(p)));
    }
    for (Elem p = 0; p < ab.size(); ++p) {
      right[p] = bb.encode(bd(ab.first(p)), ab.second(p));
    }
    ValidationReport r;
    r.merge(check_morphism(left, *AA, *AB), "id-boundary");
    r.merge(check_morphism(right, *AB, *BB), "boundary-id");
    return r;
  }

  bool operator==(XModMorphism const& f, XModMorphism const& g) {
    return f.top == g.top && f.bottom == g.bottom
           && same_structure(f.source, g.source)
           && same_structure(f.target, g.target);
  }

  ValidationReport check_xmod_morphism(XModMorphism const& m) {
    auto const& s = m.source;
    auto const& t = m.target;
    if (!same_structure(m.top.source, s.module())
        || !same_structure(m.top.target, t.module())
        || !same_structure(m.bottom.source, s.base())
        || !same_structure(m.bottom.target, t.base())) {
      throw Error(ErrorCode::SignatureMismatch,
                  "morphism components do not match '" + s.name() + "' -> '"
                      + t.name() + "'");
    }
    ValidationReport r;
    r.merge(check_morphism(m.top), "top");
    r.merge(check_morphism(m.bottom), "bottom");

    auto const&       f1 = m.top;
    auto const&       f0 = m.bottom;
    std::size_t const na = s.module()->order(), nb = s.base()->order();
    r.expect<1>("M-i", "", {na}, [&](auto const& w) {
      return f0(s.boundary()(w[0])) == t.boundary()(f1(w[0]));
    });
    r.expect<2>("M-ii", "", {nb, na}, [&](auto const& w) {
      auto [b, a] = w;
      return f1(s.action().dot(b, a)) == t.action().dot(f0(b), f1(a));
    });
    auto const& sig = s.module()->signature();
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      r.expect<2>("M-iii", sig.binary_name(k), {nb, na}, [&](auto const& w) {
        auto [b, a] = w;
        return f1(s.action().left(k, b, a))
               == t.action().left(k, f0(b), f1(a));
      });
    }
    return r;
  }

  XModMorphism identity_xmod_morphism(CrossedModule const& x) {
    return {x, x, identity_morphism(x.module()), identity_morphism(x.base())};
  }

  XModMorphism zero_xmod_morphism(CrossedModule const& source,
                                  CrossedModule const& target) {
    return {source,
            target,
            zero_morphism(source.module(), target.module()),
            zero_morphism(source.base(), target.base())};
  }

  XModMorphism compose(XModMorphism const& g, XModMorphism const& f) {
    if (!same_structure(f.target, g.source)) {
      throw Error(ErrorCode::NotComposable,
                  "target '" + f.target.name() + "' differs from source '"
                      + g.source.name() + "'");
    }
    return {f.source,
            g.target,
            compose(g.top, f.top),
            compose(g.bottom, f.bottom)};
  }

  bool is_covering(XModMorphism const& m) {
    auto r = check_xmod_morphism(m);
    if (!r.valid()) {
      throw Error(ErrorCode::InvalidMorphism, r.summary());
    }
    return is_bijective(m.top);
  }

  std::vector<XModMorphism>
  enumerate_xmod_morphisms(CrossedModule const& source,
                           CrossedModule const& target,
                           std::uint64_t        budget) {
    auto tops    = enumerate_morphisms(source.module(), target.module(), budget);
    auto bottoms = enumerate_morphisms(source.base(), target.base(), budget);
    std::vector<XModMorphism> result;
    for (auto const& f1 : tops) {
      for (auto const& f0 : bottoms) {
        XModMorphism m{source, target, f1, f0};
        if (check_xmod_morphism(m).valid()) {
          result.push_back(std::move(m));
        }
      }
    }
    return result;
  }

}  // namespace xmodlab
