// Internal groupoids in a category of groups with operations, and the
// functors to_groupoid / to_crossed_module between them and crossed
// modules.
//
// Composition is never stored. For arrows a: x -> y and b: y -> z it is
// forced by the addition to be
//
//     b o a = b - identity(y) + a,
//
// and every arrow a has the inverse identity(target a) - a +
// identity(source a).

#ifndef XMODLAB_GROUPOID_HPP_
#define XMODLAB_GROUPOID_HPP_

#include <string>  // for string

#include "algebra.hpp"
#include "core.hpp"
#include "xmod.hpp"

namespace xmodlab {

  struct InternalGroupoid {
    std::string name;
    AlgebraPtr  arrows;    // C1
    AlgebraPtr  objects;   // C0
    AlgMorphism source;    // C1 -> C0
    AlgMorphism target;    // C1 -> C0
    AlgMorphism identity;  // C0 -> C1

    bool composable(Elem b, Elem a) const {
      return target(a) == source(b);
    }
    //! b o a; the caller guarantees composable(b, a).
    Elem compose(Elem b, Elem a) const {
      return arrows->add(arrows->sub(b, identity(target(a))), a);
    }
    Elem inverse(Elem a) const {
      return arrows->add(arrows->sub(identity(target(a)), a),
                         identity(source(a)));
    }
  };

  bool same_structure(InternalGroupoid const& g, InternalGroupoid const& h);

  //! Condition ids: eps-section (op d0 or d1: identity is a section of
  //! source and of target), comp-source, comp-target, comp-assoc,
  //! comp-identity, interchange (op "+", each binary op, each unary op),
  //! inverse; plus prefixed morphism violations for the structure maps.
  //! Interchange witnesses are quadruples (a, b, c, d) with a o c and
  //! b o d defined.
  ValidationReport validate_groupoid(InternalGroupoid const& g);

  struct InternalFunctor {
    InternalGroupoid source;
    InternalGroupoid target;
    AlgMorphism      on_arrows;
    AlgMorphism      on_objects;
  };

  bool operator==(InternalFunctor const& f, InternalFunctor const& g);

  //! Both components are morphisms and commute with source, target and
  //! identity maps; composition is preserved. Condition ids: F-source,
  //! F-target, F-identity, F-compose.
  ValidationReport check_functor(InternalFunctor const& f);

  //! g after f. Throws NotComposable.
  InternalFunctor compose(InternalFunctor const& g, InternalFunctor const& f);

  InternalFunctor identity_functor(InternalGroupoid const& g);

  //! Arrows A x| B, objects B, source (a,b) = b, target (a,b) =
  //! boundary(a) + b, identity b = (0,b). Throws InvalidCrossedModule.
  InternalGroupoid to_groupoid(CrossedModule const& x);

  //! top x bottom on arrows, bottom on objects. Throws InvalidMorphism.
  InternalFunctor to_functor(XModMorphism const& m);

  //! (ker source, objects, target restricted) with x.a = 1x + a - 1x and
  //! x*a = 1x * a. Throws InvalidGroupoid.
  CrossedModule to_crossed_module(InternalGroupoid const& g);

  //! Arrows A x A, source and target the projections, identity diagonal.
  InternalGroupoid pair_groupoid(AlgebraPtr const& a);

  //! a -> (a, 0) as an isomorphism x -> to_crossed_module(to_groupoid(x)),
  //! validated. Throws RoundTripFailure naming the first failed check, also
  //! when x itself is invalid.
  XModMorphism roundtrip(CrossedModule const& x);

  //! c -> (c - identity(source c), source c) as an isomorphism
  //! g -> to_groupoid(to_crossed_module(g)), validated. Throws
  //! RoundTripFailure, also when g itself is invalid.
  InternalFunctor roundtrip(InternalGroupoid const& g);

}  // namespace xmodlab

#endif  // XMODLAB_GROUPOID_HPP_
