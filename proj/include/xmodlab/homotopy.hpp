// Homotopies between morphisms of crossed modules and internal natural
// isomorphisms between the corresponding functors of internal groupoids.
//
// A homotopy from f = (f1, f0) to g = (g1, g0), both (A,B,boundary) ->
// (C,D,boundary'), is a map d: B -> C. Its natural isomorphism has
// components V(b) = (d(b), f0(b)) in C x| D, an arrow f0(b) -> g0(b).

#ifndef XMODLAB_HOMOTOPY_HPP_
#define XMODLAB_HOMOTOPY_HPP_

#include <span>    // for span
#include <vector>  // for vector

#include "core.hpp"
#include "groupoid.hpp"
#include "xmod.hpp"

namespace xmodlab {

  struct XModHomotopy {
    XModMorphism      from;  // f
    XModMorphism      to;    // g
    std::vector<Elem> d;     // B -> C
  };

  //! Conditions H-i (additive twist by f0), H-ii (per binary op), H-iii
  //! (per unary op), H-iv (boundary'(d b) = g0(b) - f0(b)) and H-v
  //! (d(boundary a) = g1(a) - f1(a)); from:/to: prefixed violations when f
  //! or g is not a morphism. Throws EndpointMismatch unless f and g share
  //! source and target, DimensionMismatch or IndexOutOfRange for a
  //! malformed d.
  ValidationReport validate_xmod_homotopy(XModHomotopy const& h);

  //! d = 0 from f to itself.
  XModHomotopy zero_homotopy(XModMorphism const& f);

  struct GroupoidHomotopy {
    InternalFunctor from;  // F
    InternalFunctor to;    // G
    AlgMorphism     eta;   // objects of the source -> arrows of the target
  };

  //! Conditions eta-source (eta(x) starts at F(x)), eta-target (ends at
  //! G(x)) and naturality (G(c) o eta(x) = eta(y) o F(c) for c: x -> y);
  //! eta:, from:, to: prefixed violations. Throws EndpointMismatch unless F
  //! and G share source and target groupoids.
  ValidationReport validate_groupoid_homotopy(GroupoidHomotopy const& n);

  //! V(b) = (d(b), f0(b)) for any table d, valid or not. from and to must be
  //! images of crossed module morphisms under to_functor; the arrows of
  //! their target are read as C x| D.
  GroupoidHomotopy natural_candidate(InternalFunctor const& from,
                                     InternalFunctor const& to,
                                     std::span<Elem const>  d);

  //! Throws InvalidHomotopy unless h is valid.
  GroupoidHomotopy homotopy_to_natural_iso(XModHomotopy const& h);

  //! d(b) = first component of eta(b). source and target are the crossed
  //! modules whose images n lives between; throws NotDeltaImage when the
  //! functors are not to_functor images of morphisms source -> target,
  //! InvalidHomotopy when n is not valid.
  XModHomotopy natural_iso_to_homotopy(GroupoidHomotopy const& n,
                                       CrossedModule const&    source,
                                       CrossedModule const&    target);

  //! Pointwise composite n2(x) o n1(x). Throws NotComposable unless n1 ends
  //! where n2 starts.
  GroupoidHomotopy vertical_compose(GroupoidHomotopy const& n2,
                                    GroupoidHomotopy const& n1);

  //! Pointwise inverse, from G back to F.
  GroupoidHomotopy inverse(GroupoidHomotopy const& n);

  //! k o n, from k o F to k o G.
  GroupoidHomotopy whisker_left(InternalFunctor const&  k,
                                GroupoidHomotopy const& n);

  //! n o p, from F o p to G o p; components eta(p(x)).
  GroupoidHomotopy whisker_right(GroupoidHomotopy const& n,
                                 InternalFunctor const&  p);

  //! The crossed-module versions below are computed on the groupoid side
  //! and converted back; each result is validated (InternalInconsistency
  //! otherwise).

  //! h2 after h1, from h1.from to h2.to. Throws NotComposable.
  XModHomotopy vertical_compose(XModHomotopy const& h2, XModHomotopy const& h1);

  //! From h.to back to h.from.
  XModHomotopy inverse(XModHomotopy const& h);

  //! k o h, from k o f to k o g.
  XModHomotopy whisker_left(XModMorphism const& k, XModHomotopy const& h);

  //! h o p, from f o p to g o p.
  XModHomotopy whisker_right(XModHomotopy const& h, XModMorphism const& p);

}  // namespace xmodlab

#endif  // XMODLAB_HOMOTOPY_HPP_
