// Crossed modules (A, B, boundary, action) in a category of groups with
// operations, and their morphisms.

#ifndef XMODLAB_XMOD_HPP_
#define XMODLAB_XMOD_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "action.hpp"
#include "algebra.hpp"
#include "core.hpp"

namespace xmodlab {

  class CrossedModule {
   public:
    //! Throws SignatureMismatch unless the action is an action of the
    //! boundary's target on its source. Axioms are not checked here.
    CrossedModule(std::string name, AlgMorphism boundary, ActionSet action);

    std::string const& name() const noexcept {
      return name_;
    }
    //! A, the algebra acted on.
    AlgebraPtr const& module() const noexcept {
      return boundary_.source;
    }
    //! B, the acting algebra.
    AlgebraPtr const& base() const noexcept {
      return boundary_.target;
    }
    AlgMorphism const& boundary() const noexcept {
      return boundary_;
    }
    ActionSet const& action() const noexcept {
      return action_;
    }

    CrossedModule renamed(std::string name) const;

   private:
    std::string name_;
    AlgMorphism boundary_;
    ActionSet   action_;
  };

  //! Same carriers, boundary table and action tables. Names are ignored.
  bool same_structure(CrossedModule const& x, CrossedModule const& y);

  //! CM1..CM4 together with boundary: (morphism) and D1..D12 (action)
  //! violations. When the boundary is a morphism and the action derived,
  //! the verdict is cross-checked against check_semidirect_maps and a
  //! disagreement throws InternalInconsistency.
  ValidationReport validate_crossed_module(CrossedModule const& x);

  //! The second formulation: (1, boundary): A x| A -> A x| B and
  //! (boundary, 1): A x| B -> B x| B are morphisms, where A x| A and
  //! B x| B use conjugation. Violations are prefixed "id-boundary" and
  //! "boundary-id".
  ValidationReport check_semidirect_maps(CrossedModule const& x);

  struct XModMorphism {
    CrossedModule source;
    CrossedModule target;
    AlgMorphism   top;     // A -> A'
    AlgMorphism   bottom;  // B -> B'
  };

  bool operator==(XModMorphism const& f, XModMorphism const& g);

  //! Conditions M-i (bottom after boundary = boundary' after top), M-ii
  //! (dot equivariance) and M-iii (star equivariance), plus top:/bottom:
  //! morphism violations. Throws SignatureMismatch if the components do not
  //! sit over the crossed modules' carriers.
  ValidationReport check_xmod_morphism(XModMorphism const& m);

  XModMorphism identity_xmod_morphism(CrossedModule const& x);
  XModMorphism zero_xmod_morphism(CrossedModule const& source,
                                  CrossedModule const& target);

  //! g after f, componentwise. Throws NotComposable.
  XModMorphism compose(XModMorphism const& g, XModMorphism const& f);

  //! True iff the top component is bijective. Throws InvalidMorphism when
  //! m fails check_xmod_morphism.
  bool is_covering(XModMorphism const& m);

  //! Every valid morphism source -> target, ordered by (top, bottom) maps.
  std::vector<XModMorphism>
  enumerate_xmod_morphisms(CrossedModule const& source,
                           CrossedModule const& target,
                           std::uint64_t        budget = kDefaultBudget);

}  // namespace xmodlab

#endif  // XMODLAB_XMOD_HPP_
