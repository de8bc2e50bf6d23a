// New actions and crossed modules obtained from a derivation d of
// (A, B, boundary).
//
// Any derivation gives the derived action
//
//     b~a  = d(b) + b.a - d(b),    b *~ a = d(b)*a + b*a,
//
// which is the action of the split extension A -> A x| B -> B with section
// b -> (d(b), b). For regular d this equals sigma_d(b).a and
// sigma_d(b)*a, and (A, B, sigma_d^-1 o boundary) with that action is a
// crossed module isomorphic to the original one via (1, sigma_d^-1).
// Repeating with d' = d o sigma_d gives a chain of isomorphic crossed
// modules.

#ifndef XMODLAB_DERIVED_HPP_
#define XMODLAB_DERIVED_HPP_

#include <cstddef>  // for size_t
#include <optional> // for optional
#include <string>   // for string
#include <vector>   // for vector

#include "action.hpp"
#include "derivation.hpp"
#include "xmod.hpp"

namespace xmodlab {

  //! A -> A x| B -> B with section b -> (d(b), b). Throws
  //! InvalidDerivation.
  SplitExtension derivation_extension(Derivation const& d);

  //! The general formula; checked against check_derived_action and
  //! against action_from_section(derivation_extension(d)). Throws
  //! InvalidDerivation.
  ActionSet derived_action_general(Derivation const& d);

  //! sigma_d(b).a and sigma_d(b)*a; checked against the general formula.
  //! Throws NotRegular.
  ActionSet derived_action_regular(Derivation const& d);

  //! (A, B, sigma_d^-1 o boundary) with the regular derived action,
  //! validated. Throws NotRegular.
  CrossedModule derived_crossed_module(Derivation const& d);

  //! (1, sigma_d^-1) from d.base to derived_crossed_module(d), validated
  //! as an isomorphism and a covering. Throws NotRegular.
  XModMorphism derived_iso(Derivation const& d);

  //! d o sigma_d as a derivation of derived_crossed_module(d); its theta
  //! and sigma are checked to equal those of d. Throws NotRegular.
  Derivation transport_derivation(Derivation const& d);

  struct ChainStage {
    CrossedModule               xmod;
    Derivation                  derivation;
    std::optional<XModMorphism> link;  // from the previous stage
  };

  struct DerivedChain {
    std::vector<ChainStage> stages;  // stage 0 is the original
    std::size_t             period = 0;
  };

  //! Builds stages 1, 2, ... until a stage has the same boundary and
  //! action tables as stage 0 (the period) or max_stages stages have been
  //! added (period 0). Throws NotRegular, UsageError if max_stages is 0.
  DerivedChain iterate_chain(Derivation const& d, std::size_t max_stages = 64);

  //! 64-bit FNV-1a over the dot and star tables, as 16 hex digits.
  std::string action_digest(ActionSet const& act);

}  // namespace xmodlab

#endif  // XMODLAB_DERIVED_HPP_
