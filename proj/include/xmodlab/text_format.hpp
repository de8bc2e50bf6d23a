// Plain-text files holding algebras, actions, crossed modules, morphisms of
// crossed modules, internal groupoids, homotopies and derivations.
//
// A file is a sequence of blocks, each opened by a header line
// "<kind> <name>". Blank lines and everything after '#' are ignored. Names
// used inside a block refer to earlier blocks of the same file, or else to
// catalog entries. A table row is written on the line after its keyword
// (or on the keyword line itself).
//
//     algebra Z2-zero-ring        action <name>       xmod <name>
//     order 2                     actor <algebra>     A <algebra>
//     binops 1                    acted <algebra>     B <algebra>
//     mul mul                     dot                 alpha
//     unops 0                     <|B| rows>          <row>
//     add                         <op>                action <action>
//     0 1                         <|B| rows> ...
//     1 0                                             groupoid <name>
//     neg                         xmorphism <name>    C1 <algebra>
//     0 1                         source <xmod>       C0 <algebra>
//     mul                         target <xmod>       d0 / d1 / eps
//     0 0                         f1 / f0             <row each>
//     0 0                         <row each>
//
//     homotopy <name>             derivation <name>
//     from <xmorphism>            xmod <xmod>
//     to <xmorphism>              d
//     d                           <row>
//     <row>

#ifndef XMODLAB_TEXT_FORMAT_HPP_
#define XMODLAB_TEXT_FORMAT_HPP_

#include <map>          // for map
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "action.hpp"
#include "algebra.hpp"
#include "derivation.hpp"
#include "groupoid.hpp"
#include "homotopy.hpp"
#include "xmod.hpp"

namespace xmodlab {

  struct Document {
    std::map<std::string, AlgebraPtr>       algebras;
    std::map<std::string, ActionSet>        actions;
    std::map<std::string, CrossedModule>    xmods;
    std::map<std::string, XModMorphism>     morphisms;
    std::map<std::string, InternalGroupoid> groupoids;
    std::map<std::string, XModHomotopy>     homotopies;
    std::map<std::string, Derivation>       derivations;
    //! (kind, name) of each block in file order.
    std::vector<std::pair<std::string, std::string>> blocks;

    //! Name of the last block of the given kind; throws UsageError if there
    //! is none.
    std::string const& last(std::string_view kind) const;
  };

  //! Throws ParseError with "<source>:<line>:" for any malformed block,
  //! including table shape and range errors and unresolved names.
  Document parse_document(std::string_view text,
                          std::string_view source = "<input>");

  //! Throws FileNotFound or ParseError.
  Document parse_file(std::string const& path);

  std::string write_algebra(OmegaAlgebra const& a);

  //! The algebra blocks a piece of data refers to are written first, each
  //! once; same-named algebras with different tables get a numeric suffix.
  class Writer {
   public:
    //! Returns the name under which a is written.
    std::string algebra(AlgebraPtr const& a);
    std::string action(ActionSet const& act, std::string const& name);
    std::string xmod(CrossedModule const& x);
    std::string morphism(XModMorphism const& m, std::string const& name);
    std::string groupoid(InternalGroupoid const& g);
    std::string homotopy(XModHomotopy const& h, std::string const& name);
    std::string derivation(Derivation const& d, std::string const& name);

    std::string const& text() const noexcept {
      return out_;
    }

   private:
    std::string                                   out_;
    std::vector<std::pair<std::string, AlgebraPtr>> algebras_;
    std::vector<std::pair<std::string, CrossedModule>> xmods_;
  };

}  // namespace xmodlab

#endif  // XMODLAB_TEXT_FORMAT_HPP_
