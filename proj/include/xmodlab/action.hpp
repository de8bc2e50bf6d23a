// Actions of one group with operations B on another A: the dot action
// b.a and, for each binary operation *, the product b*a (landing in A).
// The product a*b is not stored; it is b *° a read from the table of the
// opposite operation.
//
// A set of actions is "derived" when it comes from a split extension
// 0 -> A -> E -> B -> 0 via b.a = s(b)+a-s(b) and b*a = s(b)*a. The
// twelve numbered conditions checked by check_derived_action are reported
// as D1..D12; semidirect_product gives the independent route (the
// semidirect product is an object of the category exactly when the action
// is derived).

#ifndef XMODLAB_ACTION_HPP_
#define XMODLAB_ACTION_HPP_

#include <vector>  // for vector

#include "algebra.hpp"
#include "core.hpp"

namespace xmodlab {

  class ActionSet {
   public:
    //! dot is |B| x |A|; star holds one |B| x |A| table per binary op of
    //! the shared signature. Throws SignatureMismatch, DimensionMismatch or
    //! IndexOutOfRange for malformed input.
    ActionSet(AlgebraPtr actor, AlgebraPtr acted, Table dot,
              std::vector<Table> star = {});

    AlgebraPtr const& actor() const noexcept {
      return actor_;
    }
    AlgebraPtr const& acted() const noexcept {
      return acted_;
    }

    //! b.a
    Elem dot(Elem b, Elem a) const {
      return dot_(b, a);
    }
    //! b * a for binary op k
    Elem left(std::size_t k, Elem b, Elem a) const {
      return star_[k](b, a);
    }
    //! a * b for binary op k, defined as b *° a
    Elem right(std::size_t k, Elem a, Elem b) const {
      return star_[actor_->signature().opposite(k)](b, a);
    }

    Table const& dot_table() const noexcept {
      return dot_;
    }
    Table const& star_table(std::size_t k) const {
      return star_[k];
    }
    std::vector<Table> const& star_tables() const noexcept {
      return star_;
    }

   private:
    AlgebraPtr         actor_;
    AlgebraPtr         acted_;
    Table              dot_;
    std::vector<Table> star_;
  };

  //! Same tables over structurally equal algebras.
  bool operator==(ActionSet const& x, ActionSet const& y);

  //! b.a = a and b*a = 0.
  ActionSet trivial_action(AlgebraPtr actor, AlgebraPtr acted);

  //! A acting on itself: a.a1 = a+a1-a, stars are A's own products.
  ActionSet conjugation_action(AlgebraPtr a);

  //! Conditions D1..D12, plus actor:/acted: prefixed algebra violations.
  //! D12 is checked under a decidable reading of "whenever each side has a
  //! sense", recorded in the report notes as interpretation I-12.
  ValidationReport check_derived_action(ActionSet const& act);

  struct SemidirectProduct {
    AlgebraPtr       algebra;  // carrier coded by PairCoding{|A|, |B|}
    ValidationReport report;   // validate_algebra of the product
  };

  //! (a,b)+(a1,b1) = (a+b.a1, b+b1),
  //! (a,b)*(a1,b1) = (a*a1 + a*b1 + b*a1, b*b1),
  //! w(a,b) = (w(a), w(b)), with -(a,b) = ((-b).(-a), -b).
  //! Accepts invalid actions; the report then says why the result fails.
  SemidirectProduct semidirect_product(ActionSet const& act);

  struct SplitExtension {
    AlgebraPtr  kernel;     // A
    AlgebraPtr  total;      // E
    AlgebraPtr  base;       // B
    AlgMorphism inclusion;  // A -> E
    AlgMorphism projection; // E -> B
    AlgMorphism section;    // B -> E
  };

  //! The three maps are morphisms, projection is onto, projection after
  //! section is the identity, and inclusion is injective with image the
  //! kernel of projection. Condition ids: section, surjective, kernel,
  //! plus prefixed morphism violations.
  ValidationReport check_split_extension(SplitExtension const& ext);

  //! A -> A x| B -> B with i(a) = (a,0), p(a,b) = b, s(b) = (0,b).
  //! Throws InvalidAction if the semidirect product is not valid.
  SplitExtension canonical_extension(ActionSet const& act);

  //! b.a = s(b)+a-s(b) and b*a = s(b)*a, pulled back along the inclusion.
  //! Throws NotASection or NotKernel when the extension is malformed.
  ActionSet action_from_section(SplitExtension const& ext);

}  // namespace xmodlab

#endif  // XMODLAB_ACTION_HPP_
