// Finite groups with operations: a (not necessarily abelian) group written
// additively, together with extra binary operations that distribute over +
// on the left and extra unary operations compatible with + and with every
// binary operation. Each binary operation * is paired with its opposite *°
// (a *° b = b * a), possibly itself.

#ifndef XMODLAB_ALGEBRA_HPP_
#define XMODLAB_ALGEBRA_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "core.hpp"

namespace xmodlab {

  class Signature {
   public:
    //! The plain group signature: no extra operations.
    Signature() = default;

    //! opposite[k] is the index of the opposite of binary op k. Throws
    //! InvalidSignature unless opposite is an involution and the names are
    //! unique and distinct from "+", "-" and "0".
    Signature(std::vector<std::string> binary_ops,
              std::vector<std::size_t> opposite,
              std::vector<std::string> unary_ops);

    //! Builds a signature from (name, opposite-name) pairs.
    static Signature
    from_pairs(std::vector<std::pair<std::string, std::string>> const& binary,
               std::vector<std::string> unary = {});

    std::size_t num_binary() const noexcept {
      return binary_.size();
    }
    std::size_t num_unary() const noexcept {
      return unary_.size();
    }
    std::string const& binary_name(std::size_t k) const {
      return binary_[k];
    }
    std::string const& unary_name(std::size_t k) const {
      return unary_[k];
    }
    std::size_t opposite(std::size_t k) const {
      return opposite_[k];
    }
    std::vector<std::string> const& binary_names() const noexcept {
      return binary_;
    }
    std::vector<std::string> const& unary_names() const noexcept {
      return unary_;
    }
    std::optional<std::size_t> find_binary(std::string const& name) const;

    friend bool operator==(Signature const&, Signature const&) = default;

   private:
    std::vector<std::string> binary_;
    std::vector<std::size_t> opposite_;
    std::vector<std::string> unary_;
  };

  class OmegaAlgebra {
   public:
    //! Checks dimensions and index ranges (DimensionMismatch,
    //! IndexOutOfRange) but not the axioms; see validate_algebra. If the
    //! addition table has a two-sided identity that is not element 0, the
    //! carrier is renumbered so that it is.
    OmegaAlgebra(std::string                    name,
                 Signature                      signature,
                 Table                          add,
                 std::vector<Elem>              neg,
                 std::vector<Table>             binary = {},
                 std::vector<std::vector<Elem>> unary  = {});

    std::string const& name() const noexcept {
      return name_;
    }
    Signature const& signature() const noexcept {
      return signature_;
    }
    std::size_t order() const noexcept {
      return neg_.size();
    }

    Elem add(Elem a, Elem b) const {
      return add_(a, b);
    }
    Elem neg(Elem a) const {
      return neg_[a];
    }
    //! a - b, that is a + (-b).
    Elem sub(Elem a, Elem b) const {
      return add_(a, neg_[b]);
    }
    Elem op(std::size_t k, Elem a, Elem b) const {
      return binary_[k](a, b);
    }
    Elem unop(std::size_t k, Elem a) const {
      return unary_[k][a];
    }

    Table const& add_table() const noexcept {
      return add_;
    }
    std::vector<Elem> const& neg_table() const noexcept {
      return neg_;
    }
    Table const& binary_table(std::size_t k) const {
      return binary_[k];
    }
    std::vector<Elem> const& unary_table(std::size_t k) const {
      return unary_[k];
    }

    OmegaAlgebra renamed(std::string name) const;

   private:
    std::string                    name_;
    Signature                      signature_;
    Table                          add_;
    std::vector<Elem>              neg_;
    std::vector<Table>             binary_;
    std::vector<std::vector<Elem>> unary_;
  };

  using AlgebraPtr = std::shared_ptr<OmegaAlgebra const>;

  template <typename... Args>
  AlgebraPtr make_algebra(Args&&... args) {
    return std::make_shared<OmegaAlgebra const>(std::forward<Args>(args)...);
  }

  //! Equality of tables and signatures, ignoring names.
  bool same_structure(OmegaAlgebra const& x, OmegaAlgebra const& y);
  bool same_structure(AlgebraPtr const& x, AlgebraPtr const& y);

  //! Group laws, left distributivity, opposite pairing and the unary-op
  //! identities. Condition ids: zero-identity, inverse, associativity,
  //! distributivity, opposite, unary-additive, unary-binary.
  ValidationReport validate_algebra(OmegaAlgebra const& a);

  struct AlgMorphism {
    AlgebraPtr        source;
    AlgebraPtr        target;
    std::vector<Elem> map;

    Elem operator()(Elem a) const {
      return map[a];
    }
  };

  bool operator==(AlgMorphism const& f, AlgMorphism const& g);

  //! Throws SignatureMismatch, DimensionMismatch or IndexOutOfRange for
  //! malformed input. Condition ids: zero, add, binop, unop.
  ValidationReport check_morphism(std::span<Elem const> map,
                                  OmegaAlgebra const&   source,
                                  OmegaAlgebra const&   target);
  ValidationReport check_morphism(AlgMorphism const& f);

  AlgMorphism identity_morphism(AlgebraPtr a);
  AlgMorphism zero_morphism(AlgebraPtr source, AlgebraPtr target);

  //! g after f. Throws NotComposable unless f.target matches g.source.
  AlgMorphism compose(AlgMorphism const& g, AlgMorphism const& f);

  bool is_bijective(std::span<Elem const> map, std::size_t target_order);
  bool is_bijective(AlgMorphism const& f);

  //! Inverse of a bijective map; nullopt otherwise.
  std::optional<std::vector<Elem>> inverse_map(std::span<Elem const> map);

  //! Greedy additive generating set: scans elements in index order and
  //! keeps each one not already in the subgroup generated so far.
  std::vector<Elem> generating_set(OmegaAlgebra const& a);

  //! Subgroup generated (under +) by the given elements, sorted.
  std::vector<Elem> generated_subgroup(OmegaAlgebra const&     a,
                                       std::span<Elem const> gens);

  //! All morphisms A -> B, sorted lexicographically by map table. Images of
  //! a generating set are chosen by backtracking and propagated along the
  //! Cayley graph; every completed map is confirmed with check_morphism.
  //! Throws BudgetExceeded if |B|^(#generators) exceeds budget.
  std::vector<AlgMorphism> enumerate_morphisms(AlgebraPtr const& source,
                                               AlgebraPtr const& target,
                                               std::uint64_t budget
                                               = kDefaultBudget);

  //! Bijective endomorphisms, sorted; closure under composition and
  //! inverses is verified (InternalInconsistency otherwise).
  std::vector<AlgMorphism> automorphism_group(AlgebraPtr const& a,
                                              std::uint64_t     budget
                                              = kDefaultBudget);

  bool isomorphic(AlgebraPtr const& x,
                  AlgebraPtr const& y,
                  std::uint64_t     budget = kDefaultBudget);

  struct Subalgebra {
    AlgebraPtr  algebra;
    AlgMorphism inclusion;  // subalgebra -> ambient
  };

  //! Induced structure on a subset containing 0. Elements are renumbered in
  //! increasing order. Throws InvalidMorphism if the subset is not closed.
  Subalgebra subalgebra(AlgebraPtr const& ambient,
                        std::vector<Elem> elements,
                        std::string       name);

  //! Preimage of 0 with its inclusion.
  Subalgebra kernel_of(AlgMorphism const& f);

  //! Index of the pair (a, b) in a product carrier A x B.
  struct PairCoding {
    std::size_t first_order;
    std::size_t second_order;

    Elem encode(Elem a, Elem b) const {
      return static_cast<Elem>(a * second_order + b);
    }
    Elem first(Elem x) const {
      return static_cast<Elem>(x / second_order);
    }
    Elem second(Elem x) const {
      return static_cast<Elem>(x % second_order);
    }
    std::size_t size() const {
      return first_order * second_order;
    }
  };

  //! Componentwise product; carrier coded by PairCoding{|x|, |y|}.
  AlgebraPtr direct_product(OmegaAlgebra const& x,
                            OmegaAlgebra const& y,
                            std::string         name = {});

  //! Builds the group-signature algebra with the given addition table,
  //! computing negatives from it. An element without a two-sided inverse
  //! gets the identity as its negative, which validate_algebra reports.
  AlgebraPtr group_from_table(std::string name, Table add);

}  // namespace xmodlab

#endif  // XMODLAB_ALGEBRA_HPP_
