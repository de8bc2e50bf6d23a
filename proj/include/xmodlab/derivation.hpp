// Derivations d: B -> A of a crossed module (A, B, boundary), the
// Whitehead monoid they form and its group of regular elements.
//
// d is a derivation when
//
//     d(b + b1) = d(b) + b.d(b1),
//     d(b * b1) = d(b)*d(b1) + d(b)*b1 + b*d(b1),
//     d(w b)    = w(d b).
//
// Each d induces an endomorphism (theta_d, sigma_d) of the crossed module
// with theta_d(a) = d(boundary a) + a and sigma_d(b) = boundary(d b) + b,
// and d is a homotopy from the identity to it.

#ifndef XMODLAB_DERIVATION_HPP_
#define XMODLAB_DERIVATION_HPP_

#include <cstdint>  // for uint64_t
#include <span>     // for span
#include <vector>   // for vector

#include "core.hpp"
#include "homotopy.hpp"
#include "xmod.hpp"

namespace xmodlab {

  struct Derivation {
    CrossedModule     base;
    std::vector<Elem> d;  // B -> A

    Elem operator()(Elem b) const {
      return d[b];
    }
  };

  //! Condition ids Der-i, Der-ii (per binary op), Der-iii (per unary op).
  //! Throws DimensionMismatch or IndexOutOfRange for a malformed table.
  ValidationReport check_derivation(CrossedModule const&  base,
                                    std::span<Elem const> d);

  //! theta_d: a -> d(boundary a) + a, as a table on A.
  std::vector<Elem> module_endomorphism(Derivation const& d);

  //! sigma_d: b -> boundary(d b) + b, as a table on B.
  std::vector<Elem> base_endomorphism(Derivation const& d);

  //! (theta_d, sigma_d), validated, with theta_d o d = d o sigma_d
  //! asserted. Throws InvalidDerivation unless d is a derivation.
  XModMorphism endomorphism_of(Derivation const& d);

  //! d as a homotopy from the identity to endomorphism_of(d).
  XModHomotopy as_homotopy(Derivation const& d);

  //! All derivations of base, sorted by table; the zero derivation comes
  //! first. Values are chosen on a generating set of B and propagated with
  //! the first law. Throws BudgetExceeded if |A|^(#generators) > budget.
  std::vector<Derivation> enumerate_derivations(CrossedModule const& base,
                                                std::uint64_t        budget
                                                = kDefaultBudget);

  //! (d1 wcomp d2)(b) = d1(sigma_d2 b) + d2(b), checked against
  //! theta_d1(d2 b) + d1(b). Throws BaseMismatch.
  Derivation whitehead_compose(Derivation const& d1, Derivation const& d2);

  struct Regularity {
    bool              regular = false;
    std::vector<Elem> inverse;  // the inverse derivation when regular
    std::vector<Elem> witness;  // a, a1 with theta(a) = theta(a1) otherwise
  };

  //! Decides regularity by bijectivity of theta_d and cross-checks it with
  //! bijectivity of sigma_d and with the existence of an inverse in monoid,
  //! which must list every derivation of d's base. Disagreement throws
  //! InternalInconsistency.
  Regularity is_regular(Derivation const& d, std::span<Derivation const> monoid);

  //! As above, enumerating the monoid first.
  Regularity is_regular(Derivation const& d,
                        std::uint64_t     budget = kDefaultBudget);

  //! e(b) = theta_d^-1(-d(b)), checked against -d(sigma_d^-1(b)) and
  //! against d wcomp e = e wcomp d = 0. Throws NotRegular.
  Derivation invert_derivation(Derivation const& d);

  struct WhiteheadGroup {
    std::vector<Derivation> elements;  // regular derivations, sorted
    Table                   cayley;    // index of elements[i] wcomp elements[j]
    AlgebraPtr              group;     // the Cayley table as an algebra
  };

  //! Regular derivations under Whitehead composition; the zero derivation
  //! is element 0. The Cayley table is validated as a group.
  WhiteheadGroup whitehead_group(CrossedModule const& base,
                                 std::uint64_t        budget = kDefaultBudget);

  //! d(b) lies in the kernel of the boundary for every b.
  bool image_in_kernel(Derivation const& d);

  bool is_zero(Derivation const& d);

}  // namespace xmodlab

#endif  // XMODLAB_DERIVATION_HPP_
