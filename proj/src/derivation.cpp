#include "xmodlab/derivation.hpp"

#include <algorithm>  // for all_of, sort
#include <deque>      // for deque
#include <limits>     // for numeric_limits
#include <map>        // for map
#include <string>     // for string, to_string

namespace xmodlab {

  namespace {

    constexpr Elem kUnset = std::numeric_limits<Elem>::max();

    void require_valid(Derivation const& d) {
      auto r = check_derivation(d.base, d.d);
      if (!r.valid()) {
        throw Error(ErrorCode::InvalidDerivation,
                    "not a derivation of '" + d.base.name() + "':\n"
                        + r.summary());
      }
    }

    void require_same_base(Derivation const& d1, Derivation const& d2) {
      if (!same_structure(d1.base, d2.base)) {
        throw Error(ErrorCode::BaseMismatch,
                    "derivations of '" + d1.base.name() + "' and '"
                        + d2.base.name() + "'");
      }
    }

    bool all_zero(std::span<Elem const> d) {
      return std::all_of(d.begin(), d.end(), [](Elem x) { return x == 0; });
    }

    // Raw Whitehead product of two tables over the same base.
    std::vector<Elem> wcomp(Derivation const& d1, Derivation const& d2) {
      auto const&       A      = *d1.base.module();
      auto const        sigma2 = base_endomorphism(d2);
      std::vector<Elem> out(d1.d.size());
      for (Elem b = 0; b < out.size(); ++b) {
        out[b] = A.add(d1(sigma2[b]), d2(b));
      }
      return out;
    }

  }  // namespace

  ValidationReport check_derivation(CrossedModule const&  base,
                                    std::span<Elem const> d) {
    auto const&       A   = *base.module();
    auto const&       B   = *base.base();
    auto const&       act = base.action();
    std::size_t const nb  = B.order();
    if (d.size() != nb) {
      throw Error(ErrorCode::DimensionMismatch,
                  "derivation table has " + std::to_string(d.size())
                      + " entries, expected " + std::to_string(nb));
    }
    check_range(std::vector<Elem>(d.begin(), d.end()), A.order(), "derivation");

    ValidationReport r;
    r.expect<2>("Der-i", "", {nb, nb}, [&](auto const& t) {
      auto [b, b1] = t;
      return d[B.add(b, b1)] == A.add(d[b], act.dot(b, d[b1]));
    });
    auto const& sig = B.signature();
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      r.expect<2>("Der-ii", sig.binary_name(k), {nb, nb}, [&](auto const& t) {
        auto [b, b1] = t;
        Elem rhs = A.add(A.add(A.op(k, d[b], d[b1]), act.right(k, d[b], b1)),
                         act.left(k, b, d[b1]));
        return d[B.op(k, b, b1)] == rhs;
      });
    }
    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      r.expect<1>("Der-iii", sig.unary_name(u), {nb}, [&](auto const& t) {
        return d[B.unop(u, t[0])] == A.unop(u, d[t[0]]);
      });
    }
    return r;
  }

  std::vector<Elem> module_endomorphism(Derivation const& d) {
    auto const&       A  = *d.base.module();
    auto const&       bd = d.base.boundary();
    std::vector<Elem> theta(A.order());
    for (Elem a = 0; a < theta.size(); ++a) {
      theta[a] = A.add(d(bd(a)), a);
    }
    return theta;
  }

  std::vector<Elem> base_endomorphism(Derivation const& d) {
    auto const&       B  = *d.base.base();
    auto const&       bd = d.base.boundary();
    std::vector<Elem> sigma(B.order());
    for (Elem b = 0; b < sigma.size(); ++b) {
      sigma[b] = B.add(bd(d(b)), b);
    }
    return sigma;
  }

  XModMorphism endomorphism_of(Derivation const& d) {
    require_valid(d);
    auto const&  x = d.base;
    XModMorphism m{x,
                   x,
                   AlgMorphism{x.module(), x.module(), module_endomorphism(d)},
                   AlgMorphism{x.base(), x.base(), base_endomorphism(d)}};
    auto r = check_xmod_morphism(m);
    if (!r.valid()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "(theta, sigma) is not a morphism:\n" + r.summary());
    }
    for (Elem b = 0; b < d.d.size(); ++b) {
      if (m.top(d(b)) != d(m.bottom(b))) {
        throw Error(ErrorCode::InternalInconsistency,
                    "theta o d differs from d o sigma at "
                        + std::to_string(b));
      }
    }
    return m;
  }

  XModHomotopy as_homotopy(Derivation const& d) {
    return {identity_xmod_morphism(d.base), endomorphism_of(d), d.d};
  }

  std::vector<Derivation> enumerate_derivations(CrossedModule const& base,
                                                std::uint64_t        budget) {
    auto const&       A    = *base.module();
    auto const&       B    = *base.base();
    auto const&       act  = base.action();
    auto const        gens = generating_set(B);
    std::size_t const na = A.order(), nb = B.order();

    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (candidates > budget / na) {
        throw Error(ErrorCode::BudgetExceeded,
                    "derivation search needs " + std::to_string(na) + "^"
                        + std::to_string(gens.size())
                        + " candidates, budget is " + std::to_string(budget));
      }
      candidates *= na;
    }

    std::vector<Derivation> out;
    std::vector<Elem>       values(gens.size(), 0);
    for (;;) {
      std::vector<Elem> d(nb, kUnset);
      d[0]                = 0;
      bool             ok = true;
      std::deque<Elem> queue{0};
      while (ok && !queue.empty()) {
        Elem b = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          Elem next = B.add(b, gens[i]);
          Elem val  = A.add(d[b], act.dot(b, values[i]));
          if (d[next] == kUnset) {
            d[next] = val;
            queue.push_back(next);
          } else if (d[next] != val) {
            ok = false;
            break;
          }
        }
      }
      if (ok && check_derivation(base, d).valid()) {
        out.push_back({base, std::move(d)});
      }
      std::size_t k = gens.size();
      while (k > 0 && ++values[k - 1] == na) {
        values[--k] = 0;
      }
      if (k == 0) {
        break;
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.d < y.d;
    });
    return out;
  }

  Derivation whitehead_compose(Derivation const& d1, Derivation const& d2) {
    require_same_base(d1, d2);
    require_valid(d1);
    require_valid(d2);
    auto const& A      = *d1.base.module();
    auto        result = wcomp(d1, d2);
    auto const  theta1 = module_endomorphism(d1);
    for (Elem b = 0; b < result.size(); ++b) {
      if (result[b] != A.add(theta1[d2(b)], d1(b))) {
        throw Error(ErrorCode::InternalInconsistency,
                    "the two forms of the Whitehead product differ at "
                        + std::to_string(b));
      }
    }
    Derivation out{d1.base, std::move(result)};
    auto       r = check_derivation(out.base, out.d);
    if (!r.valid()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "Whitehead product is not a derivation:\n" + r.summary());
    }
    return out;
  }

  Regularity is_regular(Derivation const&           d,
                        std::span<Derivation const> monoid) {
    require_valid(d);
    auto const theta = module_endomorphism(d);
    auto const sigma = base_endomorphism(d);
    bool const by_theta = is_bijective(theta, theta.size());
    bool const by_sigma = is_bijective(sigma, sigma.size());

    Derivation const* inverse = nullptr;
    for (auto const& e : monoid) {
      require_same_base(d, e);
      if (all_zero(wcomp(d, e)) && all_zero(wcomp(e, d))) {
        inverse = &e;
        break;
      }
    }
    bool const by_monoid = inverse != nullptr;
    if (by_theta != by_sigma || by_theta != by_monoid) {
      throw Error(ErrorCode::InternalInconsistency,
                  "regularity criteria disagree for a derivation of '"
                      + d.base.name() + "': theta bijective "
                      + std::to_string(by_theta) + ", sigma bijective "
                      + std::to_string(by_sigma) + ", monoid inverse "
                      + std::to_string(by_monoid));
    }
    Regularity out;
    out.regular = by_theta;
    if (out.regular) {
      out.inverse = inverse->d;
      return out;
    }
    std::vector<Elem> seen(theta.size(), kUnset);
    for (Elem a = 0; a < theta.size(); ++a) {
      if (seen[theta[a]] != kUnset) {
        out.witness = {seen[theta[a]], a};
        break;
      }
      seen[theta[a]] = a;
    }
    return out;
  }

  Regularity is_regular(Derivation const& d, std::uint64_t budget) {
    return is_regular(d, enumerate_derivations(d.base, budget));
  }

  Derivation invert_derivation(Derivation const& d) {
    require_valid(d);
    auto const& A         = *d.base.module();
    auto const  theta_inv = inverse_map(module_endomorphism(d));
    if (!theta_inv) {
      throw Error(ErrorCode::NotRegular,
                  "theta is not bijective for this derivation of '"
                      + d.base.name() + "'");
    }
    auto const sigma_inv = inverse_map(base_endomorphism(d));
    if (!sigma_inv) {
      throw Error(ErrorCode::InternalInconsistency,
                  "theta is bijective but sigma is not");
    }
    std::vector<Elem> e(d.d.size());
    for (Elem b = 0; b < e.size(); ++b) {
      e[b]       = (*theta_inv)[A.neg(d(b))];
      Elem other = A.neg(d((*sigma_inv)[b]));
      if (e[b] != other) {
        throw Error(ErrorCode::InternalInconsistency,
                    "the two inverse formulas differ at " + std::to_string(b));
      }
    }
    Derivation inv{d.base, std::move(e)};
    if (!all_zero(whitehead_compose(d, inv).d)
        || !all_zero(whitehead_compose(inv, d).d)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "inverse does not compose to zero");
    }
    return inv;
  }

  WhiteheadGroup whitehead_group(CrossedModule const& base,
                                 std::uint64_t        budget) {
    auto const all = enumerate_derivations(base, budget);
    WhiteheadGroup g;
    for (auto const& d : all) {
      if (is_regular(d, all).regular) {
        g.elements.push_back(d);
      }
    }
    std::map<std::vector<Elem>, Elem> index;
    for (Elem i = 0; i < g.elements.size(); ++i) {
      index.emplace(g.elements[i].d, i);
    }
    std::size_t const n = g.elements.size();
    g.cayley            = Table(n, n);
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        auto it = index.find(whitehead_compose(g.elements[i], g.elements[j]).d);
        if (it == index.end()) {
          throw Error(ErrorCode::InternalInconsistency,
                      "regular derivations are not closed under composition");
        }
        g.cayley(i, j) = it->second;
      }
    }
    if (n == 0 || !all_zero(g.elements[0].d)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "zero derivation missing from the Whitehead group");
    }
    g.group = group_from_table("whitehead(" + base.name() + ")", g.cayley);
    auto r  = validate_algebra(*g.group);
    if (!r.valid()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "Whitehead group table is not a group:\n" + r.summary());
    }
    return g;
  }

  bool image_in_kernel(Derivation const& d) {
    auto const& bd = d.base.boundary();
    return std::all_of(d.d.begin(), d.d.end(), [&](Elem a) {
      return bd(a) == 0;
    });
  }

  bool is_zero(Derivation const& d) {
    return all_zero(d.d);
  }

}  // namespace xmodlab
