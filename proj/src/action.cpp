#include "xmodlab/action.hpp"

#include <optional>  // for optional

#include <limits>  // for numeric_limits

namespace xmodlab {

  namespace {

    constexpr Elem kUnset = std::numeric_limits<Elem>::max();

    enum class Factor { A, B };

    // A product kind x*y with the carriers x and y are drawn from; all
    // three kinds land in A.
    struct ProductKind {
      Factor      left;
      Factor      right;
      char const* label;
    };

    constexpr ProductKind kAValued[] = {{Factor::A, Factor::A, "AA"},
                                        {Factor::A, Factor::B, "AB"},
                                        {Factor::B, Factor::A, "BA"}};

    char const* const kNoteI12
        = "I-12: D12 checked as x*y + z*t = z*t + x*y for a single binary "
          "op, over all x,y,z,t whose products land in the same algebra "
          "(A-valued kinds a*a1, a*b, b*a pairwise; B-valued b*b1)";

  }  // namespace

  ActionSet::ActionSet(AlgebraPtr         actor,
                       AlgebraPtr         acted,
                       Table              dot,
                       std::vector<Table> star)
      : actor_(std::move(actor)),
        acted_(std::move(acted)),
        dot_(std::move(dot)),
        star_(std::move(star)) {
    if (actor_->signature() != acted_->signature()) {
      throw Error(ErrorCode::SignatureMismatch,
                  "action of '" + actor_->name() + "' on '" + acted_->name()
                      + "': signatures differ");
    }
    std::size_t const nb = actor_->order(), na = acted_->order();
    if (dot_.rows() != nb || dot_.cols() != na) {
      throw Error(ErrorCode::DimensionMismatch,
                  "dot table must be " + std::to_string(nb) + "x"
                      + std::to_string(na));
    }
    dot_.check_range(na, "dot");
    if (star_.size() != actor_->signature().num_binary()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "expected one star table per binary operation");
    }
    for (std::size_t k = 0; k < star_.size(); ++k) {
      auto const& name = actor_->signature().binary_name(k);
      if (star_[k].rows() != nb || star_[k].cols() != na) {
        throw Error(ErrorCode::DimensionMismatch,
                    "star table '" + name + "' has wrong shape");
      }
      star_[k].check_range(na, name);
    }
  }

  bool operator==(ActionSet const& x, ActionSet const& y) {
    return same_structure(x.actor(), y.actor())
           && same_structure(x.acted(), y.acted())
           && x.dot_table() == y.dot_table()
           && x.star_tables() == y.star_tables();
  }

  ActionSet trivial_action(AlgebraPtr actor, AlgebraPtr acted) {
    std::size_t const nb = actor->order(), na = acted->order();
    Table             dot(nb, na);
    for (Elem b = 0; b < nb; ++b) {
      for (Elem a = 0; a < na; ++a) {
        dot(b, a) = a;
      }
    }
    std::vector<Table> star(actor->signature().num_binary(), Table(nb, na));
    return ActionSet(std::move(actor), std::move(acted), std::move(dot),
                     std::move(star));
  }

  ActionSet conjugation_action(AlgebraPtr a) {
    std::size_t const n = a->order();
    Table             dot(n, n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        dot(x, y) = a->sub(a->add(x, y), x);
      }
    }
    std::vector<Table> star;
    for (std::size_t k = 0; k < a->signature().num_binary(); ++k) {
      star.push_back(a->binary_table(k));
    }
    return ActionSet(a, a, std::move(dot), std::move(star));
  }

  ValidationReport check_derived_action(ActionSet const& act) {
    ValidationReport r;
    auto const&      A   = *act.acted();
    auto const&      B   = *act.actor();
    auto const&      sig = A.signature();
    std::size_t const na = A.order(), nb = B.order();

    r.merge(validate_algebra(B), "actor");
    r.merge(validate_algebra(A), "acted");

    r.expect<1>("D1", "", {na}, [&](auto const& t) {
      return act.dot(0, t[0]) == t[0];
    });
    r.expect<3>("D2", "", {nb, na, na}, [&](auto const& t) {
      auto [b, a1, a2] = t;
      return act.dot(b, A.add(a1, a2))
             == A.add(act.dot(b, a1), act.dot(b, a2));
    });
    r.expect<3>("D3", "", {nb, nb, na}, [&](auto const& t) {
      auto [b1, b2, a] = t;
      return act.dot(B.add(b1, b2), a) == act.dot(b1, act.dot(b2, a));
    });

    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      auto const& op = sig.binary_name(k);
      r.expect<3>("D4", op, {nb, na, na}, [&](auto const& t) {
        auto [b, a1, a2] = t;
        return act.left(k, b, A.add(a1, a2))
               == A.add(act.left(k, b, a1), act.left(k, b, a2));
      });
      r.expect<3>("D5", op, {nb, nb, na}, [&](auto const& t) {
        auto [b1, b2, a] = t;
        return act.left(k, B.add(b1, b2), a)
               == A.add(act.left(k, b1, a), act.left(k, b2, a));
      });
      r.expect<4>("D6", op, {nb, nb, na, na}, [&](auto const& t) {
        auto [b1, b2, a1, a2] = t;
        Elem p = A.op(k, a1, a2);
        return act.dot(B.op(k, b1, b2), p) == p;
      });
      r.expect<4>("D7", op, {nb, nb, na, nb}, [&](auto const& t) {
        auto [b1, b2, a, b] = t;
        Elem p = act.right(k, a, b);
        return act.dot(B.op(k, b1, b2), p) == p;
      });
      r.expect<3>("D8", op, {na, nb, na}, [&](auto const& t) {
        auto [a1, b, a2] = t;
        return A.op(k, a1, act.dot(b, a2)) == A.op(k, a1, a2);
      });
      r.expect<3>("D9", op, {nb, nb, na}, [&](auto const& t) {
        auto [b, b1, a] = t;
        return act.left(k, b, act.dot(b1, a)) == act.left(k, b, a);
      });
    }

    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      auto const& name = sig.unary_name(u);
      r.expect<2>("D10", name, {nb, na}, [&](auto const& t) {
        auto [b, a] = t;
        return A.unop(u, act.dot(b, a))
               == act.dot(B.unop(u, b), A.unop(u, a));
      });
      for (std::size_t k = 0; k < sig.num_binary(); ++k) {
        r.expect<2>("D11",
                    name + "/" + sig.binary_name(k),
                    {na, nb},
                    [&](auto const& t) {
                      auto [a, b] = t;
                      Elem lhs = A.unop(u, act.right(k, a, b));
                      return lhs == act.right(k, A.unop(u, a), b)
                             && lhs == act.right(k, a, B.unop(u, b));
                    });
      }
    }

    if (sig.num_binary() > 0) {
      r.note(kNoteI12);
    }
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      auto const& op      = sig.binary_name(k);
      auto        product = [&](ProductKind const& kind, Elem x, Elem y) {
        if (kind.left == Factor::A && kind.right == Factor::A) {
          return A.op(k, x, y);
        }
        if (kind.left == Factor::A) {
          return act.right(k, x, y);
        }
        return act.left(k, x, y);
      };
      auto extent = [&](Factor f) { return f == Factor::A ? na : nb; };
      for (auto const& p : kAValued) {
        for (auto const& q : kAValued) {
          r.expect<4>("D12",
                      op,
                      {extent(p.left), extent(p.right), extent(q.left),
                       extent(q.right)},
                      [&](auto const& t) {
                        auto [x, y, z, w] = t;
                        Elem xy = product(p, x, y), zw = product(q, z, w);
                        return A.add(xy, zw) == A.add(zw, xy);
                      },
                      std::string("kinds ") + p.label + "/" + q.label);
        }
      }
      r.expect<4>("D12",
                  op,
                  {nb, nb, nb, nb},
                  [&](auto const& t) {
                    auto [x, y, z, w] = t;
                    Elem xy = B.op(k, x, y), zw = B.op(k, z, w);
                    return B.add(xy, zw) == B.add(zw, xy);
                  },
                  "kinds BB/BB");
    }
    return r;
  }

  SemidirectProduct semidirect_product(ActionSet const& act) {
    auto const&       A   = *act.acted();
    auto const&       B   = *act.actor();
    auto const&       sig = A.signature();
    PairCoding const  pc{A.order(), B.order()};
    std::size_t const n = pc.size();

    Table add(n, n);
    for (Elem p = 0; p < n; ++p) {
      for (Elem q = 0; q < n; ++q) {
        Elem a = pc.first(p), b = pc.second(p);
        Elem a1 = pc.first(q), b1 = pc.second(q);
        add(p, q) = pc.encode(A.add(a, act.dot(b, a1)), B.add(b, b1));
      }
    }
    std::vector<Elem> neg(n);
    for (Elem p = 0; p < n; ++p) {
      Elem a = pc.first(p), b = pc.second(p);
      neg[p] = pc.encode(act.dot(B.neg(b), A.neg(a)), B.neg(b));
    }
    std::vector<Table> binary;
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      Table t(n, n);
      for (Elem p = 0; p < n; ++p) {
        for (Elem q = 0; q < n; ++q) {
          Elem a = pc.first(p), b = pc.second(p);
          Elem a1 = pc.first(q), b1 = pc.second(q);
          Elem first = A.add(A.add(A.op(k, a, a1), act.right(k, a, b1)),
                             act.left(k, b, a1));
          t(p, q) = pc.encode(first, B.op(k, b, b1));
        }
      }
      binary.push_back(std::move(t));
    }
    std::vector<std::vector<Elem>> unary;
    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      std::vector<Elem> t(n);
      for (Elem p = 0; p < n; ++p) {
        t[p] = pc.encode(A.unop(u, pc.first(p)), B.unop(u, pc.second(p)));
      }
      unary.push_back(std::move(t));
    }
    // The constructor would move a displaced identity to index 0, which
    // breaks the pair coding; report it against the raw table instead.
    std::optional<Elem> displaced;
    for (Elem x = 0; x < n && !displaced; ++x) {
      if (add(0, x) != x || add(x, 0) != x) {
        displaced = x;
      }
    }
    auto product = make_algebra(A.name() + "x|" + B.name(),
                                sig,
                                std::move(add),
                                std::move(neg),
                                std::move(binary),
                                std::move(unary));
    auto report = validate_algebra(*product);
    if (displaced) {
      report.add({"zero-identity", "", {*displaced},
                  "(0,0) is not the identity of the product"});
    }
    return {std::move(product), std::move(report)};
  }

  ValidationReport check_split_extension(SplitExtension const& ext) {
    ValidationReport r;
    r.merge(check_morphism(ext.inclusion), "inclusion");
    r.merge(check_morphism(ext.projection), "projection");
    r.merge(check_morphism(ext.section), "section-map");
    std::size_t const nb = ext.base->order(), ne = ext.total->order(),
                      na = ext.kernel->order();
    r.expect<1>("section", "", {nb}, [&](auto const& t) {
      return ext.projection(ext.section(t[0])) == t[0];
    });
    std::vector<bool> hit(nb, false);
    for (Elem e = 0; e < ne; ++e) {
      hit[ext.projection(e)] = true;
    }
    r.expect<1>("surjective", "", {nb}, [&](auto const& t) {
      return hit[t[0]];
    });
    std::vector<Elem> preimage(ne, kUnset);
    bool              injective = true;
    for (Elem a = 0; a < na; ++a) {
      if (preimage[ext.inclusion(a)] != kUnset) {
        injective = false;
      }
      preimage[ext.inclusion(a)] = a;
    }
    if (!injective) {
      r.add({"kernel", "", {}, "inclusion is not injective"});
    }
    r.expect<1>("kernel", "", {ne}, [&](auto const& t) {
      return (ext.projection(t[0]) == 0) == (preimage[t[0]] != kUnset);
    });
    return r;
  }

  SplitExtension canonical_extension(ActionSet const& act) {
    auto sp = semidirect_product(act);
    if (!sp.report.valid()) {
      throw Error(ErrorCode::InvalidAction,
                  "semidirect product is not valid:\n" + sp.report.summary());
    }
    auto const&      A = act.acted();
    auto const&      B = act.actor();
    PairCoding const pc{A->order(), B->order()};
    std::vector<Elem> i(A->order()), p(pc.size()), s(B->order());
    for (Elem a = 0; a < A->order(); ++a) {
      i[a] = pc.encode(a, 0);
    }
    for (Elem x = 0; x < pc.size(); ++x) {
      p[x] = pc.second(x);
    }
    for (Elem b = 0; b < B->order(); ++b) {
      s[b] = pc.encode(0, b);
    }
    auto E = sp.algebra;
    return {A,
            E,
            B,
            AlgMorphism{A, E, std::move(i)},
            AlgMorphism{E, B, std::move(p)},
            AlgMorphism{B, E, std::move(s)}};
  }

  ActionSet action_from_section(SplitExtension const& ext) {
    auto const&       E  = *ext.total;
    std::size_t const na = ext.kernel->order(), nb = ext.base->order();
    for (Elem b = 0; b < nb; ++b) {
      if (ext.projection(ext.section(b)) != b) {
        throw Error(ErrorCode::NotASection,
                    "projection(section(" + std::to_string(b)
                        + ")) = " + std::to_string(ext.projection(ext.section(b))));
      }
    }
    std::vector<Elem> preimage(E.order(), kUnset);
    for (Elem a = 0; a < na; ++a) {
      if (preimage[ext.inclusion(a)] != kUnset) {
        throw Error(ErrorCode::NotKernel, "inclusion is not injective");
      }
      preimage[ext.inclusion(a)] = a;
    }
    for (Elem e = 0; e < E.order(); ++e) {
      if ((ext.projection(e) == 0) != (preimage[e] != kUnset)) {
        throw Error(ErrorCode::NotKernel,
                    "image of inclusion differs from kernel of projection at "
                        + std::to_string(e));
      }
    }
    auto pull = [&](Elem e) {
      if (preimage[e] == kUnset) {
        throw Error(ErrorCode::NotKernel,
                    "derived action leaves the kernel at "
                        + std::to_string(e));
      }
      return preimage[e];
    };
    Table dot(nb, na);
    for (Elem b = 0; b < nb; ++b) {
      Elem sb = ext.section(b);
      for (Elem a = 0; a < na; ++a) {
        dot(b, a) = pull(E.sub(E.add(sb, ext.inclusion(a)), sb));
      }
    }
    std::vector<Table> star;
    for (std::size_t k = 0; k < E.signature().num_binary(); ++k) {
      Table t(nb, na);
      for (Elem b = 0; b < nb; ++b) {
        for (Elem a = 0; a < na; ++a) {
          t(b, a) = pull(E.op(k, ext.section(b), ext.inclusion(a)));
        }
      }
      star.push_back(std::move(t));
    }
    return ActionSet(ext.base, ext.kernel, std::move(dot), std::move(star));
  }

}  // namespace xmodlab
