#include "xmodlab/catalog.hpp"

#include <algorithm>  // for sort, find_if
#include <array>      // for array
#include <functional> // for function
#include <map>        // for map
#include <set>        // for set

namespace xmodlab {

  namespace {

    using Perm = std::vector<int>;

    AlgebraPtr with_binary(std::string                              name,
                           AlgebraPtr const&                        group,
                           Signature                                sig,
                           std::vector<std::function<Elem(Elem, Elem)>> ops) {
      std::size_t const  n = group->order();
      std::vector<Table> tables;
      for (auto const& f : ops) {
        Table t(n, n);
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            t(x, y) = f(x, y);
          }
        }
        tables.push_back(std::move(t));
      }
      return make_algebra(std::move(name), std::move(sig), group->add_table(),
                          group->neg_table(), std::move(tables));
    }

    AlgebraPtr product_group(std::string name, std::size_t n,
                             std::function<Elem(Elem, Elem)> const& add) {
      Table t(n, n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          t(x, y) = add(x, y);
        }
      }
      return group_from_table(std::move(name), std::move(t));
    }

    // Closure of the generators under composition, sorted so that the
    // identity permutation comes first; p + q is p after q.
    AlgebraPtr permutation_group(std::string name, std::vector<Perm> gens) {
      std::size_t const degree = gens.front().size();
      Perm              id(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        id[i] = static_cast<int>(i);
      }
      std::set<Perm>    seen{id};
      std::vector<Perm> frontier{id};
      while (!frontier.empty()) {
        std::vector<Perm> next;
        for (auto const& p : frontier) {
          for (auto const& g : gens) {
            Perm q(degree);
            for (std::size_t i = 0; i < degree; ++i) {
              q[i] = g[p[i]];
            }
            if (seen.insert(q).second) {
              next.push_back(q);
            }
          }
        }
        frontier = std::move(next);
      }
      std::vector<Perm>          elems(seen.begin(), seen.end());
      std::map<Perm, Elem>       index;
      for (Elem i = 0; i < elems.size(); ++i) {
        index[elems[i]] = i;
      }
      return product_group(std::move(name), elems.size(), [&](Elem x, Elem y) {
        Perm r(degree);
        for (std::size_t i = 0; i < degree; ++i) {
          r[i] = elems[x][elems[y][i]];
        }
        return index.at(r);
      });
    }

    // Quaternion units 1, i, j, k with signs; element 2*u + s is (-1)^s u.
    AlgebraPtr quaternion_group() {
      // unit product u*v = sign * unit
      constexpr std::array<std::array<std::pair<int, int>, 4>, 4> mul{{
          {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
          {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
          {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
          {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
      }};
      return product_group("Q8-group", 8, [&](Elem x, Elem y) {
        auto [u, s] = mul[x / 2][y / 2];
        return static_cast<Elem>(2 * u + ((s + x % 2 + y % 2) % 2));
      });
    }

    // A normal subgroup with the conjugation action of the ambient group.
    ActionSet restricted_conjugation(AlgebraPtr const& ambient,
                                     Subalgebra const& sub) {
      std::size_t const nb = ambient->order(), na = sub.algebra->order();
      std::vector<Elem> preimage(nb, 0);
      for (Elem k = 0; k < na; ++k) {
        preimage[sub.inclusion(k)] = k;
      }
      Table dot(nb, na);
      for (Elem b = 0; b < nb; ++b) {
        for (Elem k = 0; k < na; ++k) {
          dot(b, k) = preimage[ambient->sub(ambient->add(b, sub.inclusion(k)), b)];
        }
      }
      return ActionSet(ambient, sub.algebra, std::move(dot));
    }

    CrossedModule id_trivial(std::string name, AlgebraPtr const& a) {
      return CrossedModule(std::move(name), identity_morphism(a),
                           trivial_action(a, a));
    }

    CrossedModule id_conjugation(std::string name, AlgebraPtr const& a) {
      return CrossedModule(std::move(name), identity_morphism(a),
                           conjugation_action(a));
    }

    AlgebraPtr trivial_like(AlgebraPtr const& a, std::string name) {
      Signature const& sig = a->signature();
      return make_algebra(std::move(name), sig, Table(1, 1), std::vector<Elem>{0},
                          std::vector<Table>(sig.num_binary(), Table(1, 1)),
                          std::vector<std::vector<Elem>>(sig.num_unary(),
                                                         std::vector<Elem>{0}));
    }

    void require(ValidationReport const& r, std::string const& name) {
      if (!r.valid()) {
        throw Error(ErrorCode::InternalInconsistency,
                    "catalog entry '" + name + "' is invalid:\n" + r.summary());
      }
    }

    std::vector<CatalogEntry> build() {
      std::vector<CatalogEntry> out;

      auto algebra = [&](AlgebraPtr a, std::string description) {
        require(validate_algebra(*a), a->name());
        out.push_back({a->name(), EntryKind::Algebra, std::move(description), a});
        return a;
      };
      auto action = [&](std::string name, ActionSet act, std::string description) {
        require(check_derived_action(act), name);
        out.push_back({std::move(name), EntryKind::Action, std::move(description),
                       std::move(act)});
      };
      std::vector<CrossedModule> xmods;
      auto xmod = [&](CrossedModule x, std::string description) {
        require(validate_crossed_module(x), x.name());
        roundtrip(x);
        xmods.push_back(x);
        out.push_back({x.name(), EntryKind::XMod, std::move(description), x});
      };
      auto groupoid = [&](InternalGroupoid g, std::string description) {
        require(validate_groupoid(g), g.name);
        roundtrip(g);
        out.push_back({g.name, EntryKind::Groupoid, std::move(description),
                       std::move(g)});
      };

      auto trivial = algebra(make_algebra(cyclic_group(1)->renamed("trivial-group")),
                             "the group with one element");
      std::vector<AlgebraPtr> cyclic(9);
      for (std::size_t n = 2; n <= 8; ++n) {
        cyclic[n] = algebra(cyclic_group(n), "cyclic group of order "
                                                 + std::to_string(n));
      }
      auto k4 = algebra(direct_product(*cyclic[2], *cyclic[2], "K4-group"),
                        "Klein four-group Z2 x Z2");
      algebra(direct_product(*cyclic[2], *cyclic[4], "Z2xZ4-group"),
              "Z2 x Z4");
      algebra(direct_product(*k4, *cyclic[2], "Z2xZ2xZ2-group"),
              "elementary abelian group of order 8");
      auto s3 = algebra(permutation_group("S3-group", {{1, 0, 2}, {1, 2, 0}}),
                        "symmetric group on three points, permutations in "
                        "lexicographic order");
      Elem rotation = 0;
      while (s3->add(rotation, rotation) == 0) {
        ++rotation;
      }
      auto a3 = subalgebra(s3, generated_subgroup(*s3, std::vector<Elem>{rotation}),
                           "A3-group");
      algebra(a3.algebra, "alternating subgroup of S3-group");
      algebra(permutation_group("D4-group", {{1, 2, 3, 0}, {0, 3, 2, 1}}),
              "symmetries of a square");
      algebra(quaternion_group(), "quaternion group");

      auto const self_mul = Signature::from_pairs({{"mul", "mul"}});
      auto zero_op        = [](Elem, Elem) { return Elem{0}; };
      auto z2_zero = algebra(with_binary("Z2-zero-ring", cyclic[2], self_mul, {zero_op}),
                             "Z2 with zero multiplication");
      algebra(with_binary("Z4-zero-ring", cyclic[4], self_mul, {zero_op}),
              "Z4 with zero multiplication");
      auto z2_ring = algebra(
          with_binary("Z2-ring", cyclic[2], self_mul,
                      {[](Elem x, Elem y) { return static_cast<Elem>(x * y % 2); }}),
          "integers mod 2");
      auto z4_ring = algebra(
          with_binary("Z4-ring", cyclic[4], self_mul,
                      {[](Elem x, Elem y) { return static_cast<Elem>(x * y % 4); }}),
          "integers mod 4");
      PairCoding const pc{2, 2};
      auto nc_mul = [pc](Elem x, Elem y) {
        Elem a = pc.first(x), b = pc.second(x), c = pc.first(y), d = pc.second(y);
        return pc.encode(a * c, a * d);
      };
      auto r4 = algebra(with_binary("R4-nc-ring", k4,
                                    Signature::from_pairs({{"mul", "omul"},
                                                           {"omul", "mul"}}),
                                    {nc_mul, [nc_mul](Elem x, Elem y) {
                                       return nc_mul(y, x);
                                     }}),
                        "Z2 x Z2 with (a,b)mul(c,d) = (ac,ad); omul is the "
                        "opposite product");
      std::vector<Elem> doubling(4);
      for (Elem x = 0; x < 4; ++x) {
        doubling[x] = 2 * x % 4;
      }
      auto z4_dbl = algebra(make_algebra("Z4-dbl", Signature({}, {}, {"dbl"}),
                                         cyclic[4]->add_table(),
                                         cyclic[4]->neg_table(), std::vector<Table>{},
                                         std::vector<std::vector<Elem>>{doubling}),
                            "Z4 with the unary operation dbl(a) = 2a");

      action("S3-conj-action", conjugation_action(s3),
             "S3-group acting on itself by conjugation");
      Table inversion(2, 3);
      for (Elem a = 0; a < 3; ++a) {
        inversion(0, a) = a;
        inversion(1, a) = cyclic[3]->neg(a);
      }
      action("Z2-on-Z3-inversion", ActionSet(cyclic[2], cyclic[3], inversion),
             "Z2-group acting on Z3-group by negation");
      action("S3-on-A3-conj", restricted_conjugation(s3, a3),
             "S3-group acting on A3-group by conjugation");
      action("R4-nc-ring-conj-action", conjugation_action(r4),
             "R4-nc-ring acting on itself");

      for (std::size_t n : {2, 3, 4, 6}) {
        xmod(id_trivial("Z" + std::to_string(n) + "-id-trivial", cyclic[n]),
             "identity of Z" + std::to_string(n) + "-group, trivial action");
      }
      xmod(id_trivial("K4-id-trivial", k4),
           "identity of K4-group, trivial action");
      xmod(id_conjugation("S3-conj-xmod", s3),
           "identity of S3-group, conjugation action");
      xmod(CrossedModule("A3-S3-inclusion", a3.inclusion,
                         restricted_conjugation(s3, a3)),
           "inclusion of the normal subgroup A3 into S3, conjugation action");
      std::vector<Elem> mod2(4);
      for (Elem x = 0; x < 4; ++x) {
        mod2[x] = x % 2;
      }
      xmod(CrossedModule("Z4-Z2-quotient", AlgMorphism{cyclic[4], cyclic[2], mod2},
                         trivial_action(cyclic[2], cyclic[4])),
           "reduction Z4 -> Z2, trivial action");
      xmod(CrossedModule("Z2-zero-trivial", zero_morphism(cyclic[2], cyclic[2]),
                         trivial_action(cyclic[2], cyclic[2])),
           "zero map Z2 -> Z2, trivial action");
      xmod(CrossedModule("Z4-to-trivial", zero_morphism(cyclic[4], trivial),
                         trivial_action(trivial, cyclic[4])),
           "Z4-group over the trivial group");
      xmod(CrossedModule("trivial-to-S3", zero_morphism(trivial, s3),
                         trivial_action(s3, trivial)),
           "trivial group over S3-group");
      xmod(id_conjugation("Z2-zero-ring-conj", z2_zero),
           "identity of Z2-zero-ring acting on itself");
      xmod(id_conjugation("Z2-ring-conj", z2_ring),
           "identity of Z2-ring acting on itself");
      xmod(id_conjugation("Z4-ring-conj", z4_ring),
           "identity of Z4-ring acting on itself");
      xmod(id_conjugation("R4-nc-ring-conj", r4),
           "identity of R4-nc-ring acting on itself");
      xmod(id_trivial("Z4-dbl-id-trivial", z4_dbl),
           "identity of Z4-dbl, trivial action");

      for (auto const& x : xmods) {
        auto g = to_groupoid(x);
        g.name = "delta-" + x.name();
        groupoid(std::move(g), "internal groupoid of " + x.name());
      }
      for (auto const& [a, name] :
           std::vector<std::pair<AlgebraPtr, std::string>>{
               {cyclic[3], "pair-Z3"},
               {s3, "pair-S3"},
               {z2_zero, "pair-Z2-zero-ring"},
               {r4, "pair-R4-nc-ring"}}) {
        auto g = pair_groupoid(a);
        g.name = name;
        groupoid(std::move(g), "pair groupoid on " + a->name());
      }
      return out;
    }

    template <typename T>
    T load_as(std::string_view name, EntryKind kind) {
      auto const& e = load(name);
      if (e.kind != kind) {
        throw Error(ErrorCode::UnknownName,
                    "catalog entry '" + std::string(name) + "' is a "
                        + std::string(to_string(e.kind)) + ", not a "
                        + std::string(to_string(kind)));
      }
      return std::get<T>(e.payload);
    }

  }  // namespace

  std::string_view to_string(EntryKind kind) noexcept {
    switch (kind) {
      case EntryKind::Algebra: return "algebra";
      case EntryKind::Action: return "action";
      case EntryKind::XMod: return "xmod";
      case EntryKind::Groupoid: return "groupoid";
    }
    return "unknown";
  }

  AlgebraPtr cyclic_group(std::size_t n) {
    return product_group("Z" + std::to_string(n) + "-group", n, [n](Elem x, Elem y) {
      return static_cast<Elem>((x + y) % n);
    });
  }

  std::vector<CatalogEntry> const& catalog() {
    static std::vector<CatalogEntry> const entries = build();
    return entries;
  }

  CatalogEntry const& load(std::string_view name) {
    auto const& all = catalog();
    auto it = std::find_if(all.begin(), all.end(), [&](auto const& e) {
      return e.name == name;
    });
    if (it == all.end()) {
      throw Error(ErrorCode::UnknownName,
                  "no catalog entry named '" + std::string(name) + "'");
    }
    return *it;
  }

  AlgebraPtr load_algebra(std::string_view name) {
    return load_as<AlgebraPtr>(name, EntryKind::Algebra);
  }

  ActionSet load_action(std::string_view name) {
    return load_as<ActionSet>(name, EntryKind::Action);
  }

  CrossedModule load_xmod(std::string_view name) {
    return load_as<CrossedModule>(name, EntryKind::XMod);
  }

  InternalGroupoid load_groupoid(std::string_view name) {
    return load_as<InternalGroupoid>(name, EntryKind::Groupoid);
  }

  std::vector<CrossedModule> catalog_xmods() {
    std::vector<CrossedModule> out;
    for (auto const& e : catalog()) {
      if (auto const* x = std::get_if<CrossedModule>(&e.payload)) {
        out.push_back(*x);
      }
    }
    return out;
  }

  std::vector<InternalGroupoid> catalog_groupoids() {
    std::vector<InternalGroupoid> out;
    for (auto const& e : catalog()) {
      if (auto const* g = std::get_if<InternalGroupoid>(&e.payload)) {
        out.push_back(*g);
      }
    }
    return out;
  }

  std::optional<std::string> identify_group(AlgebraPtr const& g) {
    auto const& sig = g->signature();
    if (sig.num_binary() > 0 || sig.num_unary() > 0) {
      return std::nullopt;
    }
    for (auto const& e : catalog()) {
      auto const* a = std::get_if<AlgebraPtr>(&e.payload);
      if (a && (*a)->signature() == sig && (*a)->order() == g->order()
          && isomorphic(*a, g)) {
        return e.name;
      }
    }
    return std::nullopt;
  }

}  // namespace xmodlab
