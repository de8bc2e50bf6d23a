#include "xmodlab/algebra.hpp"

#include <algorithm>  // for sort, find, unique
#include <deque>      // for deque
#include <limits>     // for numeric_limits
#include <numeric>    // for iota
#include <set>        // for set
#include <unordered_set>

namespace xmodlab {

  namespace {

    constexpr Elem kUnset = std::numeric_limits<Elem>::max();

    bool reserved(std::string const& name) {
      return name == "+" || name == "-" || name == "0" || name.empty();
    }

    void require_same_signature(OmegaAlgebra const& x,
                                OmegaAlgebra const& y,
                                std::string_view    context) {
      if (x.signature() != y.signature()) {
        throw Error(ErrorCode::SignatureMismatch,
                    std::string(context) + ": '" + x.name() + "' and '"
                        + y.name() + "' have different signatures");
      }
    }

    // |base|^exponent, saturating at uint64 max.
    std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent) {
      std::uint64_t result = 1;
      for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0
            && result > std::numeric_limits<std::uint64_t>::max() / base) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        result *= base;
      }
      return result;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Signature
  ////////////////////////////////////////////////////////////////////////

  Signature::Signature(std::vector<std::string> binary_ops,
                       std::vector<std::size_t> opposite,
                       std::vector<std::string> unary_ops)
      : binary_(std::move(binary_ops)),
        opposite_(std::move(opposite)),
        unary_(std::move(unary_ops)) {
    if (opposite_.size() != binary_.size()) {
      throw Error(ErrorCode::InvalidSignature,
                  "opposite table length differs from number of binary ops");
    }
    std::set<std::string> seen;
    for (auto const& name : binary_) {
      if (reserved(name) || !seen.insert(name).second) {
        throw Error(ErrorCode::InvalidSignature,
                    "bad or duplicate operation name '" + name + "'");
      }
    }
    for (auto const& name : unary_) {
      if (reserved(name) || !seen.insert(name).second) {
        throw Error(ErrorCode::InvalidSignature,
                    "bad or duplicate operation name '" + name + "'");
      }
    }
    for (std::size_t k = 0; k < opposite_.size(); ++k) {
      if (opposite_[k] >= binary_.size() || opposite_[opposite_[k]] != k) {
        throw Error(ErrorCode::InvalidSignature,
                    "opposite pairing is not an involution at '" + binary_[k]
                        + "'");
      }
    }
  }

  Signature Signature::from_pairs(
      std::vector<std::pair<std::string, std::string>> const& binary,
      std::vector<std::string>                                unary) {
    std::vector<std::string> names;
    for (auto const& [name, opp] : binary) {
      names.push_back(name);
    }
    std::vector<std::size_t> opposite;
    for (auto const& [name, opp] : binary) {
      auto it = std::find(names.begin(), names.end(), opp);
      if (it == names.end()) {
        throw Error(ErrorCode::InvalidSignature,
                    "opposite '" + opp + "' of '" + name
                        + "' is not a declared binary operation");
      }
      opposite.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    return Signature(std::move(names), std::move(opposite), std::move(unary));
  }

  std::optional<std::size_t>
  Signature::find_binary(std::string const& name) const {
    auto it = std::find(binary_.begin(), binary_.end(), name);
    if (it == binary_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - binary_.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // OmegaAlgebra
  ////////////////////////////////////////////////////////////////////////

  OmegaAlgebra::OmegaAlgebra(std::string                    name,
                             Signature                      signature,
                             Table                          add,
                             std::vector<Elem>              neg,
                             std::vector<Table>             binary,
                             std::vector<std::vector<Elem>> unary)
      : name_(std::move(name)),
        signature_(std::move(signature)),
        add_(std::move(add)),
        neg_(std::move(neg)),
        binary_(std::move(binary)),
        unary_(std::move(unary)) {
    std::size_t const n = neg_.size();
    if (n == 0) {
      throw Error(ErrorCode::DimensionMismatch,
                  "algebra '" + name_ + "' has empty carrier");
    }
    if (add_.rows() != n || add_.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "algebra '" + name_ + "': addition table is not "
                      + std::to_string(n) + "x" + std::to_string(n));
    }
    if (binary_.size() != signature_.num_binary()
        || unary_.size() != signature_.num_unary()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "algebra '" + name_
                      + "': operation tables do not match the signature");
    }
    add_.check_range(n, "add");
    check_range(neg_, n, "neg");
    for (std::size_t k = 0; k < binary_.size(); ++k) {
      if (binary_[k].rows() != n || binary_[k].cols() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "algebra '" + name_ + "': table of '"
                        + signature_.binary_name(k) + "' has wrong shape");
      }
      binary_[k].check_range(n, signature_.binary_name(k));
    }
    for (std::size_t k = 0; k < unary_.size(); ++k) {
      if (unary_[k].size() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "algebra '" + name_ + "': table of '"
                        + signature_.unary_name(k) + "' has wrong length");
      }
      check_range(unary_[k], n, signature_.unary_name(k));
    }

    // Renumber so that the additive identity, if any, is element 0.
    std::optional<Elem> identity;
    for (Elem e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = add_(e, x) == x && add_(x, e) == x;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity || *identity == 0) {
      return;
    }
    Elem const e    = *identity;
    auto       swap = [e](Elem x) -> Elem {
      return x == 0 ? e : (x == e ? 0 : x);
    };
    auto relabel2 = [&](Table const& t) {
      Table out(n, n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          out(a, b) = swap(t(swap(a), swap(b)));
        }
      }
      return out;
    };
    auto relabel1 = [&](std::vector<Elem> const& t) {
      std::vector<Elem> out(n);
      for (Elem a = 0; a < n; ++a) {
        out[a] = swap(t[swap(a)]);
      }
      return out;
    };
    add_ = relabel2(add_);
    neg_ = relabel1(neg_);
    for (auto& t : binary_) {
      t = relabel2(t);
    }
    for (auto& t : unary_) {
      t = relabel1(t);
    }
  }

  OmegaAlgebra OmegaAlgebra::renamed(std::string name) const {
    OmegaAlgebra copy = *this;
    copy.name_        = std::move(name);
    return copy;
  }

  bool same_structure(OmegaAlgebra const& x, OmegaAlgebra const& y) {
    if (&x == &y) {
      return true;
    }
    if (x.order() != y.order() || x.signature() != y.signature()
        || x.add_table() != y.add_table() || x.neg_table() != y.neg_table()) {
      return false;
    }
    for (std::size_t k = 0; k < x.signature().num_binary(); ++k) {
      if (x.binary_table(k) != y.binary_table(k)) {
        return false;
      }
    }
    for (std::size_t k = 0; k < x.signature().num_unary(); ++k) {
      if (x.unary_table(k) != y.unary_table(k)) {
        return false;
      }
    }
    return true;
  }

  bool same_structure(AlgebraPtr const& x, AlgebraPtr const& y) {
    return x == y || (x && y && same_structure(*x, *y));
  }

  ValidationReport validate_algebra(OmegaAlgebra const& alg) {
    ValidationReport r;
    std::size_t const n   = alg.order();
    auto const&       sig = alg.signature();

    r.expect<1>("zero-identity", "", {n}, [&](auto const& t) {
      return alg.add(0, t[0]) == t[0] && alg.add(t[0], 0) == t[0];
    });
    r.expect<1>("inverse", "", {n}, [&](auto const& t) {
      return alg.add(t[0], alg.neg(t[0])) == 0
             && alg.add(alg.neg(t[0]), t[0]) == 0;
    });
    r.expect<3>("associativity", "", {n, n, n}, [&](auto const& t) {
      auto [a, b, c] = t;
      return alg.add(alg.add(a, b), c) == alg.add(a, alg.add(b, c));
    });

    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      auto const& name = sig.binary_name(k);
      r.expect<3>("distributivity", name, {n, n, n}, [&](auto const& t) {
        auto [a, b, c] = t;
        return alg.op(k, a, alg.add(b, c))
               == alg.add(alg.op(k, a, b), alg.op(k, a, c));
      });
      std::size_t const o = sig.opposite(k);
      r.expect<2>("opposite",
                  name,
                  {n, n},
                  [&](auto const& t) {
                    return alg.op(o, t[0], t[1]) == alg.op(k, t[1], t[0]);
                  },
                  "opposite is '" + sig.binary_name(o) + "'");
    }

    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      auto const& name = sig.unary_name(u);
      r.expect<2>("unary-additive", name, {n, n}, [&](auto const& t) {
        auto [a, b] = t;
        return alg.unop(u, alg.add(a, b))
               == alg.add(alg.unop(u, a), alg.unop(u, b));
      });
      for (std::size_t k = 0; k < sig.num_binary(); ++k) {
        r.expect<2>("unary-binary",
                    name + "/" + sig.binary_name(k),
                    {n, n},
                    [&](auto const& t) {
                      auto [a, b] = t;
                      return alg.op(k, alg.unop(u, a), b)
                             == alg.unop(u, alg.op(k, a, b));
                    });
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  bool operator==(AlgMorphism const& f, AlgMorphism const& g) {
    return f.map == g.map && same_structure(f.source, g.source)
           && same_structure(f.target, g.target);
  }

  ValidationReport check_morphism(std::span<Elem const> map,
                                  OmegaAlgebra const&   source,
                                  OmegaAlgebra const&   target) {
    require_same_signature(source, target, "check_morphism");
    if (map.size() != source.order()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "map has " + std::to_string(map.size())
                      + " entries but source '" + source.name() + "' has order "
                      + std::to_string(source.order()));
    }
    check_range({map.begin(), map.end()}, target.order(), "map");

    ValidationReport r;
    std::size_t const n   = source.order();
    auto const&       sig = source.signature();
    if (map[0] != 0) {
      r.add({"zero", "", {0}, "zero not preserved"});
    }
    r.expect<2>("add", "", {n, n}, [&](auto const& t) {
      auto [a, b] = t;
      return map[source.add(a, b)] == target.add(map[a], map[b]);
    });
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      r.expect<2>("binop", sig.binary_name(k), {n, n}, [&](auto const& t) {
        auto [a, b] = t;
        return map[source.op(k, a, b)] == target.op(k, map[a], map[b]);
      });
    }
    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      r.expect<1>("unop", sig.unary_name(u), {n}, [&](auto const& t) {
        return map[source.unop(u, t[0])] == target.unop(u, map[t[0]]);
      });
    }
    return r;
  }

  ValidationReport check_morphism(AlgMorphism const& f) {
    return check_morphism(f.map, *f.source, *f.target);
  }

  AlgMorphism identity_morphism(AlgebraPtr a) {
    std::vector<Elem> map(a->order());
    std::iota(map.begin(), map.end(), Elem{0});
    return {a, a, std::move(map)};
  }

  AlgMorphism zero_morphism(AlgebraPtr source, AlgebraPtr target) {
    std::vector<Elem> map(source->order(), 0);
    return {std::move(source), std::move(target), std::move(map)};
  }

  AlgMorphism compose(AlgMorphism const& g, AlgMorphism const& f) {
    if (!same_structure(f.target, g.source)) {
      throw Error(ErrorCode::NotComposable,
                  "target '" + f.target->name() + "' differs from source '"
                      + g.source->name() + "'");
    }
    std::vector<Elem> map(f.map.size());
    for (std::size_t a = 0; a < map.size(); ++a) {
      map[a] = g.map[f.map[a]];
    }
    return {f.source, g.target, std::move(map)};
  }

  bool is_bijective(std::span<Elem const> map, std::size_t target_order) {
    if (map.size() != target_order) {
      return false;
    }
    std::vector<bool> hit(target_order, false);
    for (auto y : map) {
      if (y >= target_order || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool is_bijective(AlgMorphism const& f) {
    return is_bijective(f.map, f.target->order());
  }

  std::optional<std::vector<Elem>> inverse_map(std::span<Elem const> map) {
    if (!is_bijective(map, map.size())) {
      return std::nullopt;
    }
    std::vector<Elem> inv(map.size());
    for (std::size_t a = 0; a < map.size(); ++a) {
      inv[map[a]] = static_cast<Elem>(a);
    }
    return inv;
  }

  std::vector<Elem> generated_subgroup(OmegaAlgebra const&   alg,
                                       std::span<Elem const> gens) {
    std::vector<bool> in(alg.order(), false);
    std::deque<Elem>  queue{0};
    in[0] = true;
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (auto g : gens) {
        Elem y = alg.add(x, g);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::vector<Elem> out;
    for (Elem x = 0; x < alg.order(); ++x) {
      if (in[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Elem> generating_set(OmegaAlgebra const& alg) {
    std::vector<Elem> gens;
    std::vector<bool> covered(alg.order(), false);
    covered[0] = true;
    for (Elem x = 0; x < alg.order(); ++x) {
      if (covered[x]) {
        continue;
      }
      gens.push_back(x);
      for (auto y : generated_subgroup(alg, gens)) {
        covered[y] = true;
      }
    }
    return gens;
  }

  namespace {

    // Extends the assignment gens[j] -> images[j], j < count, along the
    // Cayley graph from 0. Returns false on a conflict.
    bool propagate(OmegaAlgebra const&      source,
                   OmegaAlgebra const&      target,
                   std::vector<Elem> const& gens,
                   std::vector<Elem> const& images,
                   std::size_t              count,
                   std::vector<Elem>&       map) {
      std::fill(map.begin(), map.end(), kUnset);
      map[0] = 0;
      std::deque<Elem> queue{0};
      while (!queue.empty()) {
        Elem x = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < count; ++j) {
          Elem y  = source.add(x, gens[j]);
          Elem fy = target.add(map[x], images[j]);
          if (map[y] == kUnset) {
            map[y] = fy;
            queue.push_back(y);
          } else if (map[y] != fy) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  std::vector<AlgMorphism> enumerate_morphisms(AlgebraPtr const& source,
                                               AlgebraPtr const& target,
                                               std::uint64_t     budget) {
    require_same_signature(*source, *target, "enumerate_morphisms");
    auto const gens = generating_set(*source);
    auto const cost = saturating_pow(target->order(), gens.size());
    if (cost > budget) {
      throw Error(ErrorCode::BudgetExceeded,
                  std::to_string(target->order()) + "^"
                      + std::to_string(gens.size())
                      + " generator assignments exceed budget "
                      + std::to_string(budget));
    }

    std::vector<std::vector<Elem>> found;
    std::vector<Elem>              images(gens.size(), 0);
    std::vector<Elem>              map(source->order());

    auto search = [&](auto& self, std::size_t depth) -> void {
      if (depth == gens.size()) {
        if (propagate(*source, *target, gens, images, depth, map)
            && check_morphism(map, *source, *target).valid()) {
          found.push_back(map);
        }
        return;
      }
      for (Elem y = 0; y < target->order(); ++y) {
        images[depth] = y;
        if (propagate(*source, *target, gens, images, depth + 1, map)) {
          self(self, depth + 1);
        }
      }
    };
    search(search, 0);

    std::sort(found.begin(), found.end());
    std::vector<AlgMorphism> result;
    result.reserve(found.size());
    for (auto& m : found) {
      result.push_back({source, target, std::move(m)});
    }
    return result;
  }

  std::vector<AlgMorphism> automorphism_group(AlgebraPtr const& a,
                                              std::uint64_t     budget) {
    std::vector<AlgMorphism> autos;
    for (auto& f : enumerate_morphisms(a, a, budget)) {
      if (is_bijective(f)) {
        autos.push_back(std::move(f));
      }
    }
    std::set<std::vector<Elem>> maps;
    for (auto const& f : autos) {
      maps.insert(f.map);
    }
    for (auto const& f : autos) {
      if (!maps.count(*inverse_map(f.map))) {
        throw Error(ErrorCode::InternalInconsistency,
                    "automorphisms of '" + a->name()
                        + "' not closed under inverses");
      }
      for (auto const& g : autos) {
        if (!maps.count(compose(g, f).map)) {
          throw Error(ErrorCode::InternalInconsistency,
                      "automorphisms of '" + a->name()
                          + "' not closed under composition");
        }
      }
    }
    return autos;
  }

  bool isomorphic(AlgebraPtr const& x,
                  AlgebraPtr const& y,
                  std::uint64_t     budget) {
    if (x->order() != y->order() || x->signature() != y->signature()) {
      return false;
    }
    for (auto const& f : enumerate_morphisms(x, y, budget)) {
      if (is_bijective(f)) {
        return true;
      }
    }
    return false;
  }

  Subalgebra subalgebra(AlgebraPtr const& ambient,
                        std::vector<Elem> elements,
                        std::string       name) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    check_range(elements, ambient->order(), "subset");
    if (elements.empty() || elements.front() != 0) {
      throw Error(ErrorCode::InvalidMorphism,
                  "subset of '" + ambient->name() + "' does not contain 0");
    }
    std::vector<Elem> index(ambient->order(), kUnset);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      index[elements[i]] = static_cast<Elem>(i);
    }
    std::size_t const m = elements.size();
    auto inside = [&](Elem x, std::string const& what) {
      if (index[x] == kUnset) {
        throw Error(ErrorCode::InvalidMorphism,
                    "subset of '" + ambient->name() + "' not closed under "
                        + what);
      }
      return index[x];
    };
    auto restrict2 = [&](auto&& fn, std::string const& what) {
      Table t(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          t(i, j) = inside(fn(elements[i], elements[j]), what);
        }
      }
      return t;
    };
    auto restrict1 = [&](auto&& fn, std::string const& what) {
      std::vector<Elem> t(m);
      for (std::size_t i = 0; i < m; ++i) {
        t[i] = inside(fn(elements[i]), what);
      }
      return t;
    };
    auto const& sig = ambient->signature();
    Table       add = restrict2(
        [&](Elem a, Elem b) { return ambient->add(a, b); }, "+");
    auto neg = restrict1([&](Elem a) { return ambient->neg(a); }, "-");
    std::vector<Table> binary;
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      binary.push_back(restrict2(
          [&](Elem a, Elem b) { return ambient->op(k, a, b); },
          sig.binary_name(k)));
    }
    std::vector<std::vector<Elem>> unary;
    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      unary.push_back(restrict1([&](Elem a) { return ambient->unop(u, a); },
                                sig.unary_name(u)));
    }
    auto sub = make_algebra(std::move(name),
                            sig,
                            std::move(add),
                            std::move(neg),
                            std::move(binary),
                            std::move(unary));
    return {sub, AlgMorphism{sub, ambient, std::move(elements)}};
  }

  Subalgebra kernel_of(AlgMorphism const& f) {
    std::vector<Elem> elements;
    for (Elem a = 0; a < f.source->order(); ++a) {
      if (f(a) == 0) {
        elements.push_back(a);
      }
    }
    return subalgebra(
        f.source, std::move(elements), "ker(" + f.source->name() + ")");
  }

  AlgebraPtr direct_product(OmegaAlgebra const& x,
                            OmegaAlgebra const& y,
                            std::string         name) {
    require_same_signature(x, y, "direct_product");
    PairCoding const pc{x.order(), y.order()};
    std::size_t const n = pc.size();
    auto both2 = [&](auto&& fx, auto&& fy) {
      Table t(n, n);
      for (Elem p = 0; p < n; ++p) {
        for (Elem q = 0; q < n; ++q) {
          t(p, q) = pc.encode(fx(pc.first(p), pc.first(q)),
                              fy(pc.second(p), pc.second(q)));
        }
      }
      return t;
    };
    auto both1 = [&](auto&& fx, auto&& fy) {
      std::vector<Elem> t(n);
      for (Elem p = 0; p < n; ++p) {
        t[p] = pc.encode(fx(pc.first(p)), fy(pc.second(p)));
      }
      return t;
    };
    auto const& sig = x.signature();
    Table       add = both2([&](Elem a, Elem b) { return x.add(a, b); },
                      [&](Elem a, Elem b) { return y.add(a, b); });
    auto neg = both1([&](Elem a) { return x.neg(a); },
                     [&](Elem a) { return y.neg(a); });
    std::vector<Table> binary;
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      binary.push_back(both2([&](Elem a, Elem b) { return x.op(k, a, b); },
                             [&](Elem a, Elem b) { return y.op(k, a, b); }));
    }
    std::vector<std::vector<Elem>> unary;
    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      unary.push_back(both1([&](Elem a) { return x.unop(u, a); },
                            [&](Elem a) { return y.unop(u, a); }));
    }
    if (name.empty()) {
      name = x.name() + "x" + y.name();
    }
    return make_algebra(std::move(name),
                        sig,
                        std::move(add),
                        std::move(neg),
                        std::move(binary),
                        std::move(unary));
  }

  AlgebraPtr group_from_table(std::string name, Table add) {
    std::size_t const n = add.rows();
    Elem              e = 0;
    for (Elem c = 0; c < n; ++c) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = add(c, x) == x && add(x, c) == x;
      }
      if (ok) {
        e = c;
        break;
      }
    }
    std::vector<Elem> neg(n, e);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (add(a, b) == e && add(b, a) == e) {
          neg[a] = b;
          break;
        }
      }
    }
    return make_algebra(
        std::move(name), Signature{}, std::move(add), std::move(neg));
  }

}  // namespace xmodlab
