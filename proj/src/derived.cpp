#include "xmodlab/derived.hpp"

#include <cstdint>  // for uint64_t
#include <cstdio>   // for snprintf

namespace xmodlab {

  namespace {

    void require_derivation(Derivation const& d) {
      auto r = check_derivation(d.base, d.d);
      if (!r.valid()) {
        throw Error(ErrorCode::InvalidDerivation,
                    "not a derivation of '" + d.base.name() + "':\n"
                        + r.summary());
      }
    }

    std::vector<Elem> sigma_inverse(Derivation const& d) {
      require_derivation(d);
      auto inv = inverse_map(base_endomorphism(d));
      if (!inv || !is_bijective(module_endomorphism(d), d.base.module()->order())) {
        throw Error(ErrorCode::NotRegular,
                    "derivation of '" + d.base.name() + "' is not regular");
      }
      return *inv;
    }

    void inconsistent_unless(bool ok, std::string const& what) {
      if (!ok) {
        throw Error(ErrorCode::InternalInconsistency, what);
      }
    }

  }  // namespace

  SplitExtension derivation_extension(Derivation const& d) {
    require_derivation(d);
    auto             ext = canonical_extension(d.base.action());
    PairCoding const pc{d.base.module()->order(), d.base.base()->order()};
    for (Elem b = 0; b < ext.section.map.size(); ++b) {
      ext.section.map[b] = pc.encode(d(b), b);
    }
    auto r = check_split_extension(ext);
    inconsistent_unless(r.valid(),
                        "b -> (d(b), b) is not a section:\n" + r.summary());
    return ext;
  }

  ActionSet derived_action_general(Derivation const& d) {
    require_derivation(d);
    auto const&       A   = *d.base.module();
    auto const&       act = d.base.action();
    std::size_t const na = A.order(), nb = d.base.base()->order();
    Table             dot(nb, na);
    for (Elem b = 0; b < nb; ++b) {
      for (Elem a = 0; a < na; ++a) {
        dot(b, a) = A.sub(A.add(d(b), act.dot(b, a)), d(b));
      }
    }
    std::vector<Table> star;
    for (std::size_t k = 0; k < A.signature().num_binary(); ++k) {
      Table t(nb, na);
      for (Elem b = 0; b < nb; ++b) {
        for (Elem a = 0; a < na; ++a) {
          t(b, a) = A.add(A.op(k, d(b), a), act.left(k, b, a));
        }
      }
      star.push_back(std::move(t));
    }
    ActionSet result(d.base.base(), d.base.module(), std::move(dot),
                     std::move(star));
    auto r = check_derived_action(result);
    inconsistent_unless(r.valid(),
                        "derived action fails the action conditions:\n"
                            + r.summary());
    inconsistent_unless(result == action_from_section(derivation_extension(d)),
                        "derived action differs from the split extension's");
    return result;
  }

  ActionSet derived_action_regular(Derivation const& d) {
    sigma_inverse(d);
    auto const&       act   = d.base.action();
    auto const        sigma = base_endomorphism(d);
    std::size_t const na = d.base.module()->order(), nb = sigma.size();
    Table             dot(nb, na);
    for (Elem b = 0; b < nb; ++b) {
      for (Elem a = 0; a < na; ++a) {
        dot(b, a) = act.dot(sigma[b], a);
      }
    }
    std::vector<Table> star;
    for (std::size_t k = 0; k < act.star_tables().size(); ++k) {
      Table t(nb, na);
      for (Elem b = 0; b < nb; ++b) {
        for (Elem a = 0; a < na; ++a) {
          t(b, a) = act.left(k, sigma[b], a);
        }
      }
      star.push_back(std::move(t));
    }
    ActionSet result(d.base.base(), d.base.module(), std::move(dot),
                     std::move(star));
    inconsistent_unless(result == derived_action_general(d),
                        "regular and general derived actions differ");
    return result;
  }

  CrossedModule derived_crossed_module(Derivation const& d) {
    auto const        inv = sigma_inverse(d);
    auto const&       bd  = d.base.boundary();
    std::vector<Elem> boundary(bd.map.size());
    for (Elem a = 0; a < boundary.size(); ++a) {
      boundary[a] = inv[bd(a)];
    }
    CrossedModule x(d.base.name() + "-derived",
                    AlgMorphism{bd.source, bd.target, std::move(boundary)},
                    derived_action_regular(d));
    auto r = validate_crossed_module(x);
    inconsistent_unless(r.valid(),
                        "derived crossed module is not valid:\n" + r.summary());
    return x;
  }

  XModMorphism derived_iso(Derivation const& d) {
    auto         inv = sigma_inverse(d);
    auto const&  x   = d.base;
    XModMorphism m{x,
                   derived_crossed_module(d),
                   identity_morphism(x.module()),
                   AlgMorphism{x.base(), x.base(), std::move(inv)}};
    auto r = check_xmod_morphism(m);
    inconsistent_unless(r.valid(),
                        "(1, sigma^-1) is not a morphism:\n" + r.summary());
    inconsistent_unless(is_bijective(m.bottom) && is_covering(m),
                        "(1, sigma^-1) is not an isomorphism");
    return m;
  }

  Derivation transport_derivation(Derivation const& d) {
    sigma_inverse(d);
    auto const        sigma = base_endomorphism(d);
    std::vector<Elem> moved(sigma.size());
    for (Elem b = 0; b < moved.size(); ++b) {
      moved[b] = d(sigma[b]);
    }
    Derivation out{derived_crossed_module(d), std::move(moved)};
    auto       r = check_derivation(out.base, out.d);
    inconsistent_unless(r.valid(),
                        "d o sigma is not a derivation of the derived crossed "
                        "module:\n" + r.summary());
    inconsistent_unless(module_endomorphism(out) == module_endomorphism(d),
                        "theta changed under transport");
    inconsistent_unless(base_endomorphism(out) == sigma,
                        "sigma changed under transport");
    inconsistent_unless(is_regular(out).regular,
                        "transported derivation is not regular");
    return out;
  }

  DerivedChain iterate_chain(Derivation const& d, std::size_t max_stages) {
    if (max_stages == 0) {
      throw Error(ErrorCode::UsageError, "max_stages must be at least 1");
    }
    sigma_inverse(d);
    DerivedChain chain;
    chain.stages.push_back({d.base, d, std::nullopt});
    for (std::size_t k = 1; k <= max_stages; ++k) {
      auto const& prev = chain.stages.back().derivation;
      auto        link = derived_iso(prev);
      auto        next = transport_derivation(prev);
      auto        x    = next.base.renamed(d.base.name() + "-stage"
                                   + std::to_string(k));
      link.target      = x;
      next.base        = x;
      chain.stages.push_back({x, std::move(next), std::move(link)});
      if (same_structure(x, d.base)) {
        chain.period = k;
        break;
      }
    }
    return chain;
  }

  std::string action_digest(ActionSet const& act) {
    std::uint64_t h    = 0xcbf29ce484222325ULL;
    auto          feed = [&](std::uint64_t v) {
      for (int i = 0; i < 4; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
      }
    };
    auto feed_table = [&](Table const& t) {
      feed(t.rows());
      feed(t.cols());
      for (Elem e : t.data()) {
        feed(e);
      }
    };
    feed_table(act.dot_table());
    for (auto const& t : act.star_tables()) {
      feed_table(t);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

}  // namespace xmodlab
