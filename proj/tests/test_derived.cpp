#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "xmodlab/catalog.hpp"
#include "xmodlab/derived.hpp"

using namespace xmodlab;

namespace {

  std::vector<Derivation> regular_catalog_derivations() {
    std::vector<Derivation> out;
    for (auto const& x : catalog_xmods()) {
      for (auto const& d : enumerate_derivations(x)) {
        if (is_bijective(base_endomorphism(d), x.base()->order())) {
          out.push_back(d);
        }
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("zero derivation leaves the action unchanged") {
  for (auto const& x : catalog_xmods()) {
    Derivation zero{x, std::vector<Elem>(x.base()->order(), 0)};
    INFO(x.name());
    CHECK(derived_action_general(zero) == x.action());
    CHECK(derived_action_regular(zero) == x.action());
    CHECK(same_structure(derived_crossed_module(zero), x));
    CHECK(derived_iso(zero) == identity_xmod_morphism(derived_crossed_module(zero)));
    CHECK(transport_derivation(zero).d == zero.d);
  }
}

TEST_CASE("doubling derivation on Z4") {
  auto d   = support::zn_derivation(4, 2);
  auto act = derived_action_general(d);
  CHECK(act == d.base.action());
  CHECK(act.star_tables().empty());
  CHECK(derived_action_regular(d) == act);

  auto y = derived_crossed_module(d);
  CHECK(y.boundary().map == support::multiply_by(4, 3));
  CHECK(validate_crossed_module(y).valid());

  auto iso = derived_iso(d);
  CHECK(iso.top.map == support::multiply_by(4, 1));
  CHECK(iso.bottom.map == support::multiply_by(4, 3));
  CHECK(is_covering(iso));

  CHECK(transport_derivation(d).d == support::multiply_by(4, 2));
}

TEST_CASE("singular derivations still give derived actions") {
  auto d   = support::zn_derivation(4, 1);
  auto act = derived_action_general(d);
  CHECK(check_derived_action(act).valid());
  CHECK(oracle::semidirect_is_object(act));
  CHECK_THROWS_AS(derived_action_regular(d), Error);
  CHECK_THROWS_AS(derived_crossed_module(d), Error);
  CHECK_THROWS_AS(iterate_chain(d), Error);
}

TEST_CASE("general action is the pullback along the derivation section") {
  for (auto const& x : catalog_xmods()) {
    auto const& A = *x.module();
    for (auto const& d : enumerate_derivations(x)) {
      auto act = derived_action_general(d);
      CHECK(check_derived_action(act).valid());
      for (Elem b = 0; b < x.base()->order(); ++b) {
        for (Elem a = 0; a < A.order(); ++a) {
          CHECK(act.dot(b, a) == A.sub(A.add(d(b), x.action().dot(b, a)), d(b)));
        }
      }
    }
  }
}

TEST_CASE("regular derived data on the catalog") {
  for (auto const& d : regular_catalog_derivations()) {
    INFO(d.base.name());
    auto sigma = base_endomorphism(d);
    CHECK(derived_action_regular(d) == derived_action_general(d));
    for (Elem b = 0; b < sigma.size(); ++b) {
      for (Elem a = 0; a < d.base.module()->order(); ++a) {
        CHECK(derived_action_regular(d).dot(b, a) == d.base.action().dot(sigma[b], a));
      }
    }
    auto y = derived_crossed_module(d);
    CHECK(validate_crossed_module(y).valid());
    auto inv = *inverse_map(sigma);
    for (Elem a = 0; a < d.base.module()->order(); ++a) {
      CHECK(y.boundary()(a) == inv[d.base.boundary()(a)]);
    }
    auto iso = derived_iso(d);
    CHECK(check_xmod_morphism(iso).valid());
    CHECK(is_covering(iso));
    CHECK(is_bijective(iso.bottom));

    auto t = transport_derivation(d);
    CHECK(check_derivation(t.base, t.d).valid());
    CHECK(module_endomorphism(t) == module_endomorphism(d));
    CHECK(is_regular(t).regular);
  }
}

TEST_CASE("chains") {
  auto zero  = support::zn_derivation(4, 0);
  auto chain = iterate_chain(zero);
  CHECK(chain.period == 1);

  auto two = iterate_chain(support::zn_derivation(4, 2));
  REQUIRE(two.period == 2);
  REQUIRE(two.stages.size() >= 3);
  CHECK(two.stages[0].xmod.boundary().map == support::multiply_by(4, 1));
  CHECK(two.stages[1].xmod.boundary().map == support::multiply_by(4, 3));
  CHECK(two.stages[2].xmod.boundary().map == support::multiply_by(4, 1));
  CHECK_FALSE(two.stages[0].link.has_value());
  CHECK(two.stages[1].link.has_value());

  CHECK_THROWS_AS(iterate_chain(support::zn_derivation(4, 2), 0), Error);
}

TEST_CASE("stage k boundary is sigma^-k after the original boundary") {
  for (auto const& d : regular_catalog_derivations()) {
    auto chain = iterate_chain(d);
    auto sigma = base_endomorphism(d);
    auto inv   = *inverse_map(sigma);
    INFO(d.base.name());
    CHECK(chain.period > 0);
    CHECK(oracle::permutation_order(sigma) % chain.period == 0);
    auto expected = d.base.boundary().map;
    for (std::size_t k = 0; k < chain.stages.size(); ++k) {
      auto const& stage = chain.stages[k];
      CHECK(stage.xmod.boundary().map == expected);
      CHECK(validate_crossed_module(stage.xmod).valid());
      if (stage.link) {
        CHECK(check_xmod_morphism(*stage.link).valid());
        CHECK(is_covering(*stage.link));
      }
      for (auto& v : expected) {
        v = inv[v];
      }
    }
  }
}

TEST_CASE("action digests") {
  auto a = load_xmod("S3-conj-xmod").action();
  auto b = load_xmod("A3-S3-inclusion").action();
  CHECK(action_digest(a).size() == 16);
  CHECK(action_digest(a) == action_digest(a));
  CHECK(action_digest(a) != action_digest(b));
}
