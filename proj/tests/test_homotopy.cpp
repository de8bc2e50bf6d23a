#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "xmodlab/catalog.hpp"
#include "xmodlab/derivation.hpp"
#include "xmodlab/homotopy.hpp"

using namespace xmodlab;

namespace {

  // Homotopies available on the catalog: one per derivation of each
  // crossed module, plus zero homotopies on every endomorphism found.
  std::vector<XModHomotopy> catalog_homotopies() {
    std::vector<XModHomotopy> out;
    for (auto const& x : catalog_xmods()) {
      if (x.base()->order() > 8) {
        continue;
      }
      for (auto const& d : enumerate_derivations(x)) {
        out.push_back(as_homotopy(d));
      }
      out.push_back(zero_homotopy(identity_xmod_morphism(x)));
    }
    return out;
  }

}  // namespace

TEST_CASE("zero homotopy is valid") {
  for (auto const& x : catalog_xmods()) {
    auto h = zero_homotopy(identity_xmod_morphism(x));
    CHECK(validate_xmod_homotopy(h).valid());
  }
}

TEST_CASE("a derivation is a homotopy from the identity") {
  for (std::size_t k = 0; k < 4; ++k) {
    auto d = support::zn_derivation(4, k);
    auto h = as_homotopy(d);
    CHECK(h.from == identity_xmod_morphism(d.base));
    CHECK(h.to == endomorphism_of(d));
    CHECK(validate_xmod_homotopy(h).valid());
  }
}

TEST_CASE("zero d between different morphisms fails H-iv") {
  auto         x = support::zn_id_trivial(4);
  auto         f = identity_xmod_morphism(x);
  auto         g = endomorphism_of(support::zn_derivation(4, 2));
  XModHomotopy h{f, g, std::vector<Elem>(4, 0)};
  auto         r = validate_xmod_homotopy(h);
  REQUIRE(r.has("H-iv"));
  auto b = r.find("H-iv")->witness.at(0);
  CHECK(g.bottom(b) != f.bottom(b));
  CHECK(b == 1);
}

TEST_CASE("non-morphism endpoints are prefixed") {
  auto         x = support::zn_id_trivial(4);
  auto         f = identity_xmod_morphism(x);
  auto         g = f;
  g.top.map     = {0, 2, 1, 3};
  XModHomotopy h{f, g, std::vector<Elem>(4, 0)};
  auto         r = validate_xmod_homotopy(h);
  bool         prefixed = false;
  for (auto const& v : r.violations()) {
    prefixed = prefixed || v.condition.rfind("to:", 0) == 0;
  }
  CHECK(prefixed);
}

TEST_CASE("endpoints must be parallel") {
  auto x = support::zn_id_trivial(4);
  auto y = support::zn_id_trivial(2);
  XModHomotopy h{identity_xmod_morphism(x), zero_xmod_morphism(x, y),
                 std::vector<Elem>(4, 0)};
  CHECK_THROWS_AS(validate_xmod_homotopy(h), Error);
}

TEST_CASE("zero homotopy gives identity arrows") {
  auto x = load_xmod("S3-conj-xmod");
  auto f = identity_xmod_morphism(x);
  auto n = homotopy_to_natural_iso(zero_homotopy(f));
  auto g = to_groupoid(x);
  for (Elem b = 0; b < 6; ++b) {
    CHECK(n.eta(b) == g.identity(b));
  }
}

TEST_CASE("derivation on Z4 gives components (d(b), b)") {
  PairCoding pc{4, 4};
  for (std::size_t k = 0; k < 4; ++k) {
    auto d = support::zn_derivation(4, k);
    auto n = homotopy_to_natural_iso(as_homotopy(d));
    CHECK(validate_groupoid_homotopy(n).valid());
    for (Elem b = 0; b < 4; ++b) {
      CHECK(n.eta(b) == pc.encode(d(b), b));
    }
    CHECK(oracle::natural_iso_holds(identity_xmod_morphism(d.base),
                                    endomorphism_of(d), d.d));
  }
}

TEST_CASE("homotopies round trip through natural isomorphisms") {
  for (auto const& h : catalog_homotopies()) {
    INFO(h.from.source.name());
    REQUIRE(validate_xmod_homotopy(h).valid());
    CHECK(oracle::natural_iso_holds(h.from, h.to, h.d));
    auto n = homotopy_to_natural_iso(h);
    CHECK(validate_groupoid_homotopy(n).valid());
    auto back = natural_iso_to_homotopy(n, h.from.source, h.from.target);
    CHECK(back.d == h.d);
    CHECK(back.from == h.from);
    CHECK(back.to == h.to);
  }
}

TEST_CASE("identity natural transformation is the zero homotopy") {
  auto x  = load_xmod("S3-conj-xmod");
  auto g  = to_groupoid(x);
  auto id = identity_functor(g);
  GroupoidHomotopy n{id, id, g.identity};
  CHECK(validate_groupoid_homotopy(n).valid());
  auto h = natural_iso_to_homotopy(n, x, x);
  CHECK(h.d == std::vector<Elem>(6, 0));
}

TEST_CASE("invalid homotopies are rejected before conversion") {
  auto         x = support::zn_id_trivial(4);
  XModHomotopy h{identity_xmod_morphism(x), identity_xmod_morphism(x),
                 {0, 1, 1, 0}};
  CHECK_FALSE(validate_xmod_homotopy(h).valid());
  CHECK_THROWS_AS(homotopy_to_natural_iso(h), Error);

  auto candidate = natural_candidate(to_functor(h.from), to_functor(h.to), h.d);
  CHECK_FALSE(validate_groupoid_homotopy(candidate).valid());
  CHECK_THROWS_AS(natural_iso_to_homotopy(candidate, x, x), Error);
}

TEST_CASE("functors that are not delta images") {
  auto g  = pair_groupoid(cyclic_group(3));
  auto id = identity_functor(g);
  GroupoidHomotopy n{id, id, g.identity};
  auto x = load_xmod("Z3-id-trivial");
  try {
    natural_iso_to_homotopy(n, x, x);
    FAIL("accepted a groupoid that is not a delta image");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotDeltaImage);
  }
}

TEST_CASE("vertical composition") {
  auto x  = support::zn_id_trivial(4);
  auto h2 = as_homotopy(support::zn_derivation(4, 2));
  auto z  = zero_homotopy(h2.from);
  auto c  = vertical_compose(h2, z);
  CHECK(c.d == h2.d);
  CHECK(vertical_compose(zero_homotopy(h2.to), h2).d == h2.d);
  CHECK_THROWS_AS(vertical_compose(h2, h2), Error);

  auto inv = inverse(h2);
  CHECK(validate_xmod_homotopy(inv).valid());
  CHECK(inv.from == h2.to);
  CHECK(inv.to == h2.from);
  auto loop = vertical_compose(inv, h2);
  CHECK(loop.from == h2.from);
  CHECK(loop.to == h2.from);
  CHECK(loop.d == std::vector<Elem>(4, 0));
  (void) x;
}

TEST_CASE("composing with the inverse gives zero on every catalog homotopy") {
  for (auto const& h : catalog_homotopies()) {
    auto inv  = inverse(h);
    auto loop = vertical_compose(inv, h);
    CHECK(loop.to == h.from);
    CHECK(loop.d == zero_homotopy(h.from).d);
    auto other = vertical_compose(h, inv);
    CHECK(other.d == zero_homotopy(h.to).d);
  }
}

TEST_CASE("whiskered vertical composite matches Whitehead composition") {
  for (auto const& name : {"Z4-id-trivial", "Z6-id-trivial", "S3-conj-xmod",
                           "K4-id-trivial", "R4-nc-ring-conj", "Z4-dbl-id-trivial"}) {
    auto x    = load_xmod(name);
    auto ders = enumerate_derivations(x);
    INFO(name);
    for (auto const& d1 : ders) {
      for (auto const& d2 : ders) {
        auto h = vertical_compose(whisker_right(as_homotopy(d1), endomorphism_of(d2)),
                                  as_homotopy(d2));
        CHECK(h.d == whitehead_compose(d1, d2).d);
        CHECK(h.to == endomorphism_of(whitehead_compose(d1, d2)));
      }
    }
  }
}

TEST_CASE("left whiskering") {
  auto x = load_xmod("S3-conj-xmod");
  for (auto const& d : enumerate_derivations(x)) {
    auto k = endomorphism_of(d);
    for (auto const& e : enumerate_derivations(x)) {
      auto h = whisker_left(k, as_homotopy(e));
      CHECK(validate_xmod_homotopy(h).valid());
      std::vector<Elem> expected(6);
      for (Elem b = 0; b < 6; ++b) {
        expected[b] = k.top(e(b));
      }
      CHECK(h.d == expected);
    }
  }
}

TEST_CASE("homotopy is an equivalence relation on Z4 endomorphisms") {
  auto x    = support::zn_id_trivial(4);
  auto ends = enumerate_xmod_morphisms(x, x);
  std::vector<std::vector<int>> related(ends.size(), std::vector<int>(ends.size(), 0));
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = 0; j < ends.size(); ++j) {
      oracle::for_each_map(4, 4, [&](oracle::Row const& d) {
        if (validate_xmod_homotopy({ends[i], ends[j], d}).valid()) {
          related[i][j] = 1;
        }
      });
    }
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    CHECK(related[i][i] == 1);
    for (std::size_t j = 0; j < ends.size(); ++j) {
      CHECK(related[i][j] == related[j][i]);
      for (std::size_t k = 0; k < ends.size(); ++k) {
        if (related[i][j] && related[j][k]) {
          CHECK(related[i][k] == 1);
        }
      }
    }
  }
}
