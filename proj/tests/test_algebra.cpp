#include <cmath>  // for pow

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "xmodlab/algebra.hpp"
#include "xmodlab/catalog.hpp"

using namespace xmodlab;

namespace {

  AlgebraPtr z2_with_zero_mul() {
    return make_algebra("Z2-zero-ring",
                        Signature({"mul"}, {0}, {}),
                        Table(2, 2, {0, 1, 1, 0}),
                        std::vector<Elem>{0, 1},
                        std::vector<Table>{Table(2, 2, 0)});
  }

}  // namespace

TEST_CASE("Z2 addition table is a valid group") {
  auto z2 = cyclic_group(2);
  CHECK(validate_algebra(*z2).valid());
  CHECK(oracle::is_omega_group(*z2));
}

TEST_CASE("non-associative addition reports the first failing triple") {
  // A Latin square with identity 0 that is not associative.
  Table add(5, 5, {0, 1, 2, 3, 4,  //
                   1, 0, 3, 4, 2,  //
                   2, 4, 0, 1, 3,  //
                   3, 2, 4, 0, 1,  //
                   4, 3, 1, 2, 0});
  OmegaAlgebra bad("bad", Signature(), add, {0, 1, 2, 3, 4});
  auto         r = validate_algebra(bad);
  REQUIRE(r.has("associativity"));
  auto const* v = r.find("associativity");
  REQUIRE(v->witness.size() == 3);
  Elem a = v->witness[0], b = v->witness[1], c = v->witness[2];
  CHECK(bad.add(bad.add(a, b), c) != bad.add(a, bad.add(b, c)));
  // No lexicographically smaller triple fails.
  bool earlier = false;
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      for (Elem z = 0; z < 5; ++z) {
        std::vector<Elem> t{x, y, z};
        if (t < v->witness && bad.add(bad.add(x, y), z) != bad.add(x, bad.add(y, z))) {
          earlier = true;
        }
      }
    }
  }
  CHECK_FALSE(earlier);
  CHECK_FALSE(oracle::is_omega_group(bad));
}

TEST_CASE("zero multiplication ring on Z2 is valid") {
  auto r = z2_with_zero_mul();
  CHECK(validate_algebra(*r).valid());
  CHECK(r->signature().opposite(0) == 0);
  CHECK(same_structure(*r, *load_algebra("Z2-zero-ring")));
}

TEST_CASE("wrong opposite table is reported") {
  // Z4 ring multiplication is commutative; declare a distinct opposite
  // that is all zero instead.
  auto z4ring = load_algebra("Z4-ring");
  Table mul   = z4ring->binary_table(0);
  OmegaAlgebra bad("bad", Signature({"mul", "omul"}, {1, 0}, {}),
                   z4ring->add_table(), z4ring->neg_table(),
                   {mul, Table(4, 4, 0)});
  auto r = validate_algebra(bad);
  CHECK(r.has("opposite"));
  CHECK_FALSE(oracle::is_omega_group(bad));
}

TEST_CASE("right distributivity follows for every catalog algebra") {
  for (auto const& e : catalog()) {
    if (e.kind != EntryKind::Algebra) {
      continue;
    }
    auto const& a = *std::get<AlgebraPtr>(e.payload);
    INFO(e.name);
    CHECK(oracle::is_omega_group(a));
    for (std::size_t k = 0; k < a.signature().num_binary(); ++k) {
      for (Elem x = 0; x < a.order(); ++x) {
        for (Elem y = 0; y < a.order(); ++y) {
          for (Elem z = 0; z < a.order(); ++z) {
            CHECK(a.op(k, a.add(y, z), x) == a.add(a.op(k, y, x), a.op(k, z, x)));
          }
        }
      }
    }
  }
}

TEST_CASE("morphism checks") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  CHECK(check_morphism(identity_morphism(z4)).valid());
  CHECK(check_morphism(zero_morphism(z4, z2)).valid());

  std::vector<Elem> shift{1, 2, 3, 0};
  auto              r = check_morphism(shift, *z4, *z4);
  REQUIRE(r.has("zero"));
  CHECK(r.find("zero")->detail == "zero not preserved");

  CHECK_THROWS_AS(check_morphism(std::vector<Elem>{0, 1}, *z4, *z4), Error);
}

TEST_CASE("enumerate morphisms between cyclic groups") {
  auto z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  CHECK(enumerate_morphisms(z2, z2).size() == 2);
  auto z3z2 = enumerate_morphisms(z3, z2);
  REQUIRE(z3z2.size() == 1);
  CHECK(z3z2[0].map == std::vector<Elem>{0, 0, 0});

  auto z4z4 = enumerate_morphisms(z4, z4);
  REQUIRE(z4z4.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(z4z4[k].map == support::multiply_by(4, k));
  }
}

TEST_CASE("enumerate morphisms agrees with brute force on catalog pairs") {
  std::vector<std::string> names{"trivial-group", "Z2-group", "Z3-group",
                                 "Z4-group",      "K4-group", "S3-group",
                                 "Z6-group"};
  for (auto const& s : names) {
    for (auto const& t : names) {
      auto A = load_algebra(s), B = load_algebra(t);
      if (std::pow(double(B->order()), double(A->order())) > 1e6) {
        continue;
      }
      auto fast  = enumerate_morphisms(A, B);
      auto brute = oracle::all_morphisms(*A, *B);
      INFO(s << " -> " << t);
      REQUIRE(fast.size() == brute.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i].map == brute[i]);
      }
    }
  }
  for (auto const& s : {"Z2-ring", "Z4-ring", "Z4-zero-ring", "Z2-zero-ring"}) {
    for (auto const& t : {"Z2-ring", "Z4-ring", "Z4-zero-ring", "Z2-zero-ring"}) {
      auto A = load_algebra(s), B = load_algebra(t);
      CHECK(enumerate_morphisms(A, B).size() == oracle::all_morphisms(*A, *B).size());
    }
  }
  auto r4 = load_algebra("R4-nc-ring");
  CHECK(enumerate_morphisms(r4, r4).size() == oracle::all_morphisms(*r4, *r4).size());
}

TEST_CASE("budget is enforced") {
  auto z8 = cyclic_group(8);
  CHECK_THROWS_AS(enumerate_morphisms(z8, z8, 2), Error);
  try {
    enumerate_morphisms(z8, z8, 2);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(cyclic_group(3)).size() == 2);
  CHECK(automorphism_group(z2_with_zero_mul()).size() == 1);
  auto k4 = load_algebra("K4-group");
  auto aut = automorphism_group(k4);
  CHECK(aut.size() == 6);
  std::size_t brute = 0;
  for (auto const& f : oracle::all_morphisms(*k4, *k4)) {
    brute += is_bijective(f, 4);
  }
  CHECK(brute == 6);
  CHECK(automorphism_group(load_algebra("S3-group")).size() == 6);
  CHECK(automorphism_group(cyclic_group(6)).size() == oracle::euler_phi(6));
}

TEST_CASE("kernels") {
  auto z4 = cyclic_group(4);
  CHECK(kernel_of(identity_morphism(z4)).algebra->order() == 1);
  CHECK(kernel_of(zero_morphism(z4, z4)).algebra->order() == 4);
  AlgMorphism mod2{z4, cyclic_group(2), {0, 1, 0, 1}};
  auto        k = kernel_of(mod2);
  CHECK(k.inclusion.map == std::vector<Elem>{0, 2});
  CHECK(isomorphic(k.algebra, cyclic_group(2)));
}

TEST_CASE("composition of morphisms") {
  auto        z4 = cyclic_group(4);
  AlgMorphism twice{z4, z4, support::multiply_by(4, 2)};
  AlgMorphism thrice{z4, z4, support::multiply_by(4, 3)};
  CHECK(compose(twice, thrice).map == support::multiply_by(4, 2));
  CHECK(compose(identity_morphism(z4), twice) == twice);
  CHECK_THROWS_AS(compose(twice, AlgMorphism{cyclic_group(2), cyclic_group(2), {0, 1}}),
                  Error);
}

TEST_CASE("group identification") {
  CHECK(identify_group(cyclic_group(4)) == std::string("Z4-group"));
  CHECK(identify_group(load_algebra("S3-group")) == std::string("S3-group"));
  CHECK(identify_group(direct_product(*cyclic_group(2), *cyclic_group(2)))
        == std::string("K4-group"));
}
