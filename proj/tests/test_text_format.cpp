#include <string>       // for string
#include <type_traits>  // for is_same_v
#include <variant>      // for visit

#include "doctest.h"
#include "support.hpp"

#include "xmodlab/catalog.hpp"
#include "xmodlab/text_format.hpp"

using namespace xmodlab;

namespace {

  ErrorCode code_of(std::string const& text) {
    try {
      parse_document(text, "t.xm");
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("parsed without error");
    return ErrorCode::InternalInconsistency;
  }

  std::string message_of(std::string const& text) {
    try {
      parse_document(text, "t.xm");
    } catch (Error const& e) {
      return e.what();
    }
    return {};
  }

}  // namespace

TEST_CASE("algebra block") {
  auto doc = parse_document(R"(
# zero ring
algebra Z2r
order 2
binops 1
mul mul
unops 0
add
0 1
1 0
neg
0 1
mul
0 0
0 0
)");
  REQUIRE(doc.algebras.count("Z2r") == 1);
  CHECK(same_structure(*doc.algebras.at("Z2r"), *load_algebra("Z2-zero-ring")));
  CHECK(doc.last("algebra") == "Z2r");
  CHECK_THROWS_AS(doc.last("xmod"), Error);
}

TEST_CASE("rows may share the keyword line") {
  auto doc = parse_document("algebra Z2\norder 2\nbinops 0\nunops 0\nadd\n0 1\n1 0\nneg 0 1\n");
  CHECK(same_structure(*doc.algebras.at("Z2"), *cyclic_group(2)));
}

TEST_CASE("every catalog entry survives writing and parsing") {
  for (auto const& e : catalog()) {
    Writer w;
    std::visit(
        [&](auto const& payload) {
          using T = std::decay_t<decltype(payload)>;
          if constexpr (std::is_same_v<T, AlgebraPtr>) {
            w.algebra(payload);
          } else if constexpr (std::is_same_v<T, ActionSet>) {
            w.action(payload, e.name);
          } else if constexpr (std::is_same_v<T, CrossedModule>) {
            w.xmod(payload);
          } else {
            w.groupoid(payload);
          }
        },
        e.payload);
    INFO(e.name);
    auto doc = parse_document(w.text(), e.name);
    switch (e.kind) {
      case EntryKind::Algebra:
        CHECK(same_structure(doc.algebras.at(e.name),
                             std::get<AlgebraPtr>(e.payload)));
        break;
      case EntryKind::Action:
        CHECK(doc.actions.at(e.name) == std::get<ActionSet>(e.payload));
        break;
      case EntryKind::XMod:
        CHECK(same_structure(doc.xmods.at(e.name),
                             std::get<CrossedModule>(e.payload)));
        break;
      case EntryKind::Groupoid:
        CHECK(same_structure(doc.groupoids.at(e.name),
                             std::get<InternalGroupoid>(e.payload)));
        break;
    }
  }
}

TEST_CASE("morphisms, homotopies and derivations round trip") {
  auto   d = support::zn_derivation(4, 2);
  auto   h = as_homotopy(d);
  Writer w;
  w.homotopy(h, "h");
  w.derivation(d, "d2");
  auto doc = parse_document(w.text());
  REQUIRE(doc.homotopies.count("h") == 1);
  CHECK(doc.homotopies.at("h").d == h.d);
  CHECK(doc.homotopies.at("h").from == h.from);
  CHECK(doc.homotopies.at("h").to == h.to);
  CHECK(doc.morphisms.count("h-from") == 1);
  CHECK(doc.derivations.at("d2").d == d.d);
}

TEST_CASE("clashing algebra names get a suffix") {
  Writer w;
  auto   a = w.algebra(cyclic_group(2));
  auto   b = w.algebra(make_algebra(cyclic_group(3)->renamed("Z2-group")));
  CHECK(a == "Z2-group");
  CHECK(b == "Z2-group-2");
  CHECK(w.algebra(cyclic_group(2)) == "Z2-group");
}

TEST_CASE("catalog names resolve inside files") {
  auto doc = parse_document("derivation d\nxmod Z4-id-trivial\nd\n0 2 0 2\n");
  CHECK(doc.derivations.at("d").d == support::multiply_by(4, 2));
}

TEST_CASE("parse errors carry the line number") {
  CHECK(code_of("algebra X\norder 2\nbinops 0\nunops 0\nadd\n0 1\n") == ErrorCode::ParseError);
  CHECK(message_of("algebra X\norder 2\nbinops 0\nunops 0\nadd\n0 1\n1 7\nneg\n0 1\n")
            .find("t.xm:7:")
        != std::string::npos);
  CHECK(message_of("\n\nwidget W\n").find("t.xm:3:") != std::string::npos);
  CHECK(code_of("xmod X\nA nowhere\n") == ErrorCode::ParseError);
  CHECK(message_of("derivation d\nxmod Z4-id-trivial\nd\n0 1 2\n").find("t.xm:4:")
        != std::string::npos);
}

TEST_CASE("identity must be element 0") {
  CHECK(code_of("algebra X\norder 2\nbinops 0\nunops 0\nadd\n1 0\n0 1\nneg\n0 1\n")
        == ErrorCode::ParseError);
}

TEST_CASE("missing files") {
  try {
    parse_file("/nonexistent/file.xm");
    FAIL("opened a missing file");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::FileNotFound);
  }
}
