// Built-in small objects: groups up to order 8, a few rings and one
// algebra with a unary operation, actions, crossed modules and internal
// groupoids. Every entry is validated when the catalog is first used.

#ifndef XMODLAB_CATALOG_HPP_
#define XMODLAB_CATALOG_HPP_

#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for variant
#include <vector>       // for vector

#include "action.hpp"
#include "algebra.hpp"
#include "groupoid.hpp"
#include "xmod.hpp"

namespace xmodlab {

  enum class EntryKind { Algebra, Action, XMod, Groupoid };

  std::string_view to_string(EntryKind kind) noexcept;

  struct CatalogEntry {
    std::string name;
    EntryKind   kind;
    std::string description;
    std::variant<AlgebraPtr, ActionSet, CrossedModule, InternalGroupoid> payload;
  };

  //! All entries in a fixed order: algebras, actions, crossed modules,
  //! groupoids. Throws InternalInconsistency if an entry fails validation.
  std::vector<CatalogEntry> const& catalog();

  //! Throws UnknownName.
  CatalogEntry const& load(std::string_view name);

  //! Throw UnknownName if the name is missing or of another kind.
  AlgebraPtr       load_algebra(std::string_view name);
  ActionSet        load_action(std::string_view name);
  CrossedModule    load_xmod(std::string_view name);
  InternalGroupoid load_groupoid(std::string_view name);

  std::vector<CrossedModule>    catalog_xmods();
  std::vector<InternalGroupoid> catalog_groupoids();

  //! Name of the catalog group isomorphic to g, for groups without extra
  //! operations; nullopt when there is none (always found up to order 8).
  std::optional<std::string> identify_group(AlgebraPtr const& g);

  //! Z_n with index k standing for k.
  AlgebraPtr cyclic_group(std::size_t n);

}  // namespace xmodlab

#endif  // XMODLAB_CATALOG_HPP_
