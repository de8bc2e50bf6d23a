// Small builders shared by the unit tests.

#ifndef XMODLAB_TESTS_SUPPORT_HPP_
#define XMODLAB_TESTS_SUPPORT_HPP_

#include <string>  // for string, to_string
#include <vector>  // for vector

#include "xmodlab/catalog.hpp"
#include "xmodlab/derivation.hpp"

namespace support {

  using xmodlab::Elem;
  using Row = std::vector<Elem>;

  // b -> k*b mod n.
  inline Row multiply_by(std::size_t n, std::size_t k) {
    Row out(n);
    for (std::size_t b = 0; b < n; ++b) {
      out[b] = static_cast<Elem>(k * b % n);
    }
    return out;
  }

  inline xmodlab::CrossedModule zn_id_trivial(std::size_t n) {
    return xmodlab::load_xmod("Z" + std::to_string(n) + "-id-trivial");
  }

  // d_k(b) = k*b on (Z_n, Z_n, id, trivial).
  inline xmodlab::Derivation zn_derivation(std::size_t n, std::size_t k) {
    return xmodlab::Derivation{zn_id_trivial(n), multiply_by(n, k)};
  }

  inline std::vector<std::string> conditions(xmodlab::ValidationReport const& r) {
    std::vector<std::string> out;
    for (auto const& v : r.violations()) {
      out.push_back(v.condition);
    }
    return out;
  }

}  // namespace support

#endif  // XMODLAB_TESTS_SUPPORT_HPP_
