#pragma once

#include <cstddef>
#include <string>

#include "leafcut/algebra/monomial.hpp"

namespace leafcut {

/// Total multiplicative monomial order. `block(k)` compares the first k
/// variables by grevlex and breaks ties by grevlex on the remaining ones, so it
/// eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::block, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}
  Kind kind_;
  std::size_t split_;
};

}  // namespace leafcut
