#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace leafcut {

/// Exact rational coefficient. GMP keeps mpq_class canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// "num/den" with den > 0, e.g. "-3/2", "0/1".
std::string rational_to_string(const Rational& q);
/// Accepts "a", "a/b", "-a/b" and decimal integers.
Rational parse_rational(const std::string& text);

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of variable names. Rings are shared by pointer; two rings are
/// compatible iff their variable lists coincide.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars);

  std::size_t size() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

/// Ring with the variables of `a` followed by those of `b` not already in `a`.
RingPtr ring_union(const RingPtr& a, const RingPtr& b);

}  // namespace leafcut
