#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "irrmult/errors.hpp"

namespace irrmult {

/// The fixed ambient polynomial ring K[x_1, ..., x_s]. Only the variable
/// names matter computationally; the coefficient field never appears
/// (every length below is a count of standard monomials).
class AmbientRing {
public:
  static AmbientRing make(std::vector<std::string> variable_names) {
    if (variable_names.empty())
      throw DomainError("ambient ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& name : variable_names) {
      if (name.empty()) throw DomainError("empty variable name");
      if (!seen.insert(name).second)
        throw DomainError("duplicate variable name '" + name + "'");
    }
    return AmbientRing(std::move(variable_names));
  }

  /// Convenience: s variables named x1..xs (or just "x" when s == 1).
  static AmbientRing with_arity(int s) {
    if (s < 1) throw DomainError("ambient ring arity must be >= 1");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(s));
    if (s == 1) {
      names.push_back("x");
    } else {
      for (int i = 1; i <= s; ++i) names.push_back("x" + std::to_string(i));
    }
    return AmbientRing(std::move(names));
  }

  int arity() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& name_of(int var) const {
    return names_.at(static_cast<std::size_t>(var));
  }

  friend bool operator==(const AmbientRing& a, const AmbientRing& b) {
    return a.names_ == b.names_;
  }

private:
  explicit AmbientRing(std::vector<std::string> names)
      : names_(std::move(names)) {}

  std::vector<std::string> names_;
};

}  // namespace irrmult
