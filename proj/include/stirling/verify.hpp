#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/enumerators.hpp"

namespace stirling {

/// Checks one order n (and k where the target takes one); returns a
/// description of the first failure, or nothing.
using OrderCheck = std::function<std::optional<std::string>(int n, std::optional<int> k)>;

struct VerificationTarget {
  std::string id;
  std::string description;
  int n_min = 0;
  int n_max = 0;
  bool fixed = false;   // worked examples: the range cannot be changed
  bool uses_k = false;  // runs k = max(1, n-2)..4 unless one k is given
  OrderCheck check;
};

/// Every target, in a fixed order.
const std::vector<VerificationTarget>& registry();

/// Runs orders n_min..n_max (n_max defaults to the target's own) and stops
/// at the first counterexample. Throws InvalidObject for an unknown id.
VerificationReport verify(std::string_view id, std::optional<int> n_max = std::nullopt,
                          std::optional<int> k = std::nullopt);

/// Registry order. A requested n_max is ignored by fixed targets.
std::vector<VerificationReport> verify_all(std::optional<int> n_max = std::nullopt);

}  // namespace stirling
