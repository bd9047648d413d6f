#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hqx {

// Argument outside the mathematical domain of an operation (bad vertex label,
// u == v, empty set, mismatched dimensions).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameter outside the range where a formula or theorem is licensed.
class range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Input violates a theorem hypothesis (e.g. too many faults for the bound).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive search would examine more candidates than allowed.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error("enumeration needs " + std::to_string(needed) +
                           " candidates, budget is " + std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}

  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

}  // namespace hqx
