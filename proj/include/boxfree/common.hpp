#ifndef BOXFREE_COMMON_HPP
#define BOXFREE_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boxfree {

// Field orders above the default budget make exhaustive verification
// impractical; callers may raise the budget up to the hard cap.
inline constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kHardMaxFieldOrder = std::uint64_t{1} << 31;
inline constexpr std::uint32_t kMaxExtensionDegree = 31;

inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000'000;

/// Thrown when a scan would exceed its evaluation or membership-check budget.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed input files (edge lists, polynomial files, descriptors).
class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace boxfree

#endif
