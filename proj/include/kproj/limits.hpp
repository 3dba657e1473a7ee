#pragma once

#include <cstddef>
#include <string>

namespace kproj {

inline constexpr std::size_t default_entry_cap = 1'000'000;

/// Maximum number of scalar entries a dense object may materialize. Defaults
/// to KPROJ_CAP from the environment, else default_entry_cap; ScopedCap
/// overrides it on the current thread.
std::size_t entry_cap() noexcept;

class ScopedCap {
 public:
  explicit ScopedCap(std::size_t cap);
  ~ScopedCap();
  ScopedCap(const ScopedCap&) = delete;
  ScopedCap& operator=(const ScopedCap&) = delete;

 private:
  std::size_t previous_;
  bool had_previous_;
};

/// Throws DimensionOverflow naming `what` when entries > entry_cap().
void require_within_cap(std::size_t entries, const std::string& what);

/// a^b, saturating at SIZE_MAX.
std::size_t saturating_pow(std::size_t a, std::size_t b) noexcept;
std::size_t saturating_mul(std::size_t a, std::size_t b) noexcept;

}  // namespace kproj
