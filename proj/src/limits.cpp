#include "kproj/limits.hpp"

#include <cstdlib>
#include <limits>
#include <optional>

#include "kproj/errors.hpp"

namespace kproj {

namespace {

thread_local std::optional<std::size_t> override_cap;

std::size_t environment_cap() {
  if (const char* env = std::getenv("KPROJ_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return default_entry_cap;
}

}  // namespace

std::size_t entry_cap() noexcept {
  if (override_cap) return *override_cap;
  static const std::size_t from_env = environment_cap();
  return from_env;
}

ScopedCap::ScopedCap(std::size_t cap) : previous_(override_cap.value_or(0)), had_previous_(override_cap.has_value()) {
  override_cap = cap;
}

ScopedCap::~ScopedCap() {
  if (had_previous_) {
    override_cap = previous_;
  } else {
    override_cap.reset();
  }
}

void require_within_cap(std::size_t entries, const std::string& what) {
  if (entries > entry_cap()) {
    throw DimensionOverflow(what + " needs " +
                            (entries == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                                : std::to_string(entries)) +
                            " entries, cap is " + std::to_string(entry_cap()));
  }
}

std::size_t saturating_mul(std::size_t a, std::size_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_pow(std::size_t a, std::size_t b) noexcept {
  std::size_t out = 1;
  for (std::size_t k = 0; k < b; ++k) out = saturating_mul(out, a);
  return out;
}

}  // namespace kproj
