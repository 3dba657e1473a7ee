#pragma once

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kproj {

// Two scalar backends. Rational is exact (GMP keeps mpq values canonical:
// lowest terms, positive denominator). Complex compares against a tolerance
// that is fixed for the duration of a computation, see ScopedEpsilon.
using Rational = mpq_class;
using Complex = std::complex<double>;

enum class Backend { exact, floating };

template <class T>
concept Field = std::same_as<T, Rational> || std::same_as<T, Complex>;

template <Field T>
inline constexpr Backend backend_of = std::same_as<T, Rational> ? Backend::exact : Backend::floating;

inline constexpr double default_epsilon = 1e-9;

/// Tolerance used by every Complex comparison on the calling thread.
double epsilon() noexcept;

/// Sets the thread's comparison tolerance for the lifetime of the object.
class ScopedEpsilon {
 public:
  explicit ScopedEpsilon(double eps);
  ~ScopedEpsilon();
  ScopedEpsilon(const ScopedEpsilon&) = delete;
  ScopedEpsilon& operator=(const ScopedEpsilon&) = delete;

 private:
  double previous_;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Complex& x) { return std::abs(x) <= epsilon(); }

inline Rational conj(const Rational& x) { return x; }
inline Complex conj(const Complex& x) { return std::conj(x); }

template <Field T>
T from_int(long v) {
  if constexpr (std::same_as<T, Rational>) {
    return Rational(v);
  } else {
    return Complex(static_cast<double>(v), 0.0);
  }
}

/// Magnitude used to pick pivots; exact backend only needs "nonzero".
inline double magnitude(const Rational& x) { return is_zero(x) ? 0.0 : 1.0; }
inline double magnitude(const Complex& x) { return std::abs(x); }

std::string to_string(const Rational& x);
std::string to_string(const Complex& x);

/// Parses "p/q" or an integer. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

}  // namespace kproj
