#include "kproj/scalar.hpp"

#include <cctype>
#include <cstdio>

#include "kproj/errors.hpp"

namespace kproj {

namespace {
thread_local double current_epsilon = default_epsilon;
}

double epsilon() noexcept { return current_epsilon; }

ScopedEpsilon::ScopedEpsilon(double eps) : previous_(current_epsilon) {
  if (!(eps > 0.0)) throw ParseError("epsilon must be positive");
  current_epsilon = eps;
}

ScopedEpsilon::~ScopedEpsilon() { current_epsilon = previous_; }

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Complex& x) {
  char buf[64];
  if (x.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", x.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", x.real(), x.imag());
  }
  return buf;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto valid_int = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational number: '" + s + "'");
  }
  Rational q;
  q.get_num() = mpz_class(num[0] == '+' ? num.substr(1) : num, 10);
  q.get_den() = mpz_class(den, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string_view backend_name(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend parse_backend(std::string_view name) {
  if (name == "exact") return Backend::exact;
  if (name == "float") return Backend::floating;
  throw ParseError("unknown backend '" + std::string(name) + "'");
}

}  // namespace kproj
