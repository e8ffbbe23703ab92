#pragma once

#include <numeric>
#include <string>

#include "ttw/errors.hpp"

namespace ttw {

// Exact positive rational m/n, always stored in lowest terms. The angular
// deformation parameter k is kept exact because the sector geometry and the
// angular period n*pi/m must not pick up floating-point slack.
class Rational {
 public:
  constexpr Rational() : num_(1), den_(1) {}

  constexpr Rational(long long m, long long n) : num_(m), den_(n) {
    if (num_ <= 0 || den_ <= 0)
      throw Error(Errc::invalid_argument, "rational m/n requires m >= 1 and n >= 1");
    const long long g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  constexpr long long num() const noexcept { return num_; }
  constexpr long long den() const noexcept { return den_; }
  constexpr double value() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "m" or "m/n".
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(text), 1);
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw Error(Errc::invalid_argument, "cannot parse rational '" + text + "'");
    } catch (const std::out_of_range&) {
      throw Error(Errc::invalid_argument, "rational '" + text + "' out of range");
    }
  }

 private:
  long long num_;
  long long den_;
};

}  // namespace ttw
