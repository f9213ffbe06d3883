#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace nestedrisk {

// A value on the extended real line R ∪ {-inf, +inf}.
//
// NaN is not representable: constructing from a NaN double throws.
// Finite values compare exactly; tolerance comparisons belong to callers.
class ExtReal {
 public:
  constexpr ExtReal() noexcept : state_(State::finite), value_(0.0) {}

  // Implicit on purpose: finite doubles and IEEE infinities map naturally.
  ExtReal(double v) : state_(State::finite), value_(v) {
    if (std::isnan(v)) {
      throw std::invalid_argument("ExtReal: NaN is not an extended real");
    }
    if (std::isinf(v)) {
      state_ = v > 0 ? State::pos_inf : State::neg_inf;
      value_ = 0.0;
    }
  }

  static constexpr ExtReal neg_infinity() noexcept { return ExtReal(State::neg_inf); }
  static constexpr ExtReal pos_infinity() noexcept { return ExtReal(State::pos_inf); }

  constexpr bool is_finite() const noexcept { return state_ == State::finite; }
  constexpr bool is_pos_inf() const noexcept { return state_ == State::pos_inf; }
  constexpr bool is_neg_inf() const noexcept { return state_ == State::neg_inf; }

  constexpr double finite_value() const {
    if (!is_finite()) {
      throw std::logic_error("ExtReal: finite_value() on an infinite value");
    }
    return value_;
  }

  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) noexcept {
    return a.state_ == b.state_ && (a.state_ != State::finite || a.value_ == b.value_);
  }

  // Total order: -inf < finite < +inf.
  friend constexpr bool operator<(const ExtReal& a, const ExtReal& b) noexcept {
    if (a.state_ != b.state_) {
      return static_cast<int>(a.state_) < static_cast<int>(b.state_);
    }
    return a.state_ == State::finite && a.value_ < b.value_;
  }
  friend constexpr bool operator<=(const ExtReal& a, const ExtReal& b) noexcept {
    return a < b || a == b;
  }
  friend constexpr bool operator>(const ExtReal& a, const ExtReal& b) noexcept { return b < a; }
  friend constexpr bool operator>=(const ExtReal& a, const ExtReal& b) noexcept { return b <= a; }
  friend constexpr bool operator!=(const ExtReal& a, const ExtReal& b) noexcept { return !(a == b); }

 private:
  // Enumerator order matters for operator<.
  enum class State { neg_inf = 0, finite = 1, pos_inf = 2 };

  constexpr explicit ExtReal(State s) noexcept : state_(s), value_(0.0) {}

  State state_;
  double value_;
};

// Moreau lower addition: usual addition extended with
// (+inf) + (-inf) = (-inf) + (+inf) = -inf.
constexpr ExtReal lower_add(const ExtReal& u, const ExtReal& v) noexcept {
  if (u.is_neg_inf() || v.is_neg_inf()) return ExtReal::neg_infinity();
  if (u.is_pos_inf() || v.is_pos_inf()) return ExtReal::pos_infinity();
  return ExtReal(u.finite_value() + v.finite_value());
}

// Moreau upper addition: usual addition extended with
// (+inf) + (-inf) = (-inf) + (+inf) = +inf.
constexpr ExtReal upper_add(const ExtReal& u, const ExtReal& v) noexcept {
  if (u.is_pos_inf() || v.is_pos_inf()) return ExtReal::pos_infinity();
  if (u.is_neg_inf() || v.is_neg_inf()) return ExtReal::neg_infinity();
  return ExtReal(u.finite_value() + v.finite_value());
}

constexpr ExtReal neg(const ExtReal& u) noexcept {
  if (u.is_pos_inf()) return ExtReal::neg_infinity();
  if (u.is_neg_inf()) return ExtReal::pos_infinity();
  return ExtReal(-u.finite_value());
}

constexpr ExtReal operator-(const ExtReal& u) noexcept { return neg(u); }

// Supremum of a finite sequence; the empty supremum is -inf.
inline ExtReal sup(std::span<const ExtReal> values) noexcept {
  ExtReal m = ExtReal::neg_infinity();
  for (const ExtReal& v : values) {
    if (m < v) m = v;
  }
  return m;
}

inline std::string to_string(const ExtReal& u) {
  if (u.is_pos_inf()) return "+inf";
  if (u.is_neg_inf()) return "-inf";
  return std::to_string(u.finite_value());
}

}  // namespace nestedrisk
