#pragma once

#include <compare>
#include <cstdlib>
#include <functional>
#include <string>

namespace theta {

// Exact element of (1/2)Z. The value is stored doubled, so integers and
// half-integers share one representation and all arithmetic is integer
// arithmetic.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : doubled_(2 * whole) {}

  static constexpr HalfInt from_doubled(int d) {
    HalfInt h;
    h.doubled_ = d;
    return h;
  }
  // k/2 for odd or even k.
  static constexpr HalfInt halves(int k) { return from_doubled(k); }

  constexpr int doubled() const { return doubled_; }
  constexpr bool is_integral() const { return doubled_ % 2 == 0; }

  // Only valid on integral values.
  constexpr int whole() const { return doubled_ / 2; }

  friend constexpr HalfInt operator+(HalfInt x, HalfInt y) {
    return from_doubled(x.doubled_ + y.doubled_);
  }
  friend constexpr HalfInt operator-(HalfInt x, HalfInt y) {
    return from_doubled(x.doubled_ - y.doubled_);
  }
  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const {
    if (is_integral()) return std::to_string(whole());
    return std::to_string(doubled_) + "/2";
  }

 private:
  int doubled_ = 0;
};

// True when x - y is an integer, i.e. x and y lie in the same class mod Z.
constexpr bool same_class(HalfInt x, HalfInt y) {
  return (x - y).is_integral();
}

}  // namespace theta

template <>
struct std::hash<theta::HalfInt> {
  size_t operator()(theta::HalfInt h) const noexcept {
    return std::hash<int>()(h.doubled());
  }
};
