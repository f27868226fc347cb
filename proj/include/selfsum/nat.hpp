#pragma once

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "selfsum/errors.hpp"

namespace selfsum {

// Checked unsigned scalar. Every operation whose true result leaves
// [0, max] throws OverflowError instead of wrapping. The width is a
// template parameter so validation code can swap in a narrow shim and
// actually reach the overflow paths at desk scale.
template <class U>
class CheckedUInt {
  static_assert(!std::is_signed_v<U>);

 public:
  using rep = U;
  static constexpr U max_rep = ~U(0);

  constexpr CheckedUInt() = default;

  template <std::integral I>
  constexpr CheckedUInt(I v) {
    if constexpr (std::is_signed_v<I>) {
      if (v < 0) throw OverflowError("negative value is not a natural");
    }
    const auto wide = static_cast<unsigned __int128>(v);
    if (wide > static_cast<unsigned __int128>(max_rep))
      throw OverflowError("value exceeds scalar width");
    v_ = static_cast<U>(wide);
  }

  constexpr U raw() const { return v_; }

  friend constexpr bool operator==(CheckedUInt, CheckedUInt) = default;
  friend constexpr auto operator<=>(CheckedUInt a, CheckedUInt b) {
    return a.v_ <=> b.v_;
  }

  friend constexpr CheckedUInt operator+(CheckedUInt a, CheckedUInt b) {
    U r;
    if (__builtin_add_overflow(a.v_, b.v_, &r))
      throw OverflowError("addition overflow");
    return from_raw(r);
  }

  friend constexpr CheckedUInt operator-(CheckedUInt a, CheckedUInt b) {
    U r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r))
      throw OverflowError("subtraction below zero");
    return from_raw(r);
  }

  friend constexpr CheckedUInt operator*(CheckedUInt a, CheckedUInt b) {
    U r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r))
      throw OverflowError("multiplication overflow");
    return from_raw(r);
  }

  friend constexpr CheckedUInt operator/(CheckedUInt a, CheckedUInt b) {
    if (b.v_ == 0) throw OverflowError("division by zero");
    return from_raw(a.v_ / b.v_);
  }

  friend constexpr CheckedUInt operator%(CheckedUInt a, CheckedUInt b) {
    if (b.v_ == 0) throw OverflowError("modulo by zero");
    return from_raw(a.v_ % b.v_);
  }

  constexpr CheckedUInt& operator+=(CheckedUInt o) { return *this = *this + o; }
  constexpr CheckedUInt& operator-=(CheckedUInt o) { return *this = *this - o; }
  constexpr CheckedUInt& operator*=(CheckedUInt o) { return *this = *this * o; }

  static constexpr CheckedUInt from_raw(U v) {
    CheckedUInt r;
    r.v_ = v;
    return r;
  }

 private:
  U v_{0};
};

// All scalar quantities of the library live in this type; 128 bits keep
// the fourth-power landmark values exact up to n around 5e9.
using Nat = CheckedUInt<unsigned __int128>;

template <class U>
std::string to_string(CheckedUInt<U> v) {
  if (v.raw() == 0) return "0";
  std::string out;
  auto x = v.raw();
  while (x != 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(x % 10)));
    x /= 10;
  }
  return {out.rbegin(), out.rend()};
}

template <class U>
std::ostream& operator<<(std::ostream& os, CheckedUInt<U> v) {
  return os << to_string(v);
}

// Decimal parse; throws std::invalid_argument on malformed input and
// OverflowError when the value does not fit.
template <class U = unsigned __int128>
CheckedUInt<U> parse_nat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  CheckedUInt<U> value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a decimal natural: '" +
                                  std::string(text) + "'");
    value = value * CheckedUInt<U>(10) + CheckedUInt<U>(unsigned(c - '0'));
  }
  return value;
}

// n(n+1)/2, halving the even factor before multiplying so the intermediate
// never exceeds the final value.
template <class U>
constexpr CheckedUInt<U> triangular(CheckedUInt<U> n) {
  const CheckedUInt<U> two = 2;
  if (n.raw() % 2 == 0) return (n / two) * (n + CheckedUInt<U>(1));
  return n * ((n + CheckedUInt<U>(1)) / two);
}

// n(n-1)/2; zero for n = 0.
template <class U>
constexpr CheckedUInt<U> choose_two(CheckedUInt<U> n) {
  if (n.raw() == 0) return 0;
  const CheckedUInt<U> two = 2;
  if (n.raw() % 2 == 0) return (n / two) * (n - CheckedUInt<U>(1));
  return n * ((n - CheckedUInt<U>(1)) / two);
}

inline std::uint64_t to_u64(Nat v) {
  if (v.raw() > ~std::uint64_t(0))
    throw OverflowError("value exceeds 64 bits: " + to_string(v));
  return static_cast<std::uint64_t>(v.raw());
}

}  // namespace selfsum
