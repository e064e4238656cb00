#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>

namespace fareylcm::farey {

// Reduced fraction in [0, 1]. Invariants: gcd(num, den) = 1,
// 0 <= num <= den, den >= 1.
class Fraction {
 public:
  Fraction() = default;  // 0/1

  // Reduces and validates; throws std::invalid_argument if den < 1 or the
  // value falls outside [0, 1].
  static Fraction reduced(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Fraction complement() const { return Fraction(den_ - num_, den_); }  // 1 - r

  bool less_than_half() const { return 2 * num_ < den_; }
  bool is_half() const { return 2 * num_ == den_; }

  std::string str() const;  // "num/den"

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  friend class FareyCursor;
  Fraction(std::int64_t n, std::int64_t d) : num_(n), den_(d) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Walks F(order) from 0/1 to 1/1 using the neighbour recurrence
//   k = floor((order + b) / d),  next = (k*c - a, k*d - b)
// for consecutive a/b < c/d. O(1) state, one fraction per step.
class FareyCursor {
 public:
  explicit FareyCursor(std::int64_t order);  // throws if order < 1

  std::int64_t order() const { return order_; }
  const Fraction& current() const { assert(!at_end_); return cur_; }
  const Fraction& previous() const { assert(has_previous()); return prev_; }
  bool has_previous() const { return started_ && !at_end_; }
  bool at_end() const { return at_end_; }
  void advance();

 private:
  std::int64_t order_;
  Fraction prev_, cur_;
  bool started_ = false;  // true once 0/1 has been left behind
  bool at_end_ = false;
};

// Iterable view of F(order), optionally restricted to the half ranges
// used by the product identities. The full span includes both endpoints
// 0/1 and 1/1; half spans never include 0.
class FareySequence {
 public:
  enum class Span {
    Full,        // [0, 1]
    HalfClosed,  // (0, 1/2]
    HalfOpen,    // (0, 1/2)
  };

  explicit FareySequence(std::int64_t order, Span span = Span::Full);

  class iterator {
   public:
    using value_type = Fraction;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(std::int64_t order, Span span);

    Fraction operator*() const { return cursor_.current(); }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    void clamp();
    FareyCursor cursor_;
    Span span_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(order_, span_); }
  std::default_sentinel_t end() const { return {}; }

  std::int64_t order() const { return order_; }

 private:
  std::int64_t order_;
  Span span_;
};

// F(order) ascending, endpoints included. Throws if order < 1.
FareySequence farey_sequence(std::int64_t order);

// Fractions of F(order) in (0, 1/2] (include_half) or (0, 1/2).
FareySequence farey_half(std::int64_t order, bool include_half);

// |F(order)| = 1 + sum of phi(m) for m <= order. Throws if order < 1.
std::int64_t farey_count(std::int64_t order);

}  // namespace fareylcm::farey
