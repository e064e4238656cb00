#include "fareylcm/farey.hpp"

#include <numeric>
#include <stdexcept>

#include "fareylcm/numtheory.hpp"

namespace fareylcm::farey {

Fraction Fraction::reduced(std::int64_t num, std::int64_t den) {
  if (den < 1) throw std::invalid_argument("Fraction: denominator must be >= 1");
  if (num < 0 || num > den) throw std::invalid_argument("Fraction: value must lie in [0, 1]");
  std::int64_t g = std::gcd(num, den);
  return Fraction(num / g, den / g);
}

std::string Fraction::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

FareyCursor::FareyCursor(std::int64_t order) : order_(order) {
  if (order < 1) throw std::invalid_argument("FareyCursor: order must be >= 1");
}

void FareyCursor::advance() {
  assert(!at_end_);
  if (!started_) {
    prev_ = cur_;  // 0/1
    cur_ = order_ == 1 ? Fraction(1, 1) : Fraction(1, order_);
    started_ = true;
    return;
  }
  if (cur_.num() == cur_.den()) {  // 1/1 reached
    at_end_ = true;
    return;
  }
  std::int64_t k = (order_ + prev_.den()) / cur_.den();
  Fraction next(k * cur_.num() - prev_.num(), k * cur_.den() - prev_.den());
  prev_ = cur_;
  cur_ = next;
}

FareySequence::FareySequence(std::int64_t order, Span span) : order_(order), span_(span) {
  if (order < 1) throw std::invalid_argument("FareySequence: order must be >= 1");
}

FareySequence::iterator::iterator(std::int64_t order, Span span)
    : cursor_(order), span_(span) {
  if (span_ != Span::Full) cursor_.advance();  // skip 0/1
  clamp();
}

FareySequence::iterator& FareySequence::iterator::operator++() {
  cursor_.advance();
  clamp();
  return *this;
}

void FareySequence::iterator::clamp() {
  if (cursor_.at_end()) {
    done_ = true;
    return;
  }
  const Fraction& r = cursor_.current();
  switch (span_) {
    case Span::Full:
      break;
    case Span::HalfClosed:
      done_ = !(r.less_than_half() || r.is_half());
      break;
    case Span::HalfOpen:
      done_ = !r.less_than_half();
      break;
  }
}

FareySequence farey_sequence(std::int64_t order) { return FareySequence(order); }

FareySequence farey_half(std::int64_t order, bool include_half) {
  return FareySequence(order, include_half ? FareySequence::Span::HalfClosed
                                           : FareySequence::Span::HalfOpen);
}

std::int64_t farey_count(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("farey_count: order must be >= 1");
  auto phi = numtheory::totient_sieve(order);
  std::int64_t count = 1;
  for (std::int64_t m = 1; m <= order; ++m) count += phi[m];
  return count;
}

}  // namespace fareylcm::farey
