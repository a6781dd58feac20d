#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "kad/models/model_handle.hpp"

namespace kad {

using BigNat = boost::multiprecision::cpp_int;

/// A natural number or +infinity (the tropical carrier).
struct ExtNat {
  bool infinite = false;
  BigNat value = 0;

  static ExtNat inf() { return ExtNat{true, 0}; }
  static ExtNat of(BigNat v) { return ExtNat{false, std::move(v)}; }

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  /// Standard order with infinity on top.
  friend bool operator<(const ExtNat& a, const ExtNat& b) {
    if (a.infinite) return false;
    return b.infinite || a.value < b.value;
  }
};

/// A natural number or -infinity (the max-plus carrier).
struct NegExtNat {
  bool neg_infinite = false;
  BigNat value = 0;

  static NegExtNat neg_inf() { return NegExtNat{true, 0}; }
  static NegExtNat of(BigNat v) { return NegExtNat{false, std::move(v)}; }

  friend bool operator==(const NegExtNat& a, const NegExtNat& b) {
    return a.neg_infinite == b.neg_infinite && (a.neg_infinite || a.value == b.value);
  }
  friend bool operator<(const NegExtNat& a, const NegExtNat& b) {
    if (b.neg_infinite) return false;
    return a.neg_infinite || a.value < b.value;
  }
};

std::string to_string(const ExtNat& x);
std::string to_string(const NegExtNat& x);

/// (N ∪ {inf}, min, +, inf, 0) with n* = 0. Its natural order is the reverse
/// of the standard one. With a bound, finite results saturate at it.
ModelHandle<ExtNat> tropical_model(std::optional<BigNat> bound = std::nullopt);

/// (N ∪ {-inf}, max, +, -inf, 0). Has no star: star() throws star_unsupported.
ModelHandle<NegExtNat> maxplus_model(std::optional<BigNat> bound = std::nullopt);

}  // namespace kad
