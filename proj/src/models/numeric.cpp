#include "kad/models/numeric.hpp"

#include <random>

namespace kad {

namespace {

BigNat saturate(BigNat v, const std::optional<BigNat>& bound) {
  if (bound && v > *bound) return *bound;
  return v;
}

// Mostly small values so that sums collide, sometimes huge ones.
BigNat sample_nat(std::mt19937_64& rng, const std::optional<BigNat>& bound) {
  std::uniform_int_distribution<int> kind(0, 9);
  BigNat v;
  if (kind(rng) < 8) {
    v = std::uniform_int_distribution<unsigned>(0, 20)(rng);
  } else {
    v = rng();
    v <<= 64;
    v += rng();
  }
  return saturate(v, bound);
}

}  // namespace

std::string to_string(const ExtNat& x) { return x.infinite ? "inf" : x.value.str(); }
std::string to_string(const NegExtNat& x) { return x.neg_infinite ? "-inf" : x.value.str(); }

ModelHandle<ExtNat> tropical_model(std::optional<BigNat> bound) {
  ModelHandle<ExtNat> m;
  m.name = "tropical";
  m.add_fn = [](const ExtNat& a, const ExtNat& b) { return b < a ? b : a; };
  m.mul_fn = [bound](const ExtNat& a, const ExtNat& b) {
    if (a.infinite || b.infinite) return ExtNat::inf();
    return ExtNat::of(saturate(a.value + b.value, bound));
  };
  m.star_fn = [](const ExtNat&) { return ExtNat::of(0); };
  m.zero_value = ExtNat::inf();
  m.one_value = ExtNat::of(0);
  // 0 is the greatest element of the reversed order.
  m.top_value = ExtNat::of(0);
  m.finite = false;
  m.sample_fn = [bound](std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return ExtNat::inf();
    return ExtNat::of(sample_nat(rng, bound));
  };
  m.format_fn = [](const ExtNat& x) { return to_string(x); };
  return m;
}

ModelHandle<NegExtNat> maxplus_model(std::optional<BigNat> bound) {
  ModelHandle<NegExtNat> m;
  m.name = "max-plus";
  m.add_fn = [](const NegExtNat& a, const NegExtNat& b) { return a < b ? b : a; };
  m.mul_fn = [bound](const NegExtNat& a, const NegExtNat& b) {
    if (a.neg_infinite || b.neg_infinite) return NegExtNat::neg_inf();
    return NegExtNat::of(saturate(a.value + b.value, bound));
  };
  m.zero_value = NegExtNat::neg_inf();
  m.one_value = NegExtNat::of(0);
  m.finite = false;
  m.sample_fn = [bound](std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return NegExtNat::neg_inf();
    return NegExtNat::of(sample_nat(rng, bound));
  };
  m.format_fn = [](const NegExtNat& x) { return to_string(x); };
  return m;
}

}  // namespace kad
