#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kad/error.hpp"
#include "kad/finite_semiring.hpp"

namespace kad {

/// Uniform interface over computable semirings whose elements are values of T.
/// Star and converse are optional; top is optional. Finite handles list their
/// elements, infinite ones only sample.
template <typename T>
struct ModelHandle {
  using value_type = T;

  std::string name;
  std::function<T(const T&, const T&)> add_fn;
  std::function<T(const T&, const T&)> mul_fn;
  std::function<T(const T&)> star_fn;
  std::function<T(const T&)> conv_fn;
  T zero_value{};
  T one_value{};
  std::optional<T> top_value;
  bool finite = false;
  /// Largest carrier that enumerable_elements() reports as listable.
  std::size_t enumeration_limit = std::size_t{1} << 16;
  std::function<std::vector<T>()> enumerate_fn;
  std::function<T(std::mt19937_64&)> sample_fn;
  std::function<std::string(const T&)> format_fn;

  T add(const T& a, const T& b) const { return add_fn(a, b); }
  T mul(const T& a, const T& b) const { return mul_fn(a, b); }
  T zero() const { return zero_value; }
  T one() const { return one_value; }
  bool leq(const T& a, const T& b) const { return add(a, b) == b; }
  std::optional<T> top() const { return top_value; }

  bool has_star() const { return static_cast<bool>(star_fn); }
  bool has_conv() const { return static_cast<bool>(conv_fn); }
  /// Throws star_unsupported when the model has no star.
  T star(const T& a) const {
    if (!star_fn) throw star_unsupported();
    return star_fn(a);
  }
  T conv(const T& a) const {
    if (!conv_fn) throw missing_capability(name + " has no converse");
    return conv_fn(a);
  }

  bool enumerable_elements() const { return finite && static_cast<bool>(enumerate_fn); }
  std::vector<T> elements() const {
    if (!enumerable_elements()) throw missing_capability(name + " cannot list its elements");
    return enumerate_fn();
  }
  T sample_element(std::mt19937_64& rng) const { return sample_fn(rng); }
  std::string format(const T& a) const { return format_fn(a); }
};

/// Table form of a finite handle. Elements keep their enumeration order and
/// names come from the handle's formatter.
template <typename T>
struct Materialized {
  FiniteSemiring semiring;
  std::vector<T> values;
  std::map<T, Element> index;

  Element index_of(const T& v) const {
    auto it = index.find(v);
    if (it == index.end()) throw invalid_structure("value is not an element of the model");
    return it->second;
  }
};

/// Throws missing_capability for infinite handles and invalid_structure when
/// an operation leaves the enumerated carrier.
template <typename T>
Materialized<T> materialize(const ModelHandle<T>& m) {
  std::vector<T> values = m.elements();
  std::map<T, Element> index;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!index.emplace(values[i], static_cast<Element>(i)).second) {
      throw invalid_structure(m.name + " enumerates an element twice");
    }
  }
  auto at = [&](const T& v) {
    auto it = index.find(v);
    if (it == index.end()) throw invalid_structure(m.name + " is not closed under its operations");
    return it->second;
  };
  const std::size_t n = values.size();
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = at(m.add(values[i], values[j]));
      mul[i * n + j] = at(m.mul(values[i], values[j]));
    }
  }
  std::optional<std::vector<Element>> star, conv;
  if (m.has_star()) {
    star.emplace(n);
    for (std::size_t i = 0; i < n; ++i) (*star)[i] = at(m.star(values[i]));
  }
  if (m.has_conv()) {
    conv.emplace(n);
    for (std::size_t i = 0; i < n; ++i) (*conv)[i] = at(m.conv(values[i]));
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& v : values) names.push_back(m.format(v));
  FiniteSemiring s(std::move(names), std::move(add), std::move(mul), at(m.zero()), at(m.one()),
                   std::move(star), std::move(conv));
  return Materialized<T>{std::move(s), std::move(values), std::move(index)};
}

}  // namespace kad
