#pragma once

#include <random>
#include <string>
#include <vector>

#include "kad/law_report.hpp"

namespace kad {

/// Quantifier domains for a model: enumerated when the model can list its
/// elements (or tests), sampled otherwise. Keeps the enumerations alive for
/// the spans handed to `forall`.
template <typename M>
class Universe {
 public:
  using value_type = typename M::value_type;

  explicit Universe(const M& m) : m_(&m) {
    bool elems = true;
    if constexpr (requires { m.enumerable_elements(); }) elems = m.enumerable_elements();
    if (elems) elements_ = m.elements();
    if constexpr (requires { m.tests(); }) {
      bool tests = true;
      if constexpr (requires { m.enumerable_tests(); }) tests = m.enumerable_tests();
      if (tests) tests_ = m.tests();
    }
  }

  Quantifier<value_type> element(std::string var) const {
    Quantifier<value_type> q{std::move(var), elements_, {}};
    if constexpr (requires(std::mt19937_64& rng) { m_->sample_element(rng); }) {
      if (elements_.empty()) {
        const M* m = m_;
        q.sampler = [m](std::mt19937_64& rng) { return m->sample_element(rng); };
      }
    }
    return q;
  }

  Quantifier<value_type> test(std::string var) const {
    Quantifier<value_type> q{std::move(var), tests_, {}};
    if constexpr (requires(std::mt19937_64& rng) { m_->sample_test(rng); }) {
      if (tests_.empty()) {
        const M* m = m_;
        q.sampler = [m](std::mt19937_64& rng) { return m->sample_test(rng); };
      }
    }
    return q;
  }

  auto formatter() const {
    const M* m = m_;
    return [m](const value_type& v) { return m->format(v); };
  }

  const std::vector<value_type>& elements() const { return elements_; }
  const std::vector<value_type>& tests() const { return tests_; }

 private:
  const M* m_;
  std::vector<value_type> elements_;
  std::vector<value_type> tests_;
};

}  // namespace kad
