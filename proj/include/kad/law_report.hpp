#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace kad {

enum class LawStatus { holds, fails, not_applicable };

struct Binding {
  std::string var;
  std::string value;
  /// Element index for table models, enumeration position otherwise.
  std::uint64_t id = 0;
};

struct LawReport {
  std::string law;
  LawStatus status = LawStatus::holds;
  std::vector<Binding> witness;
  std::uint64_t cases = 0;
  bool exhaustive = true;
  std::string note;

  bool holds() const { return status == LawStatus::holds; }
  bool fails() const { return status == LawStatus::fails; }

  /// Value bound to `var` in the witness; throws if absent.
  std::uint64_t witness_id(const std::string& var) const;
};

LawReport not_applicable(std::string law, std::string why);

/// True when no report in the list fails (not-applicable counts as passing).
bool all_hold(std::span<const LawReport> reports);
const LawReport* find_law(std::span<const LawReport> reports, const std::string& law);

std::ostream& operator<<(std::ostream& os, const LawReport& r);
std::string to_string(LawStatus s);

/// Limits for universally quantified checks. Spaces larger than
/// `exhaustive_limit` are checked on `samples` random assignments instead.
struct CheckBudget {
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 27;
  std::uint64_t samples = 4096;
  std::uint64_t seed = 0x6b6164;
};

/// One universally quantified variable. `values` is enumerated when the whole
/// space fits the budget; otherwise values are drawn with `sampler` (or
/// uniformly from `values` when no sampler is given).
template <typename T>
struct Quantifier {
  std::string var;
  std::span<const T> values;
  std::function<T(std::mt19937_64&)> sampler;
};

namespace detail {

template <typename T>
std::uint64_t binding_id(const T& v, std::size_t pos) {
  if constexpr (std::is_integral_v<T>) {
    return static_cast<std::uint64_t>(v);
  } else {
    return pos;
  }
}

}  // namespace detail

/// Checks `pred(x1, ..., xk)` for all assignments of the quantifiers and
/// returns the first counterexample found. `fmt` renders values for the witness.
template <typename T, typename Pred, typename Fmt, typename... Qs>
LawReport forall(std::string law, const CheckBudget& budget, Fmt&& fmt, Pred&& pred,
                 const Qs&... qs) {
  constexpr std::size_t K = sizeof...(Qs);
  static_assert(K > 0);
  const std::array<const Quantifier<T>*, K> qv{&qs...};

  LawReport report;
  report.law = std::move(law);

  std::uint64_t space = 1;
  bool enumerable = true;
  for (const auto* q : qv) {
    if (q->values.empty()) {
      enumerable = enumerable && !q->sampler;
      if (q->sampler) space = ~std::uint64_t{0};
      else space = 0;
      continue;
    }
    const auto n = static_cast<std::uint64_t>(q->values.size());
    if (space != 0 && space > budget.exhaustive_limit / n) space = ~std::uint64_t{0};
    else space *= n;
  }

  auto fail_with = [&](const std::array<T, K>& vals, const std::array<std::size_t, K>& pos) {
    report.status = LawStatus::fails;
    for (std::size_t i = 0; i < K; ++i) {
      report.witness.push_back(
          Binding{qv[i]->var, fmt(vals[i]), detail::binding_id(vals[i], pos[i])});
    }
  };

  if (space == 0) return report;

  if (enumerable && space <= budget.exhaustive_limit) {
    std::array<std::size_t, K> idx{};
    auto call = [&]<std::size_t... I>(std::index_sequence<I...>) {
      return pred(qv[I]->values[idx[I]]...);
    };
    while (true) {
      ++report.cases;
      if (!call(std::make_index_sequence<K>{})) {
        std::array<T, K> vals;
        for (std::size_t i = 0; i < K; ++i) vals[i] = qv[i]->values[idx[i]];
        fail_with(vals, idx);
        return report;
      }
      std::size_t d = K;
      while (d > 0) {
        --d;
        if (++idx[d] < qv[d]->values.size()) break;
        idx[d] = 0;
        if (d == 0) return report;
      }
    }
  }

  report.exhaustive = false;
  std::mt19937_64 rng(budget.seed);
  std::array<T, K> vals;
  std::array<std::size_t, K> pos{};
  auto call = [&]<std::size_t... I>(std::index_sequence<I...>) { return pred(vals[I]...); };
  for (std::uint64_t s = 0; s < budget.samples; ++s) {
    for (std::size_t i = 0; i < K; ++i) {
      const auto* q = qv[i];
      if (q->sampler) {
        vals[i] = q->sampler(rng);
        pos[i] = 0;
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, q->values.size() - 1);
        pos[i] = pick(rng);
        vals[i] = q->values[pos[i]];
      }
    }
    ++report.cases;
    if (!call(std::make_index_sequence<K>{})) {
      fail_with(vals, pos);
      return report;
    }
  }
  return report;
}

}  // namespace kad
