#include "kad/models/conway.hpp"

#include <stdexcept>

namespace kad {

namespace {

using Rows = std::vector<std::vector<std::string>>;

FiniteSemiring a2() {
  return FiniteSemiring::from_names({"0", "1"},
                                    Rows{{"0", "1"}, {"1", "1"}},
                                    Rows{{"0", "0"}, {"0", "1"}},
                                    "0", "1", std::vector<std::string>{"1", "1"});
}

// a above 1.
FiniteSemiring a3_1() {
  return FiniteSemiring::from_names({"0", "a", "1"},
                                    Rows{{"0", "a", "1"}, {"a", "a", "a"}, {"1", "a", "1"}},
                                    Rows{{"0", "0", "0"}, {"0", "a", "a"}, {"0", "a", "1"}},
                                    "0", "1", std::vector<std::string>{"1", "a", "1"});
}

// a strictly between 0 and 1, a*a = 0.
FiniteSemiring a3_2() {
  return FiniteSemiring::from_names({"0", "a", "1"},
                                    Rows{{"0", "a", "1"}, {"a", "a", "1"}, {"1", "1", "1"}},
                                    Rows{{"0", "0", "0"}, {"0", "0", "a"}, {"0", "a", "1"}},
                                    "0", "1", std::vector<std::string>{"1", "1", "1"});
}

// As A3_2 except a*a = a.
FiniteSemiring a3_3() {
  return FiniteSemiring::from_names({"0", "a", "1"},
                                    Rows{{"0", "a", "1"}, {"a", "a", "1"}, {"1", "1", "1"}},
                                    Rows{{"0", "0", "0"}, {"0", "a", "a"}, {"0", "a", "1"}},
                                    "0", "1", std::vector<std::string>{"1", "1", "1"});
}

// Chain 0 < a < 1 < b.
FiniteSemiring a4_1() {
  return FiniteSemiring::from_names(
      {"0", "a", "1", "b"},
      Rows{{"0", "a", "1", "b"}, {"a", "a", "1", "b"}, {"1", "1", "1", "b"}, {"b", "b", "b", "b"}},
      Rows{{"0", "0", "0", "0"}, {"0", "0", "a", "a"}, {"0", "a", "1", "b"}, {"0", "a", "b", "b"}},
      "0", "1", std::vector<std::string>{"1", "1", "1", "b"});
}

}  // namespace

const std::vector<std::string>& conway_model_names() {
  static const std::vector<std::string> names{"A2", "A3_1", "A3_2", "A3_3", "A4_1"};
  return names;
}

FiniteSemiring conway_model(std::string_view name) {
  if (name == "A2") return a2();
  if (name == "A3_1") return a3_1();
  if (name == "A3_2") return a3_2();
  if (name == "A3_3") return a3_3();
  if (name == "A4_1") return a4_1();
  throw std::invalid_argument("unknown Conway model '" + std::string(name) + "'");
}

}  // namespace kad
