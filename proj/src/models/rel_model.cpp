#include "kad/models/rel_model.hpp"

#include <stdexcept>

namespace kad {

Relation random_relation(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Relation r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r.set(i, j, coin(rng));
  }
  return r;
}

ModelHandle<Relation> rel_model(int n) {
  if (n < 1) throw std::invalid_argument("rel_model needs n >= 1");
  ModelHandle<Relation> m;
  m.name = "rel(" + std::to_string(n) + ")";
  m.add_fn = [](const Relation& a, const Relation& b) { return a + b; };
  m.mul_fn = [](const Relation& a, const Relation& b) { return a * b; };
  m.star_fn = [](const Relation& a) { return closure(a); };
  m.conv_fn = [](const Relation& a) { return transpose(a); };
  m.zero_value = Relation::empty(n);
  m.one_value = Relation::identity(n);
  m.top_value = Relation::full(n);
  m.finite = true;
  if (n <= 4) {
    m.enumerate_fn = [n] {
      std::vector<Relation> out;
      const std::uint64_t count = std::uint64_t{1} << (n * n);
      out.reserve(count);
      for (std::uint64_t bits = 0; bits < count; ++bits) out.push_back(Relation::from_bits(n, bits));
      return out;
    };
  }
  m.sample_fn = [n](std::mt19937_64& rng) {
    const double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
    return random_relation(n, density, rng);
  };
  m.format_fn = [](const Relation& r) { return r.to_string(); };
  return m;
}

DomainStructure rel_domain(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("rel_domain is tabulated only for 1 <= n <= 3");
  auto mat = materialize(rel_model(n));
  return compute_predomain(TestAlgebra::of_subidentities(mat.semiring));
}

}  // namespace kad
