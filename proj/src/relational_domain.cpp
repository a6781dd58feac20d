#include "kad/relational_domain.hpp"

#include <stdexcept>

#include "kad/error.hpp"
#include "kad/models/rel_model.hpp"

namespace kad {

RelationalDomain::RelationalDomain(int n, int test_enumeration_limit)
    : n_(n), test_limit_(test_enumeration_limit) {
  if (n < 1) throw std::invalid_argument("relational domain needs n >= 1");
}

std::vector<Relation> RelationalDomain::elements() const {
  if (!enumerable_elements()) throw missing_capability("too many relations to list");
  return rel_model(n_).elements();
}

Relation RelationalDomain::sample_element(std::mt19937_64& rng) const {
  const double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
  return random_relation(n_, density, rng);
}

std::vector<Relation> RelationalDomain::tests() const {
  if (!enumerable_tests()) throw missing_capability("too many tests to list");
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_); ++mask) {
    Relation p(n_);
    for (int i = 0; i < n_; ++i) {
      if ((mask >> i) & 1u) p.set(i, i);
    }
    out.push_back(std::move(p));
  }
  return out;
}

Relation RelationalDomain::sample_test(std::mt19937_64& rng) const {
  std::bernoulli_distribution coin(0.5);
  Relation p(n_);
  for (int i = 0; i < n_; ++i) p.set(i, i, coin(rng));
  return p;
}

Relation RelationalDomain::compl_of(const Relation& p) const {
  if (!is_test(p)) throw evaluation_error("complement of non-test " + p.to_string());
  Relation out(n_);
  for (int i = 0; i < n_; ++i) out.set(i, i, !p(i, i));
  return out;
}

std::vector<Relation> RelationalDomain::atoms() const {
  std::vector<Relation> out;
  for (int i = 1; i <= n_; ++i) out.push_back(Relation::test(n_, {i}));
  return out;
}

Relation RelationalDomain::preimage(const Relation& a, const Relation& p) const {
  if (!is_test(p)) throw evaluation_error("preimage of non-test " + p.to_string());
  const Relation::Matrix& m = a.matrix();
  Relation out(n_);
  for (int j = 0; j < n_; ++j) {
    if (!p(j, j)) continue;
    for (int i = 0; i < n_; ++i) {
      if (m(i, j)) out.set(i, i);
    }
  }
  return out;
}

Relation RelationalDomain::image(const Relation& p, const Relation& a) const {
  if (!is_test(p)) throw evaluation_error("image of non-test " + p.to_string());
  const Relation::Matrix& m = a.matrix();
  Relation out(n_);
  for (int i = 0; i < n_; ++i) {
    if (!p(i, i)) continue;
    for (int j = 0; j < n_; ++j) {
      if (m(i, j)) out.set(j, j);
    }
  }
  return out;
}

}  // namespace kad
