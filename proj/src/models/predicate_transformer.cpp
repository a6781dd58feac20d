#include "kad/models/predicate_transformer.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "kad/error.hpp"

namespace kad {

Transformer transformer_of(const DomainStructure& d, Element a) {
  Transformer f;
  f.reserve(d.tests().size());
  for (Element p : d.tests()) f.push_back(d.preimage(a, p));
  return f;
}

std::vector<Transformer> transformer_tests(const DomainStructure& d) {
  std::vector<Transformer> out;
  for (Element p : d.tests()) out.push_back(transformer_of(d, p));
  return out;
}

ModelHandle<Transformer> predicate_transformer_model(const DomainStructure& d) {
  if (!d.has_star()) throw missing_capability("predicate transformers need a star");
  auto dom = std::make_shared<const DomainStructure>(d);
  const auto& tests = dom->tests();
  // Position of each test in the table.
  auto pos = std::make_shared<std::vector<std::size_t>>(dom->size(), 0);
  for (std::size_t i = 0; i < tests.size(); ++i) (*pos)[tests[i]] = i;

  auto all = std::make_shared<std::vector<Transformer>>();
  {
    std::set<Transformer> seen;
    for (Element a = 0; a < dom->size(); ++a) {
      auto f = transformer_of(*dom, a);
      if (seen.insert(f).second) all->push_back(std::move(f));
    }
  }

  ModelHandle<Transformer> m;
  m.name = "transformers";
  m.add_fn = [dom](const Transformer& f, const Transformer& g) {
    Transformer h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = dom->add(f[i], g[i]);
    return h;
  };
  m.mul_fn = [pos](const Transformer& f, const Transformer& g) {
    Transformer h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[(*pos)[g[i]]];
    return h;
  };
  m.star_fn = [dom, pos](const Transformer& f) {
    const auto& ts = dom->tests();
    Transformer h(f.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      Element x = ts[i];
      while (true) {
        const Element next = dom->add(ts[i], f[(*pos)[x]]);
        if (next == x) break;
        x = next;
      }
      h[i] = x;
    }
    return h;
  };
  m.zero_value = transformer_of(*dom, dom->zero());
  m.one_value = transformer_of(*dom, dom->one());
  m.finite = true;
  m.enumerate_fn = [all] { return *all; };
  m.sample_fn = [all](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, all->size() - 1);
    return (*all)[pick(rng)];
  };
  m.format_fn = [dom](const Transformer& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ',';
      out += dom->format(f[i]);
    }
    return out + "]";
  };
  return m;
}

}  // namespace kad
