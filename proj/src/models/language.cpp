#include "kad/models/language.hpp"

#include <memory>
#include <stdexcept>

namespace kad {

std::vector<std::string> words_up_to(const std::string& alphabet, std::size_t maxlen) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

std::optional<std::string> fuse(const std::string& s, const std::string& t) {
  if (s.empty() || t.empty()) {
    if (s.empty() && t.empty()) return std::string();
    return std::nullopt;
  }
  if (s.back() != t.front()) return std::nullopt;
  return s + t.substr(1);
}

std::string format_language(const Language& l) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : l) {
    if (!first) out += ',';
    first = false;
    out += w.empty() ? "ε" : w;
  }
  return out + "}";
}

namespace {

ModelHandle<Language> truncated_model(std::string name, const std::string& alphabet,
                                      std::size_t maxlen, Language one,
                                      std::function<std::optional<std::string>(const std::string&,
                                                                               const std::string&)>
                                          product) {
  auto words = std::make_shared<const std::vector<std::string>>(words_up_to(alphabet, maxlen));
  ModelHandle<Language> m;
  m.name = std::move(name);
  m.add_fn = [](const Language& a, const Language& b) {
    Language out = a;
    out.insert(b.begin(), b.end());
    return out;
  };
  m.mul_fn = [maxlen, product](const Language& a, const Language& b) {
    Language out;
    for (const auto& u : a) {
      for (const auto& v : b) {
        auto w = product(u, v);
        if (w && w->size() <= maxlen) out.insert(std::move(*w));
      }
    }
    return out;
  };
  m.zero_value = {};
  m.one_value = one;
  m.top_value = Language(words->begin(), words->end());
  const auto mul = m.mul_fn;
  m.star_fn = [mul, one](const Language& a) {
    Language acc = one;
    while (true) {
      Language next = acc;
      for (auto& w : mul(acc, a)) next.insert(w);
      if (next == acc) return acc;
      acc = std::move(next);
    }
  };
  m.finite = true;
  if (words->size() <= 20) {
    m.enumerate_fn = [words] {
      std::vector<Language> out;
      const std::size_t k = words->size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Language l;
        for (std::size_t i = 0; i < k; ++i) {
          if ((mask >> i) & 1u) l.insert((*words)[i]);
        }
        out.push_back(std::move(l));
      }
      return out;
    };
  }
  m.sample_fn = [words](std::mt19937_64& rng) {
    Language l;
    std::bernoulli_distribution coin(0.3);
    for (const auto& w : *words) {
      if (coin(rng)) l.insert(w);
    }
    return l;
  };
  m.format_fn = format_language;
  return m;
}

}  // namespace

ModelHandle<Language> bounded_language_model(const std::string& alphabet, std::size_t maxlen) {
  return truncated_model("language", alphabet, maxlen, Language{""},
                         [](const std::string& u, const std::string& v) {
                           return std::optional<std::string>(u + v);
                         });
}

ModelHandle<Language> bounded_path_model(const std::string& vertices, std::size_t maxlen) {
  if (maxlen < 1) throw std::invalid_argument("path model needs maxlen >= 1 for its unit");
  Language one{""};
  for (char v : vertices) one.insert(std::string(1, v));
  return truncated_model("path", vertices, maxlen, std::move(one), fuse);
}

}  // namespace kad
