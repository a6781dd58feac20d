#include "kad/finite_semiring.hpp"

#include <algorithm>
#include <stdexcept>

#include "kad/error.hpp"

namespace kad {

namespace {

void check_table(const std::vector<Element>& table, std::size_t expected, std::size_t n,
                 const char* what) {
  if (table.size() != expected) {
    throw invalid_structure(std::string(what) + " table has wrong size");
  }
  for (Element e : table) {
    if (e >= n) throw invalid_structure(std::string(what) + " table entry out of range");
  }
}

}  // namespace

FiniteSemiring::FiniteSemiring(std::vector<std::string> carrier, std::vector<Element> add,
                               std::vector<Element> mul, Element zero, Element one,
                               std::optional<std::vector<Element>> star,
                               std::optional<std::vector<Element>> conv) {
  const std::size_t n = carrier.size();
  if (n == 0) throw invalid_structure("empty carrier");
  check_table(add, n * n, n, "add");
  check_table(mul, n * n, n, "mul");
  if (star) check_table(*star, n, n, "star");
  if (conv) check_table(*conv, n, n, "conv");
  if (zero >= n || one >= n) throw invalid_structure("zero/one out of range");
  if (zero == one) throw invalid_structure("zero and one coincide (trivial semiring)");
  t_ = std::make_shared<const Tables>(Tables{std::move(carrier), std::move(add), std::move(mul),
                                             zero, one, std::move(star), std::move(conv)});
  bind();
}

FiniteSemiring::FiniteSemiring(std::shared_ptr<const Tables> t) : t_(std::move(t)) { bind(); }

void FiniteSemiring::bind() {
  n_ = t_->names.size();
  add_ = t_->add.data();
  mul_ = t_->mul.data();
  star_ = t_->star ? t_->star->data() : nullptr;
  conv_ = t_->conv ? t_->conv->data() : nullptr;
  zero_ = t_->zero;
  one_ = t_->one;
}

FiniteSemiring FiniteSemiring::from_names(
    const std::vector<std::string>& carrier, const std::vector<std::vector<std::string>>& add,
    const std::vector<std::vector<std::string>>& mul, const std::string& zero,
    const std::string& one, const std::optional<std::vector<std::string>>& star,
    const std::optional<std::vector<std::string>>& conv) {
  const std::size_t n = carrier.size();
  auto idx = [&](const std::string& name) -> Element {
    auto it = std::find(carrier.begin(), carrier.end(), name);
    if (it == carrier.end()) throw invalid_structure("unknown element name '" + name + "'");
    return static_cast<Element>(it - carrier.begin());
  };
  auto square = [&](const std::vector<std::vector<std::string>>& rows, const char* what) {
    if (rows.size() != n) throw invalid_structure(std::string(what) + " table is not total");
    std::vector<Element> out;
    out.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw invalid_structure(std::string(what) + " table is not total");
      for (const auto& cell : row) out.push_back(idx(cell));
    }
    return out;
  };
  auto unary = [&](const std::optional<std::vector<std::string>>& col, const char* what)
      -> std::optional<std::vector<Element>> {
    if (!col) return std::nullopt;
    if (col->size() != n) throw invalid_structure(std::string(what) + " table is not total");
    std::vector<Element> out;
    for (const auto& cell : *col) out.push_back(idx(cell));
    return out;
  };
  {
    std::vector<std::string> sorted = carrier;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw invalid_structure("duplicate element names");
    }
  }
  return FiniteSemiring(carrier, square(add, "add"), square(mul, "mul"), idx(zero), idx(one),
                        unary(star, "star"), unary(conv, "conv"));
}

std::vector<Element> FiniteSemiring::elements() const {
  std::vector<Element> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<Element>(i);
  return out;
}

Element FiniteSemiring::star(Element a) const {
  if (!star_) throw missing_capability("structure has no star table");
  return star_[a];
}

Element FiniteSemiring::conv(Element a) const {
  if (!conv_) throw missing_capability("structure has no converse table");
  return conv_[a];
}

const std::string& FiniteSemiring::name(Element a) const { return t_->names.at(a); }
const std::vector<std::string>& FiniteSemiring::carrier() const { return t_->names; }

Element FiniteSemiring::index_of(std::string_view name) const {
  const auto& names = t_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("unknown element '" + std::string(name) + "'");
  return static_cast<Element>(it - names.begin());
}

const std::vector<Element>& FiniteSemiring::add_table() const { return t_->add; }
const std::vector<Element>& FiniteSemiring::mul_table() const { return t_->mul; }
const std::optional<std::vector<Element>>& FiniteSemiring::star_table() const {
  return t_->star;
}
const std::optional<std::vector<Element>>& FiniteSemiring::conv_table() const {
  return t_->conv;
}

FiniteSemiring FiniteSemiring::with_star(std::optional<std::vector<Element>> star) const {
  return FiniteSemiring(t_->names, t_->add, t_->mul, zero_, one_, std::move(star), t_->conv);
}

FiniteSemiring FiniteSemiring::with_conv(std::optional<std::vector<Element>> conv) const {
  return FiniteSemiring(t_->names, t_->add, t_->mul, zero_, one_, t_->star, std::move(conv));
}

FiniteSemiring FiniteSemiring::with_add_entry(Element a, Element b, Element value) const {
  auto add = t_->add;
  add.at(a * n_ + b) = value;
  return FiniteSemiring(t_->names, std::move(add), t_->mul, zero_, one_, t_->star, t_->conv);
}

FiniteSemiring FiniteSemiring::with_mul_entry(Element a, Element b, Element value) const {
  auto mul = t_->mul;
  mul.at(a * n_ + b) = value;
  return FiniteSemiring(t_->names, t_->add, std::move(mul), zero_, one_, t_->star, t_->conv);
}

FiniteSemiring FiniteSemiring::with_star_entry(Element a, Element value) const {
  if (!t_->star) throw missing_capability("structure has no star table");
  auto star = *t_->star;
  star.at(a) = value;
  return with_star(std::move(star));
}

std::optional<Element> FiniteSemiring::top() const {
  for (Element t = 0; t < n_; ++t) {
    bool greatest = true;
    for (Element x = 0; x < n_ && greatest; ++x) greatest = leq(x, t);
    if (greatest) return t;
  }
  return std::nullopt;
}

bool operator==(const FiniteSemiring& x, const FiniteSemiring& y) {
  if (x.t_ == y.t_) return true;
  const auto& a = *x.t_;
  const auto& b = *y.t_;
  return a.names == b.names && a.add == b.add && a.mul == b.mul && a.zero == b.zero &&
         a.one == b.one && a.star == b.star && a.conv == b.conv;
}

bool nat_leq(const FiniteSemiring& s, Element a, Element b) {
  if (a >= s.size() || b >= s.size()) throw std::out_of_range("element index out of range");
  return s.leq(a, b);
}

FiniteSemiring opposite(const FiniteSemiring& s) {
  const std::size_t n = s.size();
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) mul[a * n + b] = s.mul(b, a);
  }
  return FiniteSemiring(s.carrier(), s.add_table(), std::move(mul), s.zero(), s.one(),
                        s.star_table(), s.conv_table());
}

}  // namespace kad
