#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kad {

/// Index into the carrier of a finite structure. Names are for I/O only.
using Element = std::uint32_t;

/// A finite semiring given by operation tables over an ordered carrier, with
/// optional star and converse tables. Values are immutable and cheap to copy.
class FiniteSemiring {
 public:
  using value_type = Element;

  FiniteSemiring(std::vector<std::string> carrier, std::vector<Element> add,
                 std::vector<Element> mul, Element zero, Element one,
                 std::optional<std::vector<Element>> star = std::nullopt,
                 std::optional<std::vector<Element>> conv = std::nullopt);

  /// Builds from name tables (`add[i][j]` is the name of carrier[i] + carrier[j]).
  static FiniteSemiring from_names(const std::vector<std::string>& carrier,
                                   const std::vector<std::vector<std::string>>& add,
                                   const std::vector<std::vector<std::string>>& mul,
                                   const std::string& zero, const std::string& one,
                                   const std::optional<std::vector<std::string>>& star = {},
                                   const std::optional<std::vector<std::string>>& conv = {});

  std::size_t size() const { return n_; }
  std::vector<Element> elements() const;

  Element add(Element a, Element b) const { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  bool leq(Element a, Element b) const { return add(a, b) == b; }

  bool has_star() const { return star_ != nullptr; }
  bool has_conv() const { return conv_ != nullptr; }
  /// Throws missing_capability when the star table is absent.
  Element star(Element a) const;
  /// Throws missing_capability when the converse table is absent.
  Element conv(Element a) const;

  const std::string& name(Element a) const;
  std::string format(Element a) const { return name(a); }
  const std::vector<std::string>& carrier() const;
  /// Throws std::out_of_range for unknown names.
  Element index_of(std::string_view name) const;

  const std::vector<Element>& add_table() const;
  const std::vector<Element>& mul_table() const;
  const std::optional<std::vector<Element>>& star_table() const;
  const std::optional<std::vector<Element>>& conv_table() const;

  FiniteSemiring with_star(std::optional<std::vector<Element>> star) const;
  FiniteSemiring with_conv(std::optional<std::vector<Element>> conv) const;
  FiniteSemiring with_add_entry(Element a, Element b, Element value) const;
  FiniteSemiring with_mul_entry(Element a, Element b, Element value) const;
  FiniteSemiring with_star_entry(Element a, Element value) const;

  /// The greatest element under the natural order, if one exists.
  std::optional<Element> top() const;

  friend bool operator==(const FiniteSemiring& x, const FiniteSemiring& y);

 private:
  struct Tables {
    std::vector<std::string> names;
    std::vector<Element> add, mul;
    Element zero, one;
    std::optional<std::vector<Element>> star, conv;
  };

  explicit FiniteSemiring(std::shared_ptr<const Tables> t);
  void bind();

  std::shared_ptr<const Tables> t_;
  std::size_t n_ = 0;
  const Element* add_ = nullptr;
  const Element* mul_ = nullptr;
  const Element* star_ = nullptr;
  const Element* conv_ = nullptr;
  Element zero_ = 0, one_ = 0;
};

/// Natural order: a <= b iff a + b = b. Throws std::out_of_range on bad indices.
bool nat_leq(const FiniteSemiring& s, Element a, Element b);

/// Same carrier with multiplication arguments swapped.
FiniteSemiring opposite(const FiniteSemiring& s);

}  // namespace kad
