#include "kad/models/relation.hpp"

#include <sstream>
#include <stdexcept>

namespace kad {

Relation::Relation(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("relation matrix must be square");
}

Relation Relation::identity(Eigen::Index n) { return Relation(Matrix::Identity(n, n)); }

Relation Relation::full(Eigen::Index n) { return Relation(Matrix::Constant(n, n, true)); }

Relation Relation::from_pairs(Eigen::Index n, const std::vector<std::pair<int, int>>& pairs) {
  Relation r(n);
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("state outside 1..n");
    r.m_(i - 1, j - 1) = true;
  }
  return r;
}

Relation Relation::test(Eigen::Index n, const std::vector<int>& states) {
  Relation r(n);
  for (int s : states) {
    if (s < 1 || s > n) throw std::out_of_range("state outside 1..n");
    r.m_(s - 1, s - 1) = true;
  }
  return r;
}

Relation Relation::from_bits(Eigen::Index n, std::uint64_t bits) {
  if (n > 8) throw std::invalid_argument("bit encoding needs n <= 8");
  Relation r(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) r.m_(i, j) = (bits >> (i * n + j)) & 1u;
  }
  return r;
}

std::uint64_t Relation::bits() const {
  if (size() > 8) throw std::invalid_argument("bit encoding needs n <= 8");
  std::uint64_t out = 0;
  const Eigen::Index n = size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m_(i, j)) out |= std::uint64_t{1} << (i * n + j);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (Eigen::Index i = 0; i < size(); ++i) {
    for (Eigen::Index j = 0; j < size(); ++j) {
      if (m_(i, j)) out.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  }
  return out;
}

std::vector<int> Relation::diagonal_states() const {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < size(); ++i) {
    if (m_(i, i)) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

bool Relation::is_subidentity() const {
  for (Eigen::Index i = 0; i < size(); ++i) {
    for (Eigen::Index j = 0; j < size(); ++j) {
      if (i != j && m_(i, j)) return false;
    }
  }
  return true;
}

std::string Relation::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [i, j] : pairs()) {
    if (!first) os << ',';
    first = false;
    os << '(' << i << ',' << j << ')';
  }
  os << '}';
  return os.str();
}

bool operator<(const Relation& a, const Relation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const Eigen::Index n = a.size();
  for (Eigen::Index k = n * n; k-- > 0;) {
    const bool x = a.m_(k / n, k % n), y = b.m_(k / n, k % n);
    if (x != y) return y;
  }
  return false;
}

Relation operator+(const Relation& a, const Relation& b) {
  return Relation(Relation::Matrix(a.matrix().array() || b.matrix().array()));
}

Relation operator*(const Relation& a, const Relation& b) {
  const Eigen::MatrixXi product = a.matrix().cast<int>() * b.matrix().cast<int>();
  return Relation(Relation::Matrix(product.array() > 0));
}

bool included(const Relation& a, const Relation& b) {
  return !(a.matrix().array() && !b.matrix().array()).any();
}

Relation transpose(const Relation& r) { return Relation(Relation::Matrix(r.matrix().transpose())); }

Relation closure(const Relation& r) {
  Relation acc = Relation::identity(r.size()) + r;
  while (true) {
    Relation next = acc * acc;
    if (next == acc) return acc;
    acc = std::move(next);
  }
}

Relation transitive_closure(const Relation& r) { return r * closure(r); }

Relation meet(const Relation& a, const Relation& b) {
  return Relation(Relation::Matrix(a.matrix().array() && b.matrix().array()));
}

Relation domain_of(const Relation& r) {
  Relation out(r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) out.set(i, i, r.matrix().row(i).any());
  return out;
}

Relation codomain_of(const Relation& r) {
  Relation out(r.size());
  for (Eigen::Index j = 0; j < r.size(); ++j) out.set(j, j, r.matrix().col(j).any());
  return out;
}

}  // namespace kad
