#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kad {

/// A binary relation on {1..n} stored as an n x n Boolean adjacency matrix.
/// States are 1-based in the public interface and 0-based in the matrix.
class Relation {
 public:
  using Matrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

  Relation() = default;
  explicit Relation(Eigen::Index n) : m_(Matrix::Zero(n, n)) {}
  explicit Relation(Matrix m);

  static Relation empty(Eigen::Index n) { return Relation(n); }
  static Relation identity(Eigen::Index n);
  static Relation full(Eigen::Index n);
  /// From 1-based pairs; throws std::out_of_range for states outside 1..n.
  static Relation from_pairs(Eigen::Index n, const std::vector<std::pair<int, int>>& pairs);
  /// Subidentity on the given 1-based states.
  static Relation test(Eigen::Index n, const std::vector<int>& states);
  /// Bit (i*n + j) encodes the 0-based pair (i, j). Requires n <= 8.
  static Relation from_bits(Eigen::Index n, std::uint64_t bits);

  Eigen::Index size() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  bool operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  void set(Eigen::Index i, Eigen::Index j, bool v = true) { m_(i, j) = v; }

  std::uint64_t bits() const;
  std::vector<std::pair<int, int>> pairs() const;
  /// 1-based states on the diagonal.
  std::vector<int> diagonal_states() const;
  bool is_empty() const { return !m_.any(); }
  bool is_subidentity() const;
  std::string to_string() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.size() == b.size() && a.m_ == b.m_;
  }
  friend bool operator<(const Relation& a, const Relation& b);

 private:
  Matrix m_;
};

Relation operator+(const Relation& a, const Relation& b);
/// Relational composition.
Relation operator*(const Relation& a, const Relation& b);
/// Inclusion.
bool included(const Relation& a, const Relation& b);
Relation transpose(const Relation& r);
/// Reflexive-transitive closure.
Relation closure(const Relation& r);
/// Transitive closure.
Relation transitive_closure(const Relation& r);
/// Intersection.
Relation meet(const Relation& a, const Relation& b);
/// Subidentity on states with an outgoing pair.
Relation domain_of(const Relation& r);
/// Subidentity on states with an incoming pair.
Relation codomain_of(const Relation& r);

}  // namespace kad
