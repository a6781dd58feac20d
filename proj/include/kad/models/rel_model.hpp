#pragma once

#include "kad/domain.hpp"
#include "kad/models/model_handle.hpp"
#include "kad/models/relation.hpp"

namespace kad {

/// Relations on n states: union, composition, empty relation, identity,
/// reflexive-transitive closure as star, transpose as converse, the full
/// relation as top. Listable up to n = 4, enumerated in bit order.
ModelHandle<Relation> rel_model(int n);

/// rel_model(n) as tables, with all subidentities as tests and the computed
/// domain and codomain. The element index of a relation is its bit encoding.
/// Requires 1 <= n <= 3.
DomainStructure rel_domain(int n);

inline Element rel_index(const Relation& r) { return static_cast<Element>(r.bits()); }
inline Relation rel_value(int n, Element e) { return Relation::from_bits(n, e); }

/// A random relation where each pair is present with probability `density`.
Relation random_relation(int n, double density, std::mt19937_64& rng);

}  // namespace kad
