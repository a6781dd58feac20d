#pragma once

#include <vector>

#include "kad/domain.hpp"
#include "kad/models/model_handle.hpp"

namespace kad {

/// A map test -> test, stored by position in the domain structure's test list.
using Transformer = std::vector<Element>;

/// f_a = (p |-> a : p).
Transformer transformer_of(const DomainStructure& d, Element a);

/// The transformers f_a for all elements a, with pointwise sum, composition
/// and star f*(p) = least x with p + f(x) <= x. Enumerates the distinct f_a.
/// Throws missing_capability when the owner has no star.
ModelHandle<Transformer> predicate_transformer_model(const DomainStructure& d);

/// The transformers f_p for tests p, which form the test set of the model.
std::vector<Transformer> transformer_tests(const DomainStructure& d);

}  // namespace kad
