#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kad/models/model_handle.hpp"

namespace kad {

/// A finite set of words; the empty string is the empty word.
using Language = std::set<std::string>;

/// Sets of words over `alphabet` of length at most `maxlen`. Concatenation
/// drops words longer than `maxlen`; star is the union of truncated powers.
/// Only carriers with at most 20 words are listable.
ModelHandle<Language> bounded_language_model(const std::string& alphabet, std::size_t maxlen);

/// Sets of vertex sequences of length at most `maxlen` under the fusion
/// product: x.s fuses with t.y only when the last vertex of the first equals
/// the first vertex of the second. The empty sequence fuses only with itself.
/// The unit is the set of all single vertices plus the empty sequence.
/// Requires maxlen >= 1.
ModelHandle<Language> bounded_path_model(const std::string& vertices, std::size_t maxlen);

/// All words over `alphabet` up to length `maxlen`, shortest first.
std::vector<std::string> words_up_to(const std::string& alphabet, std::size_t maxlen);

/// Fusion of two sequences; nullopt when undefined.
std::optional<std::string> fuse(const std::string& s, const std::string& t);

std::string format_language(const Language& l);

}  // namespace kad
