#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gvz/group.hpp"

namespace gvz::spec {

using Json = nlohmann::json;

// Accepted documents:
//   {"type":"gn","p":P,"n":N}
//   {"type":"perm","points":D,"generators":[[[1,2,3],[4,5]], ...]}
//   {"type":"cyclic","n":M}
//   {"type":"product","factors":[spec, ...]}
//   {"type":"named","name":S}
// Unknown keys, missing keys and non-integer numbers are rejected with InputError.

Json parse(std::string_view text);
void validate(const Json& spec);

/// Sorted keys, no insignificant whitespace.
std::string canonical(const Json& spec);

GroupPtr build(const Json& spec, const EnumerationOptions& options = {});

/// (p, n) when the spec denotes a G_n group, including the catalog aliases.
std::optional<std::pair<int, int>> gn_parameters(const Json& spec);

Json gn(int p, int n);
/// Regular permutation representation of an enumerated group.
Json regular_permutation(const GroupPtr& group);

}  // namespace gvz::spec
