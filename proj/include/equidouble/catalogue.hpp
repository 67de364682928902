#pragma once

#include <string>
#include <vector>

#include "equidouble/dw.hpp"
#include "equidouble/groups.hpp"

namespace equidouble {

/// Built-in test data addressed by stable identifiers. Unknown identifiers
/// raise UsageError.
namespace catalogue {

std::vector<std::string> group_names();
std::vector<std::string> extension_names();
std::vector<std::string> presentation_names();
std::vector<std::string> nerve_names();
std::vector<std::string> weak_action_names();

GroupPtr group(const std::string& name);
GroupExtension extension(const std::string& name);
/// "Sigma_g" takes the genus from `parameter`; other names ignore it.
Presentation presentation(const std::string& name, int parameter = 2);
/// "circle3" takes the monodromy J-element from `parameter`.
CoverNerve nerve(const std::string& name, int parameter = 0);
WeakAction weak_action(const std::string& name);

/// Subgroup generated by all commutators.
std::vector<int> commutator_subgroup(const FiniteGroup& g);
/// Trivial extension G -> G -> 1.
GroupExtension trivial_extension(const GroupPtr& g);

}  // namespace catalogue

}  // namespace equidouble
