#ifndef SCOMP_ENGINES_HPP
#define SCOMP_ENGINES_HPP

#include <optional>
#include <string>
#include <vector>

#include "scomp/bigint.hpp"
#include "scomp/interpreters.hpp"
#include "scomp/partset.hpp"

namespace scomp {

enum class Engine { Brute, Dio, Dp1, Dp2, Closed, Auto };

std::string engine_name(Engine e);
std::optional<Engine> parse_engine(const std::string& name);

// Whether `engine` can count this set at this n. Brute always can; Dio needs
// a fixed finite set; Dp2 needs a seedable boundary recurrence; Closed needs
// a recognized family.
bool engine_supports(Engine engine, const PartSet& s, int n);

// Runs one engine. Auto resolves via resolve_auto first. Throws
// unsupported_error for inapplicable combinations.
BigInt count_with_engine(const PartSet& s, int n, Engine engine);

// Closed form when a family matches, otherwise the cheaper interpreter.
Engine resolve_auto(const PartSet& s, int n);

// Counting through the first/second interpreter with the trivial cases
// (n <= 1, empty S<=n) handled before any recurrence is built.
BigInt count_via_first(const PartSet& s, int n);
BigInt count_via_second(const PartSet& s, int n);

}  // namespace scomp

#endif
