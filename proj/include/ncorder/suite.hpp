#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ncorder {

struct PropertyResult
{
	std::string name;
	int cases = 0;
	int failures = 0;
};

struct SuiteOptions
{
	int cases = 100;
	std::uint64_t seed = 0;
};

/// Runs every module invariant as a randomized or exhaustive property,
/// writing one line per property. Deterministic in (cases, seed).
std::vector<PropertyResult> run_property_suite(const SuiteOptions& options, std::ostream& out);

bool suite_passed(const std::vector<PropertyResult>& results);

} // namespace ncorder
