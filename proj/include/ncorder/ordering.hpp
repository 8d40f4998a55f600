#pragma once

#include "ncorder/algebra.hpp"

#include <functional>

namespace ncorder {

/// A monomial ordering rule: a rank comparator over generator keys.
/// Higher-ranked generators are placed farther LEFT in the ordered word;
/// equal-rank occurrences keep their input order (stable sort). Ranking
/// looks at (id, time) only — bookkeeping tags never influence it.
class MonomialOrdering
{
  public:
	/// Returns <0, 0, >0 as a ranks below, equal to, above b.
	using Comparator = std::function<int(const Generator&, const Generator&)>;

	/// Later times outrank earlier ones. Generators without a time label
	/// rank by their id, numerically when the id is all digits.
	static MonomialOrdering time();
	/// Reverse of time(): earlier times rank highest.
	static MonomialOrdering anti_time();
	/// Lexicographically larger ids rank higher (Z above A).
	static MonomialOrdering alpha();
	/// Letter-class rule: ids earlier in the list rank higher; ids within
	/// one class tie; unlisted ids rank below all classes.
	static MonomialOrdering letter_classes(std::vector<std::string> ids_high_to_low);
	/// Explicit rank list, leftmost = highest. Unknown keys are rejected.
	static MonomialOrdering permutation(std::vector<std::string> ids_high_to_low);
	static MonomialOrdering custom(std::string name, Comparator cmp);

	/// CLI grammar: time | antitime | alpha | nxy:X,Y | perm:k1,k2,...
	static MonomialOrdering from_spec(const std::string& spec);

	const std::string& name() const { return name_; }

	int compare_rank(const Generator& a, const Generator& b) const { return cmp_(a, b); }

	/// Unit step of the rule: 1 iff b strictly outranks a.
	int theta(const Generator& b, const Generator& a) const
	{
		return compare_rank(b, a) > 0 ? 1 : 0;
	}

	/// Stable permutation of the word per the rule.
	Word apply(const Word& w) const;

	/// Linear extension: orders every word, merging coincident results.
	NCPoly apply(const NCPoly& p) const;

  private:
	MonomialOrdering(std::string name, Comparator cmp)
	    : name_(std::move(name)), cmp_(std::move(cmp))
	{
	}

	std::string name_;
	Comparator cmp_;
};

/// A weighted family of permutations per input length; weights sum to 1.
class WeightedOrdering
{
  public:
	using Permutation = std::vector<int>; // output slot i takes input factor perm[i]
	using Family = std::vector<std::pair<Rational, Permutation>>;

	static constexpr int kWeylLengthCap = 8;

	/// Full symmetrization: all n! permutations with weight 1/n!.
	static WeightedOrdering weyl(int length_cap = kWeylLengthCap);

	const std::string& name() const { return name_; }
	Family family(int n) const;
	NCPoly apply(const Word& w) const;
	NCPoly apply(const NCPoly& p) const;

  private:
	WeightedOrdering(std::string name, std::function<Family(int)> family)
	    : name_(std::move(name)), family_(std::move(family))
	{
	}

	std::string name_;
	std::function<Family(int)> family_;
};

/// (1/n!) sum over all permutations of w. Lengths above the cap are
/// rejected to bound the n! blowup.
NCPoly weyl_symmetrize(const Word& w, int length_cap = WeightedOrdering::kWeylLengthCap);

} // namespace ncorder
