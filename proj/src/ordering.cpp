#include "ncorder/ordering.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>

namespace ncorder {

namespace {

bool all_digits(const std::string& s)
{
	if (s.empty() || s.size() > 18)
		return false;
	return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Rank key for the time rule: the time label when present, otherwise the
// id (numeric ids compare as numbers and below any string-keyed id).
struct TimeKey
{
	bool numeric;
	long long value;
	std::string text;
};

TimeKey time_key(const Generator& g)
{
	if (g.time)
		return {true, *g.time, {}};
	if (all_digits(g.id))
		return {true, std::stoll(g.id), {}};
	return {false, 0, g.id};
}

int compare_time_keys(const Generator& a, const Generator& b)
{
	TimeKey ka = time_key(a), kb = time_key(b);
	if (ka.numeric != kb.numeric)
		return ka.numeric ? -1 : 1;
	if (ka.numeric)
		return ka.value < kb.value ? -1 : ka.value > kb.value ? 1 : 0;
	return ka.text < kb.text ? -1 : ka.text > kb.text ? 1 : 0;
}

std::vector<std::string> split_csv(const std::string& s)
{
	std::vector<std::string> out;
	std::size_t start = 0;
	while (start <= s.size())
	{
		std::size_t comma = s.find(',', start);
		if (comma == std::string::npos)
		{
			out.push_back(s.substr(start));
			break;
		}
		out.push_back(s.substr(start, comma - start));
		start = comma + 1;
	}
	return out;
}

} // namespace

MonomialOrdering MonomialOrdering::time()
{
	return MonomialOrdering("time", compare_time_keys);
}

MonomialOrdering MonomialOrdering::anti_time()
{
	return MonomialOrdering("antitime",
	                        [](const Generator& a, const Generator& b) { return compare_time_keys(b, a); });
}

MonomialOrdering MonomialOrdering::alpha()
{
	return MonomialOrdering("alpha", [](const Generator& a, const Generator& b) {
		return a.id < b.id ? -1 : a.id > b.id ? 1 : 0;
	});
}

MonomialOrdering MonomialOrdering::letter_classes(std::vector<std::string> ids_high_to_low)
{
	std::string name = "nxy:";
	auto ranks = std::make_shared<std::map<std::string, int>>();
	int n = static_cast<int>(ids_high_to_low.size());
	for (int i = 0; i < n; ++i)
	{
		if (i)
			name += ",";
		name += ids_high_to_low[static_cast<std::size_t>(i)];
		ranks->emplace(ids_high_to_low[static_cast<std::size_t>(i)], n - i);
	}
	return MonomialOrdering(name, [ranks](const Generator& a, const Generator& b) {
		auto ia = ranks->find(a.id), ib = ranks->find(b.id);
		int ra = ia == ranks->end() ? 0 : ia->second;
		int rb = ib == ranks->end() ? 0 : ib->second;
		if (ra != rb)
			return ra < rb ? -1 : 1;
		if (ra == 0) // both unlisted: keep the comparator total
			return a.id < b.id ? -1 : a.id > b.id ? 1 : 0;
		return 0;
	});
}

MonomialOrdering MonomialOrdering::permutation(std::vector<std::string> ids_high_to_low)
{
	std::string name = "perm:";
	auto ranks = std::make_shared<std::map<std::string, int>>();
	int n = static_cast<int>(ids_high_to_low.size());
	for (int i = 0; i < n; ++i)
	{
		if (i)
			name += ",";
		name += ids_high_to_low[static_cast<std::size_t>(i)];
		if (!ranks->emplace(ids_high_to_low[static_cast<std::size_t>(i)], n - i).second)
			throw std::invalid_argument("duplicate key in perm ordering: " +
			                            ids_high_to_low[static_cast<std::size_t>(i)]);
	}
	return MonomialOrdering(name, [ranks](const Generator& a, const Generator& b) {
		auto ia = ranks->find(a.id), ib = ranks->find(b.id);
		if (ia == ranks->end())
			throw std::out_of_range("key outside ordering domain: " + a.id);
		if (ib == ranks->end())
			throw std::out_of_range("key outside ordering domain: " + b.id);
		return ia->second < ib->second ? -1 : ia->second > ib->second ? 1 : 0;
	});
}

MonomialOrdering MonomialOrdering::custom(std::string name, Comparator cmp)
{
	return MonomialOrdering(std::move(name), std::move(cmp));
}

MonomialOrdering MonomialOrdering::from_spec(const std::string& spec)
{
	if (spec == "time")
		return time();
	if (spec == "antitime")
		return anti_time();
	if (spec == "alpha")
		return alpha();
	if (spec.rfind("nxy:", 0) == 0)
	{
		auto ids = split_csv(spec.substr(4));
		if (ids.empty() || ids.front().empty())
			throw std::invalid_argument("nxy ordering needs at least one letter class");
		return letter_classes(std::move(ids));
	}
	if (spec.rfind("perm:", 0) == 0)
	{
		auto ids = split_csv(spec.substr(5));
		if (ids.empty() || ids.front().empty())
			throw std::invalid_argument("perm ordering needs at least one key");
		return permutation(std::move(ids));
	}
	throw std::invalid_argument("unknown ordering spec: '" + spec +
	                            "' (expected time|antitime|alpha|nxy:...|perm:...)");
}

Word MonomialOrdering::apply(const Word& w) const
{
	Word out = w;
	std::stable_sort(out.begin(), out.end(),
	                 [this](const Generator& a, const Generator& b) { return cmp_(a, b) > 0; });
	return out;
}

NCPoly MonomialOrdering::apply(const NCPoly& p) const
{
	NCPoly out;
	for (const auto& [w, c] : p.terms())
		out.add_term(apply(w), c);
	return out;
}

WeightedOrdering WeightedOrdering::weyl(int length_cap)
{
	return WeightedOrdering("weyl", [length_cap](int n) {
		if (n < 0 || n > length_cap)
			throw std::invalid_argument("weyl symmetrization beyond configured length cap");
		Family fam;
		Permutation perm(static_cast<std::size_t>(n));
		std::iota(perm.begin(), perm.end(), 0);
		Rational w = Rational(1) / factorial(n);
		do
			fam.emplace_back(w, perm);
		while (std::next_permutation(perm.begin(), perm.end()));
		return fam;
	});
}

WeightedOrdering::Family WeightedOrdering::family(int n) const
{
	Family fam = family_(n);
	Rational total;
	for (const auto& [w, perm] : fam)
		total += w;
	if (total != 1)
		throw std::logic_error("weighted ordering weights do not sum to one");
	return fam;
}

NCPoly WeightedOrdering::apply(const Word& w) const
{
	NCPoly out;
	for (const auto& [weight, perm] : family(static_cast<int>(w.size())))
	{
		Word arranged;
		arranged.reserve(w.size());
		for (int src : perm)
			arranged.push_back(w[static_cast<std::size_t>(src)]);
		out.add_term(arranged, weight);
	}
	return out;
}

NCPoly WeightedOrdering::apply(const NCPoly& p) const
{
	NCPoly out;
	for (const auto& [w, c] : p.terms())
		out += apply(w) * c;
	return out;
}

NCPoly weyl_symmetrize(const Word& w, int length_cap)
{
	return WeightedOrdering::weyl(length_cap).apply(w);
}

} // namespace ncorder
