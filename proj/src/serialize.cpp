#include "ncorder/serialize.hpp"

#include <algorithm>

namespace ncorder {

using nlohmann::json;

namespace {

json generator_to_json(const Generator& g)
{
	json j;
	j["id"] = g.id;
	if (g.tag)
		j["tag"] = *g.tag;
	if (g.time)
		j["time"] = *g.time;
	return j;
}

Generator generator_from_json(const json& j)
{
	Generator g(j.at("id").get<std::string>());
	if (j.contains("tag"))
		g.tag = j.at("tag").get<std::string>();
	if (j.contains("time"))
		g.time = j.at("time").get<int>();
	return g;
}

} // namespace

json poly_to_json(const NCPoly& p)
{
	auto sup = support(p);
	std::vector<Generator> gens(sup.begin(), sup.end());
	json jgens = json::array();
	for (const auto& g : gens)
		jgens.push_back(generator_to_json(g));

	json jterms = json::array();
	for (const auto& [w, c] : p.terms())
	{
		json refs = json::array();
		for (const auto& g : w)
		{
			auto it = std::lower_bound(gens.begin(), gens.end(), g);
			refs.push_back(static_cast<int>(it - gens.begin()));
		}
		jterms.push_back({{"coeff", {{"num", numerator(c).str()}, {"den", denominator(c).str()}}},
		                  {"word", std::move(refs)}});
	}
	return json{{"generators", std::move(jgens)}, {"terms", std::move(jterms)}};
}

NCPoly poly_from_json(const json& j)
{
	std::vector<Generator> gens;
	for (const auto& jg : j.at("generators"))
		gens.push_back(generator_from_json(jg));

	NCPoly p;
	for (const auto& jt : j.at("terms"))
	{
		const json& jc = jt.at("coeff");
		Rational c = make_rational(BigInt(jc.at("num").get<std::string>()),
		                           BigInt(jc.at("den").get<std::string>()));
		Word w;
		for (const auto& ref : jt.at("word"))
		{
			auto idx = ref.get<std::size_t>();
			if (idx >= gens.size())
				throw std::invalid_argument("word entry references a missing generator");
			w.push_back(gens[idx]);
		}
		p.add_term(w, c);
	}
	return p;
}

json report_to_json(const VerificationReport& r)
{
	json jword = json::array();
	for (const auto& g : r.word)
		jword.push_back(to_string(g));
	json jcontr = json::array();
	for (const auto& entry : r.contractions)
		jcontr.push_back(
		    {{"alpha", entry.alpha}, {"beta", entry.beta}, {"poly", poly_to_json(entry.poly)}});
	return json{{"word", std::move(jword)},
	            {"orderings", {{"o", r.ordering_name}, {"oprime", r.ordering_prime_name}}},
	            {"equal", r.equal},
	            {"lhs", poly_to_json(r.lhs)},
	            {"rhs", poly_to_json(r.rhs)},
	            {"contractions", std::move(jcontr)}};
}

Decomposition decomposition_from_json(const json& j)
{
	if (!j.is_object() || j.empty())
		throw std::invalid_argument("decomposition file must be a non-empty object of rows");
	std::vector<std::string> omega;
	std::set<std::string> cols;
	Decomposition::Entries entries;
	for (const auto& [alpha, row] : j.items())
	{
		omega.push_back(alpha);
		if (!row.is_object())
			throw std::invalid_argument("decomposition row must be an object: " + alpha);
		for (const auto& [k, value] : row.items())
		{
			cols.insert(k);
			entries[{alpha, k}] = rational_from_string(value.get<std::string>());
		}
	}
	std::sort(omega.begin(), omega.end());
	return Decomposition(std::move(omega), std::vector<std::string>(cols.begin(), cols.end()),
	                     std::move(entries));
}

json decomposition_to_json(const Decomposition& d)
{
	json j = json::object();
	for (const auto& alpha : d.omega())
	{
		json row = json::object();
		for (const auto& k : d.omega_prime())
		{
			Rational c = d.entry(alpha, k);
			if (c != 0)
				row[k] = to_string(c);
		}
		j[alpha] = std::move(row);
	}
	return j;
}

} // namespace ncorder
