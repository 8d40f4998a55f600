#include "ncorder/algebra.hpp"

#include <sstream>

namespace ncorder {

std::string to_string(const Generator& g)
{
	std::string s = g.id;
	if (g.time)
		s += "@" + std::to_string(*g.time);
	if (g.tag)
		s += "#" + *g.tag;
	return s;
}

std::string to_string(const Word& w)
{
	if (w.empty())
		return "1";
	std::string s;
	for (std::size_t i = 0; i < w.size(); ++i)
	{
		if (i)
			s += "*";
		s += to_string(w[i]);
	}
	return s;
}

NCPoly NCPoly::without_tags() const
{
	NCPoly p;
	for (const auto& [w, c] : terms_)
	{
		Word stripped = w;
		for (auto& g : stripped)
			g.tag.reset();
		p.add_term(stripped, c);
	}
	return p;
}

NCPoly NCPoly::substituted(const Generator& target, const NCPoly& replacement) const
{
	NCPoly out;
	for (const auto& [w, c] : terms_)
	{
		NCPoly acc = NCPoly(c);
		for (const auto& g : w)
			acc *= (g == target) ? replacement : NCPoly::generator(g);
		out += acc;
	}
	return out;
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

NCPoly ad_power(const NCPoly& y, const NCPoly& x, int n)
{
	if (n < 0)
		throw std::invalid_argument("ad_power with negative exponent");
	NCPoly r = x;
	for (int i = 0; i < n; ++i)
		r = commutator(y, r);
	return r;
}

std::set<Generator> support(const NCPoly& p)
{
	std::set<Generator> gens;
	for (const auto& [w, c] : p.terms())
		gens.insert(w.begin(), w.end());
	return gens;
}

std::string to_string(const NCPoly& p)
{
	if (p.is_zero())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (const auto& [w, c] : p.terms())
	{
		bool negative = c < 0;
		Rational mag = negative ? Rational(-c) : c;
		if (first)
			out << (negative ? "-" : "");
		else
			out << (negative ? " - " : " + ");
		first = false;
		if (w.empty())
			out << to_string(mag);
		else
		{
			if (mag != 1)
				out << to_string(mag) << "*";
			out << to_string(w);
		}
	}
	return out.str();
}

GradedSeries exp_truncated(const NCPoly& p, int n)
{
	if (n < 0)
		throw std::invalid_argument("truncation degree must be nonnegative");
	if (p.constant_term() != 0)
		throw std::invalid_argument("exp_truncated requires a vanishing constant term");
	NCPoly acc(1);
	NCPoly power(1);
	for (int k = 1; k <= n; ++k)
	{
		power = (power * p).truncated(n);
		if (power.is_zero())
			break;
		power /= Rational(k);
		acc += power;
	}
	return GradedSeries::split(acc, n);
}

GradedSeries log_truncated(const GradedSeries& s)
{
	if (s.component(0) != NCPoly(1))
		throw std::invalid_argument("log_truncated requires degree-0 component equal to 1");
	int n = s.max_degree();
	NCPoly u = s.to_poly() - NCPoly(1);
	NCPoly acc;
	NCPoly power(1);
	for (int k = 1; k <= n; ++k)
	{
		power = (power * u).truncated(n);
		if (power.is_zero())
			break;
		acc += power * Rational(k % 2 ? 1 : -1, k);
	}
	return GradedSeries::split(acc, n);
}

std::string to_string(const GradedSeries& s)
{
	std::ostringstream out;
	for (int d = 0; d <= s.max_degree(); ++d)
		out << "[" << d << "] " << to_string(s.component(d)) << "\n";
	return out.str();
}

} // namespace ncorder
