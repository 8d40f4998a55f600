#pragma once

#include "ncorder/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ncorder {

/// A symbol of the free algebra. `tag` is a bookkeeping annotation (the
/// parent index a symbol was expanded from during decomposed ordering
/// transforms); `time` is an integer time label for stepped generators.
/// Two generators are equal only if id, tag and time all match.
struct Generator
{
	std::string id;
	std::optional<std::string> tag;
	std::optional<int> time;

	explicit Generator(std::string id_) : id(std::move(id_))
	{
		if (id.empty())
			throw std::invalid_argument("generator with empty id");
	}

	static Generator timed(std::string id_, int t)
	{
		Generator g(std::move(id_));
		g.time = t;
		return g;
	}

	Generator with_tag(std::string t) const
	{
		Generator g = *this;
		g.tag = std::move(t);
		return g;
	}

	Generator without_tag() const
	{
		Generator g = *this;
		g.tag.reset();
		return g;
	}

	auto operator<=>(const Generator&) const = default;
};

/// Display form: id, id@time, id#tag (tags only appear in internal
/// intermediates; the DSL cannot express them).
std::string to_string(const Generator& g);

using Word = std::vector<Generator>;

std::string to_string(const Word& w);

/// Canonical term order: shorter words first, then lexicographic by
/// (id, tag, time) of the factors.
struct WordLess
{
	bool operator()(const Word& a, const Word& b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

/// Element of the free algebra over Generator symbols with exact rational
/// coefficients, kept canonical: no zero terms are ever stored.
class NCPoly
{
  public:
	using TermMap = std::map<Word, Rational, WordLess>;

	NCPoly() = default;
	NCPoly(const Rational& c)
	{
		if (c != 0)
			terms_.emplace(Word{}, c);
	}
	NCPoly(int c) : NCPoly(Rational(c)) {}

	static NCPoly generator(const Generator& g) { return from_word(Word{g}); }
	static NCPoly from_word(const Word& w, const Rational& c = Rational(1))
	{
		NCPoly p;
		if (c != 0)
			p.terms_.emplace(w, c);
		return p;
	}

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const
	{
		return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
	}
	Rational constant_term() const
	{
		auto it = terms_.find(Word{});
		return it == terms_.end() ? Rational(0) : it->second;
	}
	/// Largest word length present (0 for the zero polynomial).
	int max_degree() const
	{
		return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size());
	}
	std::size_t term_count() const { return terms_.size(); }
	const TermMap& terms() const { return terms_; }
	Rational coeff(const Word& w) const
	{
		auto it = terms_.find(w);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	void add_term(const Word& w, const Rational& c)
	{
		if (c == 0)
			return;
		auto [it, inserted] = terms_.emplace(w, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	NCPoly& operator+=(const NCPoly& rhs)
	{
		for (const auto& [w, c] : rhs.terms_)
			add_term(w, c);
		return *this;
	}
	NCPoly& operator-=(const NCPoly& rhs)
	{
		for (const auto& [w, c] : rhs.terms_)
			add_term(w, -c);
		return *this;
	}
	NCPoly& operator*=(const NCPoly& rhs)
	{
		*this = *this * rhs;
		return *this;
	}
	NCPoly& operator*=(const Rational& c)
	{
		if (c == 0)
			terms_.clear();
		else
			for (auto& [w, v] : terms_)
				v *= c;
		return *this;
	}
	NCPoly& operator/=(const Rational& c)
	{
		if (c == 0)
			throw std::invalid_argument("division of polynomial by zero");
		for (auto& [w, v] : terms_)
			v /= c;
		return *this;
	}

	NCPoly operator-() const
	{
		NCPoly p = *this;
		for (auto& [w, v] : p.terms_)
			v = -v;
		return p;
	}

	friend NCPoly operator+(NCPoly a, const NCPoly& b)
	{
		a += b;
		return a;
	}
	friend NCPoly operator-(NCPoly a, const NCPoly& b)
	{
		a -= b;
		return a;
	}
	friend NCPoly operator*(const NCPoly& a, const NCPoly& b)
	{
		NCPoly p;
		for (const auto& [wa, ca] : a.terms_)
			for (const auto& [wb, cb] : b.terms_)
			{
				Word w = wa;
				w.insert(w.end(), wb.begin(), wb.end());
				p.add_term(w, ca * cb);
			}
		return p;
	}
	friend NCPoly operator*(NCPoly a, const Rational& c)
	{
		a *= c;
		return a;
	}
	friend NCPoly operator*(const Rational& c, NCPoly a)
	{
		a *= c;
		return a;
	}
	friend NCPoly operator/(NCPoly a, const Rational& c)
	{
		a /= c;
		return a;
	}

	bool operator==(const NCPoly&) const = default;

	/// Drops all words longer than n.
	NCPoly truncated(int n) const
	{
		if (n < 0)
			throw std::invalid_argument("truncation degree must be nonnegative");
		NCPoly p;
		for (const auto& [w, c] : terms_)
		{
			if (static_cast<int>(w.size()) > n)
				break; // terms are length-sorted
			p.terms_.emplace(w, c);
		}
		return p;
	}

	NCPoly homogeneous_component(int d) const
	{
		NCPoly p;
		for (const auto& [w, c] : terms_)
			if (static_cast<int>(w.size()) == d)
				p.terms_.emplace(w, c);
		return p;
	}

	bool is_homogeneous(int d) const
	{
		for (const auto& [w, c] : terms_)
			if (static_cast<int>(w.size()) != d)
				return false;
		return true;
	}

	/// Strips bookkeeping tags from every factor and re-canonicalizes.
	NCPoly without_tags() const;

	/// Algebra homomorphism sending `target` to `replacement` and fixing
	/// every other generator.
	NCPoly substituted(const Generator& target, const NCPoly& replacement) const;

  private:
	TermMap terms_;
};

/// pq - qp.
NCPoly commutator(const NCPoly& p, const NCPoly& q);

/// n-fold nested commutator [y,[y,...[y,x]]]; n = 0 gives x.
NCPoly ad_power(const NCPoly& y, const NCPoly& x, int n);

/// Distinct generators appearing in p.
std::set<Generator> support(const NCPoly& p);

std::string to_string(const NCPoly& p);

/// Truncated formal series organized by word length: component d holds
/// exactly the degree-d words.
class GradedSeries
{
  public:
	explicit GradedSeries(int max_degree) : max_degree_(max_degree)
	{
		if (max_degree < 0)
			throw std::invalid_argument("series degree must be nonnegative");
		components_.resize(static_cast<std::size_t>(max_degree) + 1);
	}

	/// Truncates p to max_degree and splits it into homogeneous parts.
	static GradedSeries split(const NCPoly& p, int max_degree)
	{
		GradedSeries s(max_degree);
		for (const auto& [w, c] : p.terms())
		{
			int d = static_cast<int>(w.size());
			if (d <= max_degree)
				s.components_[static_cast<std::size_t>(d)].add_term(w, c);
		}
		return s;
	}

	int max_degree() const { return max_degree_; }
	const NCPoly& component(int d) const
	{
		check_degree(d);
		return components_[static_cast<std::size_t>(d)];
	}
	void set_component(int d, NCPoly p)
	{
		check_degree(d);
		if (!p.is_homogeneous(d))
			throw std::invalid_argument("component is not homogeneous of its degree");
		components_[static_cast<std::size_t>(d)] = std::move(p);
	}

	NCPoly to_poly() const
	{
		NCPoly p;
		for (const auto& c : components_)
			p += c;
		return p;
	}

	GradedSeries& operator+=(const GradedSeries& rhs)
	{
		require_same_degree(rhs);
		for (int d = 0; d <= max_degree_; ++d)
			components_[static_cast<std::size_t>(d)] += rhs.components_[static_cast<std::size_t>(d)];
		return *this;
	}
	GradedSeries& operator-=(const GradedSeries& rhs)
	{
		require_same_degree(rhs);
		for (int d = 0; d <= max_degree_; ++d)
			components_[static_cast<std::size_t>(d)] -= rhs.components_[static_cast<std::size_t>(d)];
		return *this;
	}

	/// Cauchy product truncated at max_degree.
	friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b)
	{
		a.require_same_degree(b);
		GradedSeries s(a.max_degree_);
		for (int d = 0; d <= a.max_degree_; ++d)
		{
			NCPoly acc;
			for (int k = 0; k <= d; ++k)
				acc += a.component(k) * b.component(d - k);
			s.components_[static_cast<std::size_t>(d)] = std::move(acc);
		}
		return s;
	}

	bool operator==(const GradedSeries&) const = default;

  private:
	void check_degree(int d) const
	{
		if (d < 0 || d > max_degree_)
			throw std::out_of_range("series component degree out of range");
	}
	void require_same_degree(const GradedSeries& rhs) const
	{
		if (max_degree_ != rhs.max_degree_)
			throw std::invalid_argument("series truncation degrees differ");
	}

	int max_degree_ = 0;
	std::vector<NCPoly> components_;
};

/// Sum_{k<=n} p^k/k! truncated to degree n. Requires a vanishing constant
/// term (the grading would break otherwise).
GradedSeries exp_truncated(const NCPoly& p, int n);

/// Inverse of exp_truncated up to the series degree. Requires the degree-0
/// component to be exactly 1.
GradedSeries log_truncated(const GradedSeries& s);

std::string to_string(const GradedSeries& s);

} // namespace ncorder
