#include "ncorder/gotcore.hpp"

#include <algorithm>

namespace ncorder {

namespace testhook {
bool& negate_contraction_sign()
{
	static bool flag = false;
	return flag;
}
} // namespace testhook

namespace {

NCPoly maybe_mutated(NCPoly p)
{
	if (testhook::negate_contraction_sign())
		return -p;
	return p;
}

void require_label(const std::vector<std::string>& universe, const std::string& label,
                   const char* which)
{
	if (std::find(universe.begin(), universe.end(), label) == universe.end())
		throw std::out_of_range(std::string("label outside ") + which + ": " + label);
}

} // namespace

Decomposition::Decomposition(std::vector<std::string> omega, std::vector<std::string> omega_prime,
                             Entries entries)
    : identity_(false), omega_(std::move(omega)), omega_prime_(std::move(omega_prime)),
      entries_(std::move(entries))
{
	if (omega_.empty() || omega_prime_.empty())
		throw std::invalid_argument("decomposition with empty index set");
	for (const auto& [key, value] : entries_)
	{
		require_label(omega_, key.first, "Omega");
		require_label(omega_prime_, key.second, "Omega'");
	}
	for (const auto& alpha : omega_)
	{
		bool nonzero = false;
		for (const auto& k : omega_prime_)
			if (entry(alpha, k) != 0)
			{
				nonzero = true;
				break;
			}
		if (!nonzero)
			throw std::invalid_argument("decomposition row is identically zero: " + alpha);
	}
}

Rational Decomposition::entry(const std::string& alpha, const std::string& k) const
{
	if (identity_)
		return alpha == k ? Rational(1) : Rational(0);
	require_label(omega_, alpha, "Omega");
	require_label(omega_prime_, k, "Omega'");
	auto it = entries_.find({alpha, k});
	return it == entries_.end() ? Rational(0) : it->second;
}

NCPoly Decomposition::row_poly(const std::string& alpha) const
{
	if (identity_)
		return NCPoly::generator(Generator(alpha));
	NCPoly p;
	for (const auto& k : omega_prime_)
	{
		Rational c = entry(alpha, k);
		if (c != 0)
			p += NCPoly::generator(Generator(k)) * c;
	}
	return p;
}

NCPoly contraction_same(const OrderingPair& pair, const Generator& a, const Generator& b)
{
	if (a == b)
		return {};
	int step = pair.o_prime.theta(b, a) - pair.o.theta(b, a);
	if (step == 0)
		return {};
	NCPoly c = commutator(NCPoly::generator(a), NCPoly::generator(b)) * Rational(step);
	return maybe_mutated(std::move(c));
}

NCPoly contraction_general(const OrderingPair& pair, const Decomposition& d, const std::string& k,
                           const std::string& l, const std::string& alpha,
                           const std::string& beta)
{
	require_label(d.omega_prime(), k, "Omega'");
	require_label(d.omega_prime(), l, "Omega'");
	require_label(d.omega(), alpha, "Omega");
	require_label(d.omega(), beta, "Omega");
	if (k == l)
		return {};
	int step = pair.o_prime.theta(Generator(l), Generator(k)) -
	           pair.o.theta(Generator(beta), Generator(alpha));
	if (step == 0)
		return {};
	NCPoly c =
	    commutator(NCPoly::generator(Generator(k)), NCPoly::generator(Generator(l))) * Rational(step);
	return maybe_mutated(std::move(c));
}

NCPoly contraction_matrix(const OrderingPair& pair, const Decomposition& d,
                          const std::string& alpha, const std::string& beta)
{
	if (d.is_identity())
		return contraction_same(pair, Generator(alpha), Generator(beta));
	NCPoly total;
	for (const auto& k : d.omega_prime())
		for (const auto& l : d.omega_prime())
		{
			Rational weight = d.entry(alpha, k) * d.entry(beta, l);
			if (weight == 0)
				continue;
			total += contraction_general(pair, d, k, l, alpha, beta) * weight;
		}
	return total;
}

NCPoly directional_derivative(const NCPoly& direction, const Generator& target,
                              const NCPoly& operand)
{
	NCPoly out;
	for (const auto& [w, c] : operand.terms())
		for (std::size_t i = 0; i < w.size(); ++i)
		{
			if (w[i] != target)
				continue;
			for (const auto& [dw, dc] : direction.terms())
			{
				Word spliced;
				spliced.reserve(w.size() - 1 + dw.size());
				spliced.insert(spliced.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
				spliced.insert(spliced.end(), dw.begin(), dw.end());
				spliced.insert(spliced.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
				out.add_term(spliced, c * dc);
			}
		}
	return out;
}

NCPoly scalar_derivative(const Generator& target, const NCPoly& operand)
{
	return directional_derivative(NCPoly(1), target, operand);
}

namespace {

// The underlying proof treats every product position as a distinct label
// carrying a strict total order. The evaluator realizes that: each
// occurrence gets a unique tag, and both step functions refine rule-rank
// ties by original position (earlier outranks later), matching the stable
// arrangement. Contractions are taken between tagged occurrences even when
// their base symbols coincide: the spliced commutator then cancels as
// operator content but transposes the occurrence bookkeeping, which later
// derivative steps rely on. (Equivalently: split coincident symbols into
// distinct formal copies, apply the strict-order transform, and project
// back.) For a word of pairwise-distinct symbols all refinements are
// inert and the evaluation is the textbook one.
class PrimedEvaluator
{
  public:
	explicit PrimedEvaluator(const OrderingPair& pair) : pair_(pair) {}

	// base: the symbol entering the product; o_key: the key ranked by the
	// target rule (the parent index in the decomposed flow).
	void add_occurrence(const Generator& base, const Generator& o_key)
	{
		if (base.tag)
			throw std::invalid_argument("word factors must not carry bookkeeping tags");
		int position = static_cast<int>(occurrences_.size());
		Generator tagged = base.with_tag(std::to_string(position));
		occurrences_.push_back({tagged, o_key, position});
		word_.push_back(occurrences_.back().tagged);
	}

	NCPoly run()
	{
		Word arranged = pair_.o_prime.apply(word_);
		if (arranged.empty())
			return NCPoly(1);
		NCPoly p = NCPoly::generator(arranged.back());
		for (auto i = static_cast<std::ptrdiff_t>(arranged.size()) - 2; i >= 0; --i)
		{
			const Generator& g = arranged[static_cast<std::size_t>(i)];
			NCPoly next = NCPoly::generator(g) * p;
			for (const Generator& target : support(p))
			{
				int step = theta_prime(target, g) - theta_target_rule(target, g);
				if (step == 0)
					continue;
				NCPoly direction =
				    commutator(NCPoly::generator(g), NCPoly::generator(target)) * Rational(step);
				if (testhook::negate_contraction_sign())
					direction = -direction;
				next += directional_derivative(direction, target, p);
			}
			p = std::move(next);
		}
		return p.without_tags();
	}

  private:
	struct Occurrence
	{
		Generator tagged;
		Generator o_key;
		int position;
	};

	const Occurrence& occurrence_of(const Generator& g) const
	{
		return occurrences_[static_cast<std::size_t>(std::stoi(*g.tag))];
	}

	// 1 iff the target occurrence outranks the primed one under the
	// rewriting rule, position-refined.
	int theta_prime(const Generator& target, const Generator& primed) const
	{
		int c = pair_.o_prime.compare_rank(target, primed);
		if (c != 0)
			return c > 0 ? 1 : 0;
		return occurrence_of(target).position < occurrence_of(primed).position ? 1 : 0;
	}

	// Same for the target rule, ranking the occurrences' o-keys.
	int theta_target_rule(const Generator& target, const Generator& primed) const
	{
		const Occurrence& t = occurrence_of(target);
		const Occurrence& g = occurrence_of(primed);
		int c = pair_.o.compare_rank(t.o_key, g.o_key);
		if (c != 0)
			return c > 0 ? 1 : 0;
		return t.position < g.position ? 1 : 0;
	}

	const OrderingPair& pair_;
	std::vector<Occurrence> occurrences_;
	Word word_;
};

} // namespace

NCPoly primed_product_eval(const OrderingPair& pair, const Word& w)
{
	PrimedEvaluator eval(pair);
	for (const auto& factor : w)
		eval.add_occurrence(factor, factor);
	return eval.run();
}

namespace {

// One expansion branch: a choice of basis index per word position.
struct Branch
{
	Rational coeff;
	std::vector<std::pair<Generator, Generator>> occurrences; // (basis symbol, parent key)
};

std::vector<Branch> expand_branches(const Decomposition& d, const Word& w)
{
	std::vector<Branch> branches{{Rational(1), {}}};
	for (const auto& factor : w)
	{
		if (factor.tag || factor.time)
			throw std::invalid_argument("decomposed words must use plain index labels");
		require_label(d.omega(), factor.id, "Omega");
		std::vector<Branch> next;
		for (const auto& k : d.omega_prime())
		{
			Rational c = d.entry(factor.id, k);
			if (c == 0)
				continue;
			for (const auto& b : branches)
			{
				Branch nb = b;
				nb.coeff *= c;
				nb.occurrences.emplace_back(Generator(k), Generator(factor.id));
				next.push_back(std::move(nb));
			}
		}
		branches = std::move(next);
	}
	return branches;
}

} // namespace

NCPoly primed_product_eval_general(const OrderingPair& pair, const Decomposition& d, const Word& w)
{
	if (d.is_identity())
		return primed_product_eval(pair, w);
	NCPoly total;
	for (const auto& branch : expand_branches(d, w))
	{
		PrimedEvaluator eval(pair);
		for (const auto& [basis, parent] : branch.occurrences)
			eval.add_occurrence(basis, parent);
		total += eval.run() * branch.coeff;
	}
	return total;
}

VerificationReport got_verify(const OrderingPair& pair, const Decomposition& d, const Word& w)
{
	VerificationReport report;
	report.word = w;
	report.ordering_name = pair.o.name();
	report.ordering_prime_name = pair.o_prime.name();

	Word ordered = pair.o.apply(w);
	if (d.is_identity())
	{
		report.lhs = NCPoly::from_word(ordered);
		report.rhs = primed_product_eval(pair, w);
		std::set<Generator> indices(w.begin(), w.end());
		for (auto a = indices.begin(); a != indices.end(); ++a)
			for (auto b = std::next(a); b != indices.end(); ++b)
				report.contractions.push_back(
				    {to_string(*a), to_string(*b), contraction_same(pair, *a, *b)});
	}
	else
	{
		NCPoly lhs(1);
		for (const auto& factor : ordered)
			lhs *= d.row_poly(factor.id);
		report.lhs = lhs;
		report.rhs = primed_product_eval_general(pair, d, w);
		const auto& omega = d.omega();
		for (std::size_t i = 0; i < omega.size(); ++i)
			for (std::size_t j = i + 1; j < omega.size(); ++j)
				report.contractions.push_back(
				    {omega[i], omega[j], contraction_matrix(pair, d, omega[i], omega[j])});
	}
	report.equal = (report.lhs == report.rhs);
	return report;
}

bool push_lemma_check(const MonomialOrdering& o, const Generator& a, const Word& w)
{
	NCPoly ordered = NCPoly::from_word(o.apply(w));
	NCPoly lhs = NCPoly::generator(a) * ordered;

	Word extended;
	extended.reserve(w.size() + 1);
	extended.push_back(a);
	extended.insert(extended.end(), w.begin(), w.end());
	NCPoly rhs = NCPoly::from_word(o.apply(extended));

	std::set<Generator> indices(w.begin(), w.end());
	for (const auto& b : indices)
		if (o.theta(b, a))
			rhs += directional_derivative(commutator(NCPoly::generator(a), NCPoly::generator(b)),
			                              b, ordered);
	return lhs == rhs;
}

} // namespace ncorder
