#include "ncorder/suite.hpp"

#include "ncorder/expansions.hpp"
#include "ncorder/exprparse.hpp"
#include "ncorder/gotcore.hpp"
#include "ncorder/matrep.hpp"
#include "ncorder/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>

namespace ncorder {

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi)
{
	return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, int max_num = 4, int max_den = 4)
{
	return Rational(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
}

Rational random_nonzero_rational(Rng& rng, int max_num = 4, int max_den = 4)
{
	Rational r;
	do
		r = random_rational(rng, max_num, max_den);
	while (r == 0);
	return r;
}

Word random_word(Rng& rng, const std::vector<Generator>& alphabet, int max_len, int min_len = 0)
{
	Word w;
	int len = uniform_int(rng, min_len, max_len);
	for (int i = 0; i < len; ++i)
		w.push_back(alphabet[static_cast<std::size_t>(
		    uniform_int(rng, 0, static_cast<int>(alphabet.size()) - 1))]);
	return w;
}

NCPoly random_poly(Rng& rng, const std::vector<Generator>& alphabet, int max_terms, int max_len,
                   bool zero_constant = false)
{
	NCPoly p;
	int terms = uniform_int(rng, 1, max_terms);
	for (int t = 0; t < terms; ++t)
		p.add_term(random_word(rng, alphabet, max_len, zero_constant ? 1 : 0),
		           random_nonzero_rational(rng));
	return p;
}

std::vector<Generator> letters(std::initializer_list<const char*> ids)
{
	std::vector<Generator> out;
	for (const char* id : ids)
		out.emplace_back(id);
	return out;
}

MonomialOrdering random_strict_order(Rng& rng, std::vector<std::string> ids)
{
	std::shuffle(ids.begin(), ids.end(), rng);
	return MonomialOrdering::permutation(std::move(ids));
}

struct GotInstance
{
	OrderingPair pair;
	Decomposition d = Decomposition::identity();
	Word word;
	std::vector<std::string> omega;
};

GotInstance random_got_instance(Rng& rng, bool with_decomposition)
{
	static const std::vector<std::string> omega_pool = {"A", "B", "C", "DD"};
	static const std::vector<std::string> prime_pool = {"1", "2", "3", "4"};

	int omega_size = uniform_int(rng, 1, 4);
	std::vector<std::string> omega(omega_pool.begin(), omega_pool.begin() + omega_size);

	GotInstance inst{{random_strict_order(rng, omega), MonomialOrdering::alpha()},
	                 Decomposition::identity(),
	                 {},
	                 omega};
	if (with_decomposition)
	{
		int prime_size = uniform_int(rng, 1, 4);
		std::vector<std::string> prime(prime_pool.begin(), prime_pool.begin() + prime_size);
		Decomposition::Entries entries;
		for (const auto& alpha : omega)
			for (;;)
			{
				bool nonzero = false;
				for (const auto& k : prime)
				{
					Rational c = random_rational(rng, 2, 3);
					if (c != 0)
					{
						entries[{alpha, k}] = c;
						nonzero = true;
					}
				}
				if (nonzero)
					break;
			}
		inst.d = Decomposition(omega, prime, std::move(entries));
		inst.pair.o_prime = random_strict_order(rng, prime);
	}
	else
		inst.pair.o_prime = random_strict_order(rng, omega);

	std::vector<Generator> alphabet;
	for (const auto& id : omega)
		alphabet.emplace_back(id);
	inst.word = random_word(rng, alphabet, 5); // repeats allowed by construction
	return inst;
}

class Runner
{
  public:
	Runner(const SuiteOptions& options, std::ostream& out) : options_(options), out_(out) {}

	std::vector<PropertyResult> take_results() { return std::move(results_); }

	/// Runs `fn` once per case; fn returns true on success.
	void property(const std::string& name, int cases, const std::function<bool(Rng&)>& fn)
	{
		Rng rng(options_.seed * 0x9e3779b97f4a7c15ULL + std::hash<std::string>{}(name));
		PropertyResult result{name, cases, 0};
		for (int i = 0; i < cases; ++i)
		{
			bool ok = false;
			try
			{
				ok = fn(rng);
			}
			catch (const std::exception&)
			{
				ok = false;
			}
			if (!ok)
				++result.failures;
		}
		out_ << (result.failures ? "FAIL " : "pass ") << result.name << " (" << result.cases
		     << " cases";
		if (result.failures)
			out_ << ", " << result.failures << " failures";
		out_ << ")\n";
		results_.push_back(std::move(result));
	}

  private:
	SuiteOptions options_;
	std::ostream& out_;
	std::vector<PropertyResult> results_;
};

} // namespace

std::vector<PropertyResult> run_property_suite(const SuiteOptions& options, std::ostream& out)
{
	Runner runner(options, out);
	const int cases = options.cases;
	const auto xyz = letters({"X", "Y", "Z"});

	runner.property("ncalg/mul-associative", cases, [&](Rng& rng) {
		NCPoly p = random_poly(rng, xyz, 3, 2);
		NCPoly q = random_poly(rng, xyz, 3, 2);
		NCPoly r = random_poly(rng, xyz, 3, 2);
		return (p * q) * r == p * (q * r);
	});

	runner.property("ncalg/jacobi-identity", cases, [&](Rng& rng) {
		NCPoly p = random_poly(rng, xyz, 3, 2);
		NCPoly q = random_poly(rng, xyz, 3, 2);
		NCPoly r = random_poly(rng, xyz, 3, 2);
		NCPoly sum = commutator(commutator(p, q), r) + commutator(commutator(q, r), p) +
		             commutator(commutator(r, p), q);
		return sum.is_zero();
	});

	runner.property("ncalg/exp-log-round-trip", cases, [&](Rng& rng) {
		NCPoly p = random_poly(rng, xyz, 3, 2, /*zero_constant=*/true);
		int n = uniform_int(rng, 1, 6);
		return log_truncated(exp_truncated(p, n)) == GradedSeries::split(p, n);
	});

	runner.property("ncalg/series-grading", cases, [&](Rng& rng) {
		NCPoly p = random_poly(rng, xyz, 3, 2, true);
		int n = uniform_int(rng, 1, 5);
		GradedSeries s = exp_truncated(p, n);
		GradedSeries prod = s * s;
		for (int d = 0; d <= n; ++d)
			if (!s.component(d).is_homogeneous(d) || !prod.component(d).is_homogeneous(d))
				return false;
		return true;
	});

	runner.property("ordering/idempotent", cases, [&](Rng& rng) {
		auto order = random_strict_order(rng, {"X", "Y", "Z"});
		Word w = random_word(rng, xyz, 6);
		return order.apply(order.apply(w)) == order.apply(w);
	});

	runner.property("ordering/multiset-preserved", cases, [&](Rng& rng) {
		auto order = random_strict_order(rng, {"X", "Y", "Z"});
		Word w = random_word(rng, xyz, 6);
		Word sorted_input = w, sorted_output = order.apply(w);
		std::sort(sorted_input.begin(), sorted_input.end());
		std::sort(sorted_output.begin(), sorted_output.end());
		return sorted_input == sorted_output;
	});

	// Exhaustive over all strict total orders of four keys and all ordered
	// triples of distinct keys.
	runner.property("ordering/theta-decomposition", 1, [&](Rng&) {
		std::vector<std::string> ids = {"a", "b", "c", "d"};
		std::sort(ids.begin(), ids.end());
		do
		{
			MonomialOrdering order = MonomialOrdering::permutation(ids);
			for (const auto& ga : ids)
				for (const auto& gb : ids)
					for (const auto& gc : ids)
					{
						if (ga == gb || gb == gc || ga == gc)
							continue;
						Generator a(ga), b(gb), g(gc);
						int lhs = order.theta(g, a) * order.theta(g, b);
						int rhs = order.theta(g, b) * order.theta(b, a) +
						          order.theta(g, a) * order.theta(a, b);
						if (lhs != rhs)
							return false;
					}
		} while (std::next_permutation(ids.begin(), ids.end()));
		return true;
	});

	runner.property("ordering/theta-trichotomy", cases, [&](Rng& rng) {
		auto order = random_strict_order(rng, {"X", "Y", "Z", "W"});
		Generator a("X"), b("Y");
		return order.theta(a, b) + order.theta(b, a) == 1 && order.theta(a, a) == 0;
	});

	runner.property("ordering/weyl-weights", std::min(cases, 40), [&](Rng& rng) {
		static const std::vector<Generator> distinct = letters({"P", "Q", "R", "S", "T"});
		int len = uniform_int(rng, 0, 5);
		Word w(distinct.begin(), distinct.begin() + len);
		NCPoly sym = weyl_symmetrize(w);
		Rational total;
		for (const auto& [word, c] : sym.terms())
			total += c;
		return total == 1;
	});

	runner.property("gotcore/contraction-symmetry", cases, [&](Rng& rng) {
		GotInstance inst = random_got_instance(rng, uniform_int(rng, 0, 1) == 1);
		for (const auto& a : inst.omega)
			for (const auto& b : inst.omega)
			{
				if (inst.d.is_identity())
				{
					if (contraction_same(inst.pair, Generator(a), Generator(b)) !=
					    contraction_same(inst.pair, Generator(b), Generator(a)))
						return false;
				}
				else if (contraction_matrix(inst.pair, inst.d, a, b) !=
				         contraction_matrix(inst.pair, inst.d, b, a))
					return false;
			}
		return true;
	});

	runner.property("gotcore/diagonal-vanishing", cases, [&](Rng& rng) {
		GotInstance decomposed = random_got_instance(rng, true);
		const auto& prime = decomposed.d.omega_prime();
		const auto& omega = decomposed.d.omega();
		const auto& k = prime[static_cast<std::size_t>(
		    uniform_int(rng, 0, static_cast<int>(prime.size()) - 1))];
		const auto& a = omega[static_cast<std::size_t>(
		    uniform_int(rng, 0, static_cast<int>(omega.size()) - 1))];
		const auto& b = omega[static_cast<std::size_t>(
		    uniform_int(rng, 0, static_cast<int>(omega.size()) - 1))];
		GotInstance same = random_got_instance(rng, false);
		Generator diag(same.omega.front());
		return contraction_general(decomposed.pair, decomposed.d, k, k, a, b).is_zero() &&
		       contraction_same(same.pair, diag, diag).is_zero();
	});

	runner.property("gotcore/derivative-rules", cases, [&](Rng& rng) {
		NCPoly direction = random_poly(rng, xyz, 2, 2);
		Generator target = xyz[static_cast<std::size_t>(uniform_int(rng, 0, 2))];
		NCPoly f = random_poly(rng, xyz, 3, 2);
		NCPoly g = random_poly(rng, xyz, 3, 2);
		Rational a = random_rational(rng), b = random_rational(rng);

		NCPoly lin_lhs = directional_derivative(direction, target, f * a + g * b);
		NCPoly lin_rhs = directional_derivative(direction, target, f) * a +
		                 directional_derivative(direction, target, g) * b;
		if (lin_lhs != lin_rhs)
			return false;

		NCPoly dg = directional_derivative(direction, target, g);
		NCPoly leibniz_lhs = directional_derivative(direction, target, f * g);
		NCPoly leibniz_rhs = directional_derivative(direction, target, f) * g + f * dg;
		if (leibniz_lhs != leibniz_rhs)
			return false;

		// Chain rule on the composite F = G*G.
		if (directional_derivative(direction, target, g * g) != dg * g + g * dg)
			return false;

		// [d/da, phi_b] = delta_ab on polynomials.
		Generator other = xyz[static_cast<std::size_t>(uniform_int(rng, 0, 2))];
		NCPoly comm = scalar_derivative(target, NCPoly::generator(other) * f) -
		              NCPoly::generator(other) * scalar_derivative(target, f);
		return comm == (other == target ? f : NCPoly());
	});

	runner.property("gotcore/got-identity", cases, [&](Rng& rng) {
		// Fixed three-factor instance first: keeps the property sensitive to
		// a wrong contraction sign even at tiny case counts.
		OrderingPair fixed{MonomialOrdering::time(), MonomialOrdering::anti_time()};
		Word fixed_word = {Generator("1"), Generator("2"), Generator("3")};
		if (!got_verify(fixed, Decomposition::identity(), fixed_word).equal)
			return false;
		GotInstance inst = random_got_instance(rng, uniform_int(rng, 0, 1) == 1);
		return got_verify(inst.pair, inst.d, inst.word).equal;
	});

	runner.property("gotcore/push-lemma", cases, [&](Rng& rng) {
		static const auto alphabet = letters({"A", "B", "C", "DD"});
		auto order = random_strict_order(rng, {"A", "B", "C", "DD"});
		Word w = random_word(rng, alphabet, 4);
		Generator a = alphabet[static_cast<std::size_t>(uniform_int(rng, 0, 3))];
		return push_lemma_check(order, a, w);
	});

	runner.property("gotcore/same-pair-degeneracy", cases, [&](Rng& rng) {
		auto order = random_strict_order(rng, {"A", "B", "C"});
		OrderingPair pair{order, order};
		static const auto alphabet = letters({"A", "B", "C"});
		Word w = random_word(rng, alphabet, 5);
		return primed_product_eval(pair, w) == NCPoly::from_word(order.apply(w));
	});

	runner.property("series/bch-recursion-vs-product", 1, [&](Rng&) {
		return bch_recursion({8, BchMethod::GotRecursion, 8}) == product_exp_series(8);
	});

	runner.property("series/bch-oracle-agreement", 1, [&](Rng&) {
		for (int n = 1; n <= 6; ++n)
		{
			GradedSeries z = bch_log_oracle(n);
			if (exp_truncated(z.to_poly(), n) != product_exp_series(n))
				return false;
		}
		for (int n = 1; n <= 5; ++n)
			if (bch_classical_w({n, BchMethod::ClassicalWSeries, 8}) != bch_log_oracle(n))
				return false;
		return true;
	});

	runner.property("series/bch-low-degree-coefficients", 1, [&](Rng&) {
		GradedSeries z = bch_log_oracle(3);
		NCPoly x = NCPoly::generator(bch_x()), y = NCPoly::generator(bch_y());
		NCPoly deg2 = commutator(x, y) * Rational(1, 2);
		NCPoly deg3 = commutator(x, commutator(x, y)) * Rational(1, 12) -
		              commutator(y, commutator(x, y)) * Rational(1, 12);
		return z.component(2) == deg2 && z.component(3) == deg3;
	});

	runner.property("series/magnus-vs-dyson", 1, [&](Rng&) {
		for (int m = 1; m <= 3; ++m)
			for (int n = 1; n <= 5; ++n)
				if (magnus_got({m, n, MagnusMethod::GotForm, kMagnusTermCap}) !=
				    dyson_discrete(m, n))
					return false;
		return true;
	});

	runner.property("series/magnus-third-order-cancellation", 1,
	                [&](Rng&) { return magnus_third_order_cancellation(3).is_zero(); });

	runner.property("matrep/homomorphism", std::min(cases, 40), [&](Rng& rng) {
		Representation rep =
		    random_representation(xyz, 4, rng(), 0.5, false, nullptr);
		NCPoly p = random_poly(rng, xyz, 3, 2);
		NCPoly q = random_poly(rng, xyz, 3, 2);
		double scale = std::max(1.0, evaluate(p, rep).frobenius_norm() *
		                                 evaluate(q, rep).frobenius_norm());
		bool mul_ok = (evaluate(p * q, rep) - evaluate(p, rep) * evaluate(q, rep))
		                  .frobenius_norm() < 1e-12 * scale;
		bool add_ok = (evaluate(p + q, rep) - (evaluate(p, rep) + evaluate(q, rep)))
		                  .frobenius_norm() < 1e-12 * scale;
		return mul_ok && add_ok;
	});

	runner.property("matrep/symbolic-implies-numeric", std::min(cases, 25), [&](Rng& rng) {
		GotInstance inst = random_got_instance(rng, uniform_int(rng, 0, 1) == 1);
		VerificationReport report = got_verify(inst.pair, inst.d, inst.word);
		if (!report.equal)
			return false;
		std::vector<Generator> basis;
		if (inst.d.is_identity())
		{
			auto sup = support(report.lhs);
			basis.assign(sup.begin(), sup.end());
		}
		else
			for (const auto& k : inst.d.omega_prime())
				basis.emplace_back(k);
		if (basis.empty())
			return true;
		int dim = uniform_int(rng, 2, 6);
		Representation rep = random_representation(basis, dim, rng(), 0.1, false, nullptr);
		return compare(evaluate(report.lhs, rep), evaluate(report.rhs, rep), 1e-12).pass;
	});

	runner.property("matrep/truncation-scaling", 1, [&](Rng&) {
		NCPoly exponent = bch_log_oracle(6).to_poly();
		auto residual = [&](double eps) {
			Representation rep = random_representation({bch_x(), bch_y()}, 4, 17, eps);
			ComplexMatrix lhs = matrix_exp(rep.matrix_for(bch_x())) *
			                    matrix_exp(rep.matrix_for(bch_y()));
			return (lhs - matrix_exp(evaluate(exponent, rep))).frobenius_norm();
		};
		double ratio = residual(0.05) / residual(0.025);
		return ratio >= 80.0 && ratio <= 200.0;
	});

	runner.property("exprparse/round-trip", cases, [&](Rng& rng) {
		std::vector<Generator> alphabet = xyz;
		alphabet.push_back(Generator::timed("A", uniform_int(rng, 1, 3)));
		NCPoly p = random_poly(rng, alphabet, 4, 3);
		Env env;
		return compile_expression(to_dsl(p), env) == p;
	});

	runner.property("exprparse/parse-determinism", cases, [&](Rng& rng) {
		NCPoly p = random_poly(rng, xyz, 4, 3);
		std::string src = to_dsl(p);
		Env env;
		ExprPtr first = parse_expression(src, env);
		ExprPtr second = parse_expression(src, env);
		return compile(first, env) == compile(second, env) &&
		       to_dsl(compile(first, env)) == src;
	});

	runner.property("exprparse/error-positions", 1, [&](Rng&) {
		Env env;
		const char* bad[] = {"X +", "(X", "exp(X)", "T[X]", "1/0", "$", "X@", "[X,Y"};
		for (const char* src : bad)
		{
			try
			{
				compile_expression(src, env);
				return false;
			}
			catch (const ParseError& e)
			{
				if (e.line() < 1 || e.col() < 1)
					return false;
			}
		}
		return true;
	});

	return runner.take_results();
}

bool suite_passed(const std::vector<PropertyResult>& results)
{
	return std::all_of(results.begin(), results.end(),
	                   [](const PropertyResult& r) { return r.failures == 0; });
}

} // namespace ncorder
