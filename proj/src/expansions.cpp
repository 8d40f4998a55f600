#include "ncorder/expansions.hpp"

#include "ncorder/gotcore.hpp"

namespace ncorder {

BernoulliTable::BernoulliTable(int max_index)
{
	if (max_index < 0)
		throw std::invalid_argument("Bernoulli index must be nonnegative");
	values_.reserve(static_cast<std::size_t>(max_index) + 1);
	values_.push_back(Rational(1));
	for (int n = 1; n <= max_index; ++n)
	{
		Rational acc;
		for (int j = 0; j < n; ++j)
			acc += binomial(n + 1, j) * values_[static_cast<std::size_t>(j)];
		values_.push_back(-acc / Rational(n + 1));
	}
}

const Rational& BernoulliTable::value(int i) const
{
	if (i < 0 || i > max_index())
		throw std::out_of_range("Bernoulli index out of table range");
	return values_[static_cast<std::size_t>(i)];
}

Rational bernoulli(int n) { return BernoulliTable(n).value(n); }

Generator bch_x() { return Generator("X"); }
Generator bch_y() { return Generator("Y"); }

namespace {

void check_bch_cap(const BchConfig& cfg)
{
	if (cfg.max_degree < 1)
		throw std::invalid_argument("expansion degree must be at least 1");
	if (cfg.max_degree > cfg.degree_cap)
		throw std::invalid_argument("expansion degree exceeds the configured cap");
}

} // namespace

GradedSeries bch_recursion(const BchConfig& cfg)
{
	if (cfg.method != BchMethod::GotRecursion)
		throw std::invalid_argument("bch_recursion called with a different method selected");
	check_bch_cap(cfg);
	const NCPoly x = NCPoly::generator(bch_x());
	const NCPoly y = NCPoly::generator(bch_y());
	const NCPoly xy = commutator(x, y);

	GradedSeries out(cfg.max_degree);
	NCPoly z(1);
	out.set_component(0, z);
	for (int n = 1; n <= cfg.max_degree; ++n)
	{
		z = (x * z + y * z + directional_derivative(xy, bch_x(), z)) / Rational(n);
		out.set_component(n, z);
	}
	return out;
}

GradedSeries product_exp_series(int n, int degree_cap)
{
	if (n < 0)
		throw std::invalid_argument("truncation degree must be nonnegative");
	if (n > degree_cap)
		throw std::invalid_argument("expansion degree exceeds the configured cap");
	const NCPoly x = NCPoly::generator(bch_x());
	const NCPoly y = NCPoly::generator(bch_y());
	return exp_truncated(x, n) * exp_truncated(y, n);
}

GradedSeries bch_log_oracle(int n, int degree_cap)
{
	return log_truncated(product_exp_series(n, degree_cap));
}

NCPoly bch_w_series(int max_degree)
{
	if (max_degree < 1)
		throw std::invalid_argument("expansion degree must be at least 1");
	const NCPoly x = NCPoly::generator(bch_x());
	const NCPoly y = NCPoly::generator(bch_y());
	BernoulliTable table(max_degree);
	NCPoly w;
	for (int j = 0; j + 1 <= max_degree; ++j) // the j-th term has word degree j + 1
	{
		if (table.value(j) == 0)
			continue;
		w += ad_power(y, x, j) * (table.value(j) / factorial(j));
	}
	return w;
}

GradedSeries bch_classical_w(const BchConfig& cfg)
{
	if (cfg.method != BchMethod::ClassicalWSeries)
		throw std::invalid_argument("bch_classical_w called with a different method selected");
	check_bch_cap(cfg);
	const int n = cfg.max_degree;
	const NCPoly y = NCPoly::generator(bch_y());
	const NCPoly w = bch_w_series(n);

	NCPoly z;
	NCPoly term = y;
	for (int k = 0; k <= n; ++k)
	{
		z += term / factorial(k);
		term = directional_derivative(w, bch_y(), term).truncated(n);
		if (term.is_zero())
			break;
	}
	return GradedSeries::split(z, n);
}

Generator stepped_generator(int s) { return Generator::timed("A", s); }

namespace {

void check_magnus_cap(const MagnusConfig& cfg)
{
	if (cfg.steps < 1)
		throw std::invalid_argument("step count must be at least 1");
	if (cfg.max_degree < 1)
		throw std::invalid_argument("expansion degree must be at least 1");
	if (cfg.steps * cfg.max_degree > cfg.term_cap)
		throw std::invalid_argument("steps * degree exceeds the configured term cap");
}

} // namespace

GradedSeries dyson_discrete(int m, int n, int term_cap)
{
	if (m < 1)
		throw std::invalid_argument("step count must be at least 1");
	if (n < 0)
		throw std::invalid_argument("truncation degree must be nonnegative");
	if (m * n > term_cap)
		throw std::invalid_argument("steps * degree exceeds the configured term cap");
	GradedSeries prod = exp_truncated(NCPoly::generator(stepped_generator(m)), n);
	for (int s = m - 1; s >= 1; --s)
		prod = prod * exp_truncated(NCPoly::generator(stepped_generator(s)), n);
	return prod;
}

GradedSeries magnus_got(const MagnusConfig& cfg)
{
	if (cfg.method != MagnusMethod::GotForm)
		throw std::invalid_argument("magnus_got called with a different method selected");
	check_magnus_cap(cfg);
	const int m = cfg.steps;

	std::vector<NCPoly> gens;
	gens.reserve(static_cast<std::size_t>(m) + 1);
	gens.emplace_back(); // 1-based steps
	for (int s = 1; s <= m; ++s)
		gens.push_back(NCPoly::generator(stepped_generator(s)));

	GradedSeries out(cfg.max_degree);
	NCPoly z(1);
	out.set_component(0, z);
	for (int n = 1; n <= cfg.max_degree; ++n)
	{
		NCPoly next;
		for (int s = 1; s <= m; ++s)
			next += gens[static_cast<std::size_t>(s)] * z;
		for (int s = 1; s <= m; ++s)
			for (int u = s + 1; u <= m; ++u)
				next += directional_derivative(
				    commutator(gens[static_cast<std::size_t>(u)], gens[static_cast<std::size_t>(s)]),
				    stepped_generator(u), z);
		z = next / Rational(n);
		out.set_component(n, z);
	}
	return out;
}

GradedSeries magnus_log_oracle(int m, int n, int term_cap)
{
	return log_truncated(dyson_discrete(m, n, term_cap));
}

NCPoly magnus_third_order_cancellation(int m)
{
	if (m < 1)
		throw std::invalid_argument("step count must be at least 1");
	auto a = [](int s) { return NCPoly::generator(stepped_generator(s)); };
	auto theta = [](int p, int q) { return p > q ? 1 : 0; };

	NCPoly total;
	const Rational sixth(1, 6), twelfth(1, 12);
	for (int s = 1; s <= m; ++s)
		for (int u = 1; u <= m; ++u)
			for (int l = 1; l <= m; ++l)
			{
				if (theta(s, u) && theta(u, l))
					total += commutator(commutator(a(s), a(l)), a(u)) * sixth;
				int chains = theta(l, s) * theta(s, u) + theta(s, l) * theta(l, u) +
				             theta(s, u) * theta(u, l);
				if (chains)
					total += commutator(a(l), commutator(a(s), a(u))) * (twelfth * chains);
			}
	return total;
}

} // namespace ncorder
