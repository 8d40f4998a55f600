#include "ncorder/expansions.hpp"

#include "ncorder/gotcore.hpp"
#include "ncorder/ordering.hpp"

#include <doctest.h>

using namespace ncorder;

namespace {

NCPoly gx() { return NCPoly::generator(bch_x()); }
NCPoly gy() { return NCPoly::generator(bch_y()); }
NCPoly ga(int s) { return NCPoly::generator(stepped_generator(s)); }

} // namespace

TEST_CASE("Bernoulli numbers")
{
	CHECK(bernoulli(0) == 1);
	CHECK(bernoulli(1) == Rational(-1, 2));
	CHECK(bernoulli(2) == Rational(1, 6));
	CHECK(bernoulli(3) == 0);
	CHECK(bernoulli(4) == Rational(-1, 30));
	CHECK(bernoulli(5) == 0);
	CHECK(bernoulli(6) == Rational(1, 42));

	BernoulliTable table(12);
	for (int k = 1; 2 * k + 1 <= 12; ++k)
		CHECK(table.value(2 * k + 1) == 0);
	// Defining recurrence: sum_j binomial(n+1, j) B_j = 0 for n >= 1.
	for (int n = 1; n <= 12; ++n)
	{
		Rational acc;
		for (int j = 0; j <= n; ++j)
			acc += binomial(n + 1, j) * table.value(j);
		CHECK(acc == 0);
	}
}

TEST_CASE("recursion base orders")
{
	GradedSeries z = bch_recursion({2, BchMethod::GotRecursion, 8});
	CHECK(z.component(0) == NCPoly(1));
	CHECK(z.component(1) == gx() + gy());
	NCPoly s = gx() + gy();
	CHECK(z.component(2) == (s * s + commutator(gx(), gy())) / Rational(2));
}

TEST_CASE("third order matches the nested-commutator expansion")
{
	GradedSeries z = bch_recursion({3, BchMethod::GotRecursion, 8});
	NCPoly s = gx() + gy();
	NCPoly c = commutator(gx(), gy());
	NCPoly expected = s * s * s + c * s + s * c * Rational(2) + commutator(c, gy());
	CHECK(z.component(3) * factorial(3) == expected);
	CHECK(z.component(3) == product_exp_series(3).component(3));
}

TEST_CASE("product series low degrees")
{
	GradedSeries p = product_exp_series(2);
	CHECK(p.component(0) == NCPoly(1));
	CHECK(p.component(1) == gx() + gy());
	CHECK(p.component(2) == gx() * gx() / Rational(2) + gx() * gy() +
	                            gy() * gy() / Rational(2));
}

TEST_CASE("letter-class ordering of the joint exponential gives the product of exponentials")
{
	auto nxy = MonomialOrdering::from_spec("nxy:X,Y");
	for (int n = 0; n <= 5; ++n)
	{
		NCPoly joint = exp_truncated(gx() + gy(), n).to_poly();
		CHECK(nxy.apply(joint) == product_exp_series(n).to_poly());
	}
}

TEST_CASE("recursion equals the product series through the cap")
{
	CHECK(bch_recursion({8, BchMethod::GotRecursion, 8}) == product_exp_series(8));
}

TEST_CASE("log oracle reproduces the textbook coefficients")
{
	GradedSeries z = bch_log_oracle(3);
	CHECK(z.component(1) == gx() + gy());
	CHECK(z.component(2) == commutator(gx(), gy()) / Rational(2));
	CHECK(z.component(3) == commutator(gx(), commutator(gx(), gy())) / Rational(12) -
	                            commutator(gy(), commutator(gx(), gy())) / Rational(12));

	for (int n = 1; n <= 6; ++n)
		CHECK(exp_truncated(bch_log_oracle(n).to_poly(), n) == product_exp_series(n));
}

TEST_CASE("classical W-series")
{
	CHECK(bch_w_series(2) == gx() - commutator(gy(), gx()) / Rational(2));
	CHECK(bch_w_series(3) == gx() - commutator(gy(), gx()) / Rational(2) +
	                             commutator(gy(), commutator(gy(), gx())) / Rational(12));

	GradedSeries z1 = bch_classical_w({1, BchMethod::ClassicalWSeries, 8});
	CHECK(z1.component(1) == gx() + gy());

	for (int n = 1; n <= 5; ++n)
		CHECK(bch_classical_w({n, BchMethod::ClassicalWSeries, 8}) == bch_log_oracle(n));
}

TEST_CASE("degree caps are enforced")
{
	CHECK_THROWS_AS(bch_recursion({9, BchMethod::GotRecursion, 8}), std::invalid_argument);
	CHECK_THROWS_AS(bch_recursion({0, BchMethod::GotRecursion, 8}), std::invalid_argument);
	CHECK_THROWS_AS(magnus_got({4, 4, MagnusMethod::GotForm, 15}), std::invalid_argument);
	CHECK_THROWS_AS(magnus_got({0, 2, MagnusMethod::GotForm, 15}), std::invalid_argument);
}

TEST_CASE("single-step product is a plain exponential")
{
	CHECK(dyson_discrete(1, 4) == exp_truncated(ga(1), 4));
	CHECK(magnus_got({1, 4, MagnusMethod::GotForm, 15}) == exp_truncated(ga(1), 4));

	GradedSeries oracle = magnus_log_oracle(1, 4);
	CHECK(oracle.component(1) == ga(1));
	for (int d : {0, 2, 3, 4})
		CHECK(oracle.component(d).is_zero());
}

TEST_CASE("two-step degree two")
{
	NCPoly expected = ga(2) * ga(2) / Rational(2) + ga(2) * ga(1) + ga(1) * ga(1) / Rational(2);
	CHECK(dyson_discrete(2, 2).component(2) == expected);
	CHECK(magnus_got({2, 2, MagnusMethod::GotForm, 15}).component(2) == expected);
	CHECK(magnus_log_oracle(2, 2).component(2) == commutator(ga(2), ga(1)) / Rational(2));
}

TEST_CASE("stepped product equals the time ordering of the joint exponential")
{
	auto t = MonomialOrdering::time();
	for (int m = 1; m <= 3; ++m)
		for (int n = 0; n <= 4; ++n)
		{
			NCPoly joint;
			for (int s = 1; s <= m; ++s)
				joint += ga(s);
			CHECK(t.apply(exp_truncated(joint, n).to_poly()) ==
			      dyson_discrete(m, n).to_poly());
		}
}

TEST_CASE("stepped recursion matches the product of exponentials")
{
	for (int m = 1; m <= 3; ++m)
		for (int n = 1; n <= 5; ++n)
			CHECK(magnus_got({m, n, MagnusMethod::GotForm, 15}) == dyson_discrete(m, n));
}

TEST_CASE("third order of the stepped log oracle matches the midpoint triple sum")
{
	// Brute-force oracle: the two nested-commutator families with the step
	// function extended by weight 1/2 at coincident steps (the product of
	// step exponentials symmetrizes coincident times).
	auto theta = [](int p, int q) {
		return p > q ? Rational(1) : p == q ? Rational(1, 2) : Rational(0);
	};
	for (int m = 1; m <= 3; ++m)
	{
		NCPoly expected;
		for (int s = 1; s <= m; ++s)
			for (int u = 1; u <= m; ++u)
				for (int l = 1; l <= m; ++l)
				{
					expected += commutator(commutator(ga(s), ga(l)), ga(u)) *
					            (theta(s, l) * theta(l, u) / Rational(6));
					expected += commutator(ga(s), commutator(ga(u), ga(l))) *
					            (theta(s, u) * theta(u, l) / Rational(6));
				}
		CHECK(magnus_log_oracle(m, 3).component(3) == expected);
	}
}

TEST_CASE("third-order cancellation triple sum vanishes")
{
	for (int m = 1; m <= 3; ++m)
		CHECK(magnus_third_order_cancellation(m).is_zero());
}
