#include "ncorder/algebra.hpp"

#include <doctest.h>

using namespace ncorder;

namespace {

const Generator X("X");
const Generator Y("Y");

NCPoly gx() { return NCPoly::generator(X); }
NCPoly gy() { return NCPoly::generator(Y); }

Word word(std::initializer_list<Generator> gens) { return Word(gens); }

} // namespace

TEST_CASE("generator identity includes tag and time")
{
	CHECK(Generator("X") == Generator("X"));
	CHECK(Generator("X") != Generator("X").with_tag("A"));
	CHECK(Generator("X") != Generator::timed("X", 1));
	CHECK(Generator::timed("X", 1) != Generator::timed("X", 2));
	CHECK(Generator("X").with_tag("A").without_tag() == Generator("X"));
	CHECK_THROWS_AS(Generator(""), std::invalid_argument);
}

TEST_CASE("addition cancels, merges and keeps distinct words")
{
	NCPoly xy = NCPoly::from_word(word({X, Y}));
	CHECK((xy + (-xy)).is_zero());

	NCPoly yx = NCPoly::from_word(word({Y, X}));
	NCPoly sum = xy + yx;
	CHECK(sum.term_count() == 2);
	CHECK(sum.coeff(word({X, Y})) == 1);
	CHECK(sum.coeff(word({Y, X})) == 1);

	CHECK(gx() + gx() == gx() * Rational(2));
}

TEST_CASE("multiplication is the noncommutative word product")
{
	CHECK(gx() * gy() == NCPoly::from_word(word({X, Y})));
	CHECK(gy() * gx() == NCPoly::from_word(word({Y, X})));
	CHECK(gx() * gy() != gy() * gx());

	NCPoly s = gx() + gy();
	NCPoly sq = s * s;
	CHECK(sq.coeff(word({X, X})) == 1);
	CHECK(sq.coeff(word({X, Y})) == 1);
	CHECK(sq.coeff(word({Y, X})) == 1);
	CHECK(sq.coeff(word({Y, Y})) == 1);

	CHECK(NCPoly(1) * sq == sq);
}

TEST_CASE("commutator basics")
{
	CHECK(commutator(gx(), gx()).is_zero());
	CHECK(commutator(gx(), gy()) ==
	      NCPoly::from_word(word({X, Y})) - NCPoly::from_word(word({Y, X})));

	// [X,[X,Y]] expanded by hand: XXY - 2 XYX + YXX
	NCPoly nested = commutator(gx(), commutator(gx(), gy()));
	NCPoly expected = NCPoly::from_word(word({X, X, Y})) -
	                  NCPoly::from_word(word({X, Y, X})) * Rational(2) +
	                  NCPoly::from_word(word({Y, X, X}));
	CHECK(nested == expected);
}

TEST_CASE("ad_power")
{
	CHECK(ad_power(gy(), gx(), 0) == gx());
	CHECK(ad_power(gy(), gx(), 1) ==
	      NCPoly::from_word(word({Y, X})) - NCPoly::from_word(word({X, Y})));

	NCPoly expected = NCPoly::from_word(word({Y, Y, X})) -
	                  NCPoly::from_word(word({Y, X, Y})) * Rational(2) +
	                  NCPoly::from_word(word({X, Y, Y}));
	CHECK(ad_power(gy(), gx(), 2) == expected);

	CHECK_THROWS_AS(ad_power(gy(), gx(), -1), std::invalid_argument);
}

TEST_CASE("truncation")
{
	NCPoly p = gx() + gx() * gy();
	CHECK(p.truncated(1) == gx());
	CHECK(p.truncated(0).is_zero());
	CHECK((NCPoly(3) + p).truncated(0) == NCPoly(3));

	NCPoly q = gx() * gx() + gx() * gy() * Rational(2) + gy() * gy();
	CHECK(q.truncated(2) == q);
}

TEST_CASE("substitution is a homomorphism")
{
	NCPoly p = gx() * gy() + gy();
	NCPoly swapped = p.substituted(Y, gx() + NCPoly(1));
	CHECK(swapped == gx() * (gx() + NCPoly(1)) + gx() + NCPoly(1));
}

TEST_CASE("exp_truncated")
{
	GradedSeries e = exp_truncated(gx(), 2);
	CHECK(e.component(0) == NCPoly(1));
	CHECK(e.component(1) == gx());
	CHECK(e.component(2) == NCPoly::from_word(word({X, X}), Rational(1, 2)));

	GradedSeries one = exp_truncated(NCPoly(), 5);
	CHECK(one.component(0) == NCPoly(1));
	for (int d = 1; d <= 5; ++d)
		CHECK(one.component(d).is_zero());

	// Degree 3 of exp(X+Y): every length-3 word with coefficient 1/6.
	GradedSeries s = exp_truncated(gx() + gy(), 3);
	const NCPoly& deg3 = s.component(3);
	CHECK(deg3.term_count() == 8);
	for (const auto& [w, c] : deg3.terms())
		CHECK(c == Rational(1, 6));

	CHECK_THROWS_AS(exp_truncated(NCPoly(1) + gx(), 3), std::invalid_argument);
}

TEST_CASE("log_truncated inverts exp_truncated")
{
	GradedSeries logexp = log_truncated(exp_truncated(gx(), 4));
	CHECK(logexp.component(1) == gx());
	for (int d : {0, 2, 3, 4})
		CHECK(logexp.component(d).is_zero());

	GradedSeries bad(2);
	CHECK_THROWS_AS(log_truncated(bad), std::invalid_argument);
}

TEST_CASE("log of the two-exponential product yields the known low orders")
{
	GradedSeries prod = exp_truncated(gx(), 3) * exp_truncated(gy(), 3);
	GradedSeries z = log_truncated(prod);
	CHECK(z.component(2) == commutator(gx(), gy()) * Rational(1, 2));
	NCPoly deg3 = commutator(gx(), commutator(gx(), gy())) * Rational(1, 12) -
	              commutator(gy(), commutator(gx(), gy())) * Rational(1, 12);
	CHECK(z.component(3) == deg3);
}

TEST_CASE("graded series enforces homogeneity and degree bounds")
{
	GradedSeries s(2);
	CHECK_THROWS_AS(s.set_component(1, gx() * gy()), std::invalid_argument);
	CHECK_THROWS_AS(s.component(3), std::out_of_range);
	s.set_component(1, gx());
	CHECK(s.to_poly() == gx());
}

TEST_CASE("canonical rendering")
{
	CHECK(to_string(NCPoly()) == "0");
	NCPoly p = NCPoly(1) + gx() - NCPoly::from_word(word({X, Y}), Rational(1, 2));
	CHECK(to_string(p) == "1 + X - 1/2*X*Y");
	CHECK(to_string(NCPoly::generator(Generator::timed("A", 3))) == "A@3");
	CHECK(to_string(NCPoly::generator(Generator("t").with_tag("B"))) == "t#B");
}

TEST_CASE("tag stripping re-canonicalizes")
{
	Generator tagged = Generator("v").with_tag("A");
	Generator other = Generator("v").with_tag("B");
	NCPoly p = NCPoly::generator(tagged) - NCPoly::generator(other);
	CHECK_FALSE(p.is_zero());
	CHECK(p.without_tags().is_zero());
}
