#include "ncorder/matrep.hpp"

#include "ncorder/expansions.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace ncorder;

namespace {

std::vector<Generator> xy() { return {Generator("X"), Generator("Y")}; }

double entry_distance(const ComplexMatrix& a, const ComplexMatrix& b)
{
	return (a - b).frobenius_norm();
}

} // namespace

TEST_CASE("same seed draws identical matrices")
{
	Representation r1 = random_representation(xy(), 4, 42, 0.05);
	Representation r2 = random_representation(xy(), 4, 42, 0.05);
	for (const auto& g : xy())
		CHECK(entry_distance(r1.matrix_for(g), r2.matrix_for(g)) == 0.0);
}

TEST_CASE("draws are rescaled and non-commuting")
{
	for (std::uint64_t seed = 0; seed < 8; ++seed)
	{
		Representation r = random_representation(xy(), 4, seed, 0.05);
		ComplexMatrix mx = r.matrix_for(Generator("X"));
		ComplexMatrix my = r.matrix_for(Generator("Y"));
		CHECK(mx.frobenius_norm() <= 0.05 * (1.0 + 1e-12));
		CHECK(spectral_norm_estimate(mx) <= 0.05 * (1.0 + 1e-9));
		CHECK((mx * my - my * mx).frobenius_norm() >= 1e-6 * 0.05 * 0.05);
	}
}

TEST_CASE("dimension one is rejected unless overridden")
{
	CHECK_THROWS_AS(random_representation(xy(), 1, 0, 0.05), std::invalid_argument);
	Representation r = random_representation(xy(), 1, 0, 0.05, /*allow_dim1=*/true);
	CHECK(r.dim() == 1);
}

TEST_CASE("evaluation is a homomorphism and respects diagonal commuting")
{
	Representation r(2, 0, 10.0);
	ComplexMatrix dx(2), dy(2);
	dx.at(0, 0) = 2.0;
	dx.at(1, 1) = 3.0;
	dy.at(0, 0) = -1.0;
	dy.at(1, 1) = 0.5;
	r.assign(Generator("X"), dx);
	r.assign(Generator("Y"), dy);

	NCPoly comm = commutator(NCPoly::generator(Generator("X")), NCPoly::generator(Generator("Y")));
	CHECK(evaluate(comm, r).frobenius_norm() == 0.0);

	Representation rnd = random_representation(xy(), 4, 5, 0.5);
	NCPoly p = NCPoly::generator(Generator("X")) * Rational(2) +
	           NCPoly::generator(Generator("Y")) * NCPoly::generator(Generator("X"));
	NCPoly q = NCPoly::generator(Generator("Y")) - NCPoly(1);
	CHECK(entry_distance(evaluate(p * q, rnd), evaluate(p, rnd) * evaluate(q, rnd)) < 1e-14);
	CHECK(entry_distance(evaluate(p + q, rnd), evaluate(p, rnd) + evaluate(q, rnd)) < 1e-14);
	CHECK(evaluate(commutator(p, q), rnd)
	          .frobenius_norm() ==
	      doctest::Approx((evaluate(p, rnd) * evaluate(q, rnd) -
	                       evaluate(q, rnd) * evaluate(p, rnd))
	                          .frobenius_norm())
	          .epsilon(1e-12));

	CHECK_THROWS_AS(evaluate(NCPoly::generator(Generator("Z")), rnd), std::invalid_argument);
}

TEST_CASE("tagged occurrences evaluate through their base symbol")
{
	Representation r = random_representation(xy(), 3, 9, 0.1);
	NCPoly tagged = NCPoly::generator(Generator("X").with_tag("A"));
	NCPoly plain = NCPoly::generator(Generator("X"));
	CHECK(entry_distance(evaluate(tagged, r), evaluate(plain, r)) == 0.0);
}

TEST_CASE("matrix exponential ground truths")
{
	CHECK(entry_distance(matrix_exp(ComplexMatrix(3)), ComplexMatrix::identity(3)) == 0.0);

	ComplexMatrix d(3);
	d.at(0, 0) = {0.3, 0.1};
	d.at(1, 1) = {-0.2, 0.0};
	d.at(2, 2) = {0.0, -0.9};
	ComplexMatrix e = matrix_exp(d);
	for (int i = 0; i < 3; ++i)
		CHECK(std::abs(e.at(i, i) - std::exp(d.at(i, i))) < 1e-13);
	CHECK(std::abs(e.at(0, 1)) == 0.0);

	// exp(M) exp(-M) = I to high accuracy for a norm-1 matrix.
	Representation r = random_representation({Generator("X")}, 4, 3, 1.0);
	ComplexMatrix m = r.matrix_for(Generator("X"));
	ComplexMatrix prod = matrix_exp(m) * matrix_exp(m * ComplexMatrix::Scalar(-1.0, 0.0));
	CHECK(entry_distance(prod, ComplexMatrix::identity(4)) < 1e-13);
}

TEST_CASE("compare reports")
{
	ComplexMatrix a = ComplexMatrix::identity(4);
	CompareReport same = compare(a, a, 0.0);
	CHECK(same.pass);
	CHECK(same.difference == 0.0);

	ComplexMatrix twice = a + a;
	CompareReport off = compare(a, twice, 0.5);
	CHECK_FALSE(off.pass);
	CHECK(off.difference == doctest::Approx(2.0)); // |I - 2I|_F = sqrt(4)
	CHECK(off.relative == doctest::Approx(1.0));

	CHECK_THROWS_AS(compare(a, ComplexMatrix::identity(3), 0.1), std::invalid_argument);
}

TEST_CASE("truncated combined exponent shows seventh-order scaling")
{
	NCPoly exponent = bch_log_oracle(6).to_poly();

	auto residual = [&](double eps) {
		Representation rep = random_representation(xy(), 4, 17, eps);
		ComplexMatrix lhs = matrix_exp(rep.matrix_for(Generator("X"))) *
		                    matrix_exp(rep.matrix_for(Generator("Y")));
		return (lhs - matrix_exp(evaluate(exponent, rep))).frobenius_norm();
	};
	double ratio = residual(0.05) / residual(0.025);
	CHECK(ratio > 80.0);
	CHECK(ratio < 200.0);
}
