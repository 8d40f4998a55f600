#include "ncorder/serialize.hpp"

#include <doctest.h>

using namespace ncorder;
using nlohmann::json;

TEST_CASE("polynomial documents round-trip bit-exactly")
{
	Generator x("X"), y("Y");
	Generator a2 = Generator::timed("A", 2);
	Generator tagged = Generator("v").with_tag("B");

	NCPoly p = NCPoly::from_word({x, y}, Rational(1, 2)) +
	           NCPoly::from_word({a2}, rational_from_string("-123456789012345678901/7")) +
	           NCPoly::from_word({tagged, x}, Rational(1) / factorial(10)) + NCPoly(3);

	json j = poly_to_json(p);
	CHECK(poly_from_json(j) == p);

	// Serialized text itself is stable under a second pass.
	CHECK(poly_to_json(poly_from_json(j)).dump() == j.dump());
}

TEST_CASE("document shape: canonical term order, string rationals, generator refs")
{
	Generator x("X"), y("Y");
	NCPoly p = NCPoly::from_word({y}, Rational(-1, 3)) + NCPoly::from_word({x, y}, Rational(5));
	json j = poly_to_json(p);

	REQUIRE(j.contains("generators"));
	REQUIRE(j.contains("terms"));
	REQUIRE(j["terms"].size() == 2);
	// Shorter word first.
	CHECK(j["terms"][0]["word"].size() == 1);
	CHECK(j["terms"][1]["word"].size() == 2);
	CHECK(j["terms"][0]["coeff"]["num"] == "-1");
	CHECK(j["terms"][0]["coeff"]["den"] == "3");
	// Word entries reference the generator list.
	int yi = j["terms"][0]["word"][0].get<int>();
	CHECK(j["generators"][yi]["id"] == "Y");

	CHECK(poly_to_json(NCPoly())["terms"].empty());
}

TEST_CASE("malformed polynomial documents are rejected")
{
	json j = {{"generators", json::array()},
	          {"terms", {{{"coeff", {{"num", "1"}, {"den", "1"}}}, {"word", {0}}}}}};
	CHECK_THROWS_AS(poly_from_json(j), std::invalid_argument);
}

TEST_CASE("decomposition files")
{
	json j = {{"A", {{"1", "2/3"}, {"2", "1"}}}, {"B", {{"2", "-1/2"}}}};
	Decomposition d = decomposition_from_json(j);
	CHECK(d.omega() == std::vector<std::string>{"A", "B"});
	CHECK(d.omega_prime() == std::vector<std::string>{"1", "2"});
	CHECK(d.entry("A", "1") == Rational(2, 3));
	CHECK(d.entry("B", "1") == 0);
	CHECK(d.entry("B", "2") == Rational(-1, 2));

	CHECK(decomposition_from_json(decomposition_to_json(d)).entry("A", "2") == 1);

	CHECK_THROWS_AS(decomposition_from_json(json::array()), std::invalid_argument);
	CHECK_THROWS_AS(decomposition_from_json(json{{"A", {{"1", "0"}}}}), std::invalid_argument);
	CHECK_THROWS_AS(decomposition_from_json(json{{"A", {{"1", "x"}}}}), std::invalid_argument);
}

TEST_CASE("verification reports serialize with their contraction table")
{
	OrderingPair pair{MonomialOrdering::time(), MonomialOrdering::anti_time()};
	Word w = {Generator("1"), Generator("2")};
	VerificationReport report = got_verify(pair, Decomposition::identity(), w);
	json j = report_to_json(report);
	CHECK(j["equal"] == true);
	CHECK(j["orderings"]["o"] == "time");
	CHECK(j["orderings"]["oprime"] == "antitime");
	REQUIRE(j["contractions"].size() == 1);
	CHECK(poly_from_json(j["contractions"][0]["poly"]) ==
	      -commutator(NCPoly::generator(Generator("1")), NCPoly::generator(Generator("2"))));
	CHECK(poly_from_json(j["lhs"]) == report.lhs);
	CHECK(poly_from_json(j["rhs"]) == report.rhs);
}
