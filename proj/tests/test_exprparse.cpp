#include "ncorder/exprparse.hpp"

#include "ncorder/expansions.hpp"

#include <doctest.h>

using namespace ncorder;

namespace {

Env plain_env() { return Env{}; }

Env env_with_time(const std::string& name = "T")
{
	Env env;
	env.orderings.emplace(name, MonomialOrdering::time());
	return env;
}

} // namespace

TEST_CASE("tokenizer splits the documented forms")
{
	auto toks = tokenize("[X,Y]");
	REQUIRE(toks.size() == 6); // includes End
	CHECK(toks[0].kind == TokenKind::LBracket);
	CHECK(toks[1].kind == TokenKind::Identifier);
	CHECK(toks[1].text == "X");
	CHECK(toks[2].kind == TokenKind::Comma);
	CHECK(toks[3].text == "Y");
	CHECK(toks[4].kind == TokenKind::RBracket);

	auto frac = tokenize("1/2*X*Y");
	CHECK(frac[0].kind == TokenKind::Integer);
	CHECK(frac[1].kind == TokenKind::Slash);
	CHECK(frac[2].kind == TokenKind::Integer);
	CHECK(frac[3].kind == TokenKind::Star);
	CHECK(frac[4].text == "X");

	auto ex = tokenize("exp(X;4)");
	CHECK(ex[0].kind == TokenKind::KwExp);
	CHECK(ex[1].kind == TokenKind::LParen);
	CHECK(ex[2].text == "X");
	CHECK(ex[3].kind == TokenKind::Semicolon);
	CHECK(ex[4].kind == TokenKind::Integer);

	auto arrow = tokenize("D([X,Y] -> X)(Y)");
	CHECK(arrow[0].kind == TokenKind::KwD);
	bool has_arrow = false;
	for (const auto& t : arrow)
		has_arrow = has_arrow || t.kind == TokenKind::Arrow;
	CHECK(has_arrow);

	CHECK_THROWS_AS(tokenize("X $ Y"), ParseError);
	try
	{
		tokenize("X\n $");
	}
	catch (const ParseError& e)
	{
		CHECK(e.line() == 2);
		CHECK(e.col() == 2);
	}
}

TEST_CASE("parse precedence and shapes")
{
	Env env = plain_env();
	CHECK(compile_expression("X*Y + Y*X", env) ==
	      NCPoly::from_word({Generator("X"), Generator("Y")}) +
	          NCPoly::from_word({Generator("Y"), Generator("X")}));

	// Unary minus binds tighter than products combine into sums.
	CHECK(compile_expression("-X*Y + X*Y", env).is_zero());
	CHECK(compile_expression("2 - 1 - 1", env).is_zero());

	NCPoly x = NCPoly::generator(Generator("X"));
	CHECK(compile_expression("(X + X)/2", env) == x);
	CHECK(compile_expression("1/2*X + 1/2*X", env) == x);
}

TEST_CASE("commutator and derivative forms compile through the engine")
{
	Env env = plain_env();
	NCPoly x = NCPoly::generator(Generator("X"));
	NCPoly y = NCPoly::generator(Generator("Y"));
	CHECK(compile_expression("[X,Y]", env) == commutator(x, y));
	CHECK(compile_expression("D([X,Y] -> X)(X + Y)", env) == commutator(x, y));
	CHECK(compile_expression("exp(X;2)", env) ==
	      NCPoly(1) + x + x * x / Rational(2));
}

TEST_CASE("ordering applications require declaration and apply the rule")
{
	Env env = env_with_time();
	CHECK(compile_expression("T[x1*x2*x3]", env) ==
	      NCPoly::from_word({Generator("x3"), Generator("x2"), Generator("x1")}));

	CHECK_THROWS_AS(parse_expression("U[x1]", env), ParseError);
}

TEST_CASE("degree-3 combined-exponent terms from surface syntax")
{
	Env env = plain_env();
	NCPoly p = compile_expression("1/12*[X,[X,Y]] - 1/12*[Y,[X,Y]]", env);
	CHECK(p == bch_log_oracle(3).component(3));
}

TEST_CASE("parse failure positions and messages")
{
	Env env = env_with_time();
	struct Case
	{
		const char* src;
	} cases[] = {{"X +"}, {"(X"}, {"exp(X)"}, {"exp(X;Y)"}, {"[X Y]"}, {"D(X -> )(Y)"}, {"X@"},
	             {"1/0"}};
	for (const auto& c : cases)
	{
		CAPTURE(c.src);
		bool threw = false;
		try
		{
			compile_expression(c.src, env);
		}
		catch (const ParseError& e)
		{
			threw = true;
			CHECK(e.line() >= 1);
			CHECK(e.col() >= 1);
		}
		CHECK(threw);
	}
}

TEST_CASE("unbound symbols are rejected when auto-declare is off")
{
	Env env;
	env.auto_declare_symbols = false;
	env.symbols = {"X"};
	CHECK(compile_expression("X*X", env) ==
	      NCPoly::from_word({Generator("X"), Generator("X")}));
	CHECK_THROWS_AS(compile_expression("X*Q", env), ParseError);
}

TEST_CASE("time-tagged symbols")
{
	Env env = plain_env();
	CHECK(compile_expression("A@3", env) == NCPoly::generator(Generator::timed("A", 3)));
	CHECK(to_dsl(compile_expression("A@3*A@1", env)) == "A@3*A@1");
}

TEST_CASE("canonical rendering round-trips")
{
	Env env = plain_env();
	NCPoly x = NCPoly::generator(Generator("X"));
	NCPoly y = NCPoly::generator(Generator("Y"));
	NCPoly p = NCPoly(1) - x * Rational(3, 2) + commutator(x, y) * Rational(2, 7) +
	           NCPoly::generator(Generator::timed("A", 2)) * y;
	std::string rendered = to_dsl(p);
	CHECK(compile_expression(rendered, env) == p);
	CHECK(to_dsl(compile_expression(rendered, env)) == rendered);

	CHECK(to_dsl(NCPoly()) == "0");
	CHECK(compile_expression("0", env).is_zero());
}
