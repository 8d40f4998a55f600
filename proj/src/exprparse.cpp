#include "ncorder/exprparse.hpp"

#include "ncorder/gotcore.hpp"

#include <cctype>
#include <sstream>

namespace ncorder {

std::vector<Token> tokenize(const std::string& src)
{
	std::vector<Token> tokens;
	int line = 1, col = 1;
	std::size_t i = 0;
	auto advance = [&](std::size_t n) {
		for (std::size_t j = 0; j < n; ++j, ++i)
		{
			if (src[i] == '\n')
			{
				++line;
				col = 1;
			}
			else
				++col;
		}
	};
	while (i < src.size())
	{
		unsigned char c = static_cast<unsigned char>(src[i]);
		if (std::isspace(c))
		{
			advance(1);
			continue;
		}
		int tl = line, tc = col;
		if (std::isalpha(c))
		{
			std::size_t j = i;
			while (j < src.size() &&
			       (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
				++j;
			std::string text = src.substr(i, j - i);
			TokenKind kind = TokenKind::Identifier;
			if (text == "exp")
				kind = TokenKind::KwExp;
			else if (text == "D")
				kind = TokenKind::KwD;
			tokens.push_back({kind, std::move(text), tl, tc});
			advance(j - i);
			continue;
		}
		if (std::isdigit(c))
		{
			std::size_t j = i;
			while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
				++j;
			tokens.push_back({TokenKind::Integer, src.substr(i, j - i), tl, tc});
			advance(j - i);
			continue;
		}
		if (src[i] == '-' && i + 1 < src.size() && src[i + 1] == '>')
		{
			tokens.push_back({TokenKind::Arrow, "->", tl, tc});
			advance(2);
			continue;
		}
		TokenKind kind;
		switch (src[i])
		{
		case '+': kind = TokenKind::Plus; break;
		case '-': kind = TokenKind::Minus; break;
		case '*': kind = TokenKind::Star; break;
		case '/': kind = TokenKind::Slash; break;
		case '[': kind = TokenKind::LBracket; break;
		case ']': kind = TokenKind::RBracket; break;
		case '(': kind = TokenKind::LParen; break;
		case ')': kind = TokenKind::RParen; break;
		case ',': kind = TokenKind::Comma; break;
		case ';': kind = TokenKind::Semicolon; break;
		case '@': kind = TokenKind::At; break;
		default:
			throw ParseError(std::string("illegal character '") + src[i] + "'", tl, tc);
		}
		tokens.push_back({kind, std::string(1, src[i]), tl, tc});
		advance(1);
	}
	tokens.push_back({TokenKind::End, "", line, col});
	return tokens;
}

namespace {

class Parser
{
  public:
	Parser(const std::vector<Token>& tokens, const Env& env) : tokens_(tokens), env_(env) {}

	ExprPtr run()
	{
		ExprPtr e = parse_expr();
		expect(TokenKind::End, "end of input");
		return e;
	}

  private:
	const Token& peek(std::size_t ahead = 0) const
	{
		std::size_t at = pos_ + ahead;
		if (at >= tokens_.size())
			at = tokens_.size() - 1;
		return tokens_[at];
	}
	const Token& take() { return tokens_[pos_++]; }
	bool accept(TokenKind k)
	{
		if (peek().kind == k)
		{
			++pos_;
			return true;
		}
		return false;
	}
	const Token& expect(TokenKind k, const char* what)
	{
		if (peek().kind != k)
			throw ParseError(std::string("expected ") + what + ", found '" + peek().text + "'",
			                 peek().line, peek().col);
		return take();
	}

	template <typename Node> ExprPtr make(Node node, const Token& at)
	{
		return std::make_shared<Expr>(Expr{std::move(node), at.line, at.col});
	}

	ExprPtr parse_expr()
	{
		ExprPtr lhs = parse_term();
		while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus)
		{
			Token op = take();
			ExprPtr rhs = parse_term();
			lhs = make(SumNode{lhs, rhs, op.kind == TokenKind::Minus}, op);
		}
		return lhs;
	}

	ExprPtr parse_term()
	{
		ExprPtr lhs = parse_factor();
		for (;;)
		{
			if (peek().kind == TokenKind::Star)
			{
				Token op = take();
				ExprPtr rhs = parse_factor();
				lhs = make(ProductNode{lhs, rhs}, op);
			}
			else if (peek().kind == TokenKind::Slash)
			{
				Token op = take();
				const Token& den = expect(TokenKind::Integer, "integer after '/'");
				Rational d(BigInt(den.text));
				if (d == 0)
					throw ParseError("division by zero", den.line, den.col);
				ExprPtr rhs = make(LiteralNode{Rational(1) / d}, den);
				lhs = make(ProductNode{lhs, rhs}, op);
			}
			else
				break;
		}
		return lhs;
	}

	ExprPtr parse_factor()
	{
		if (peek().kind == TokenKind::Minus)
		{
			Token op = take();
			return make(NegateNode{parse_factor()}, op);
		}
		return parse_primary();
	}

	static int checked_int(const Token& t)
	{
		try
		{
			return std::stoi(t.text);
		}
		catch (const std::out_of_range&)
		{
			throw ParseError("integer out of range: " + t.text, t.line, t.col);
		}
	}

	Generator parse_symbol_token()
	{
		const Token& id = expect(TokenKind::Identifier, "symbol name");
		Generator g(id.text);
		if (accept(TokenKind::At))
		{
			const Token& t = expect(TokenKind::Integer, "integer time tag after '@'");
			g.time = checked_int(t);
		}
		return g;
	}

	ExprPtr parse_primary()
	{
		const Token& t = peek();
		switch (t.kind)
		{
		case TokenKind::Integer:
		{
			Token lit = take();
			return make(LiteralNode{Rational(BigInt(lit.text))}, lit);
		}
		case TokenKind::LParen:
		{
			take();
			ExprPtr e = parse_expr();
			expect(TokenKind::RParen, "')'");
			return e;
		}
		case TokenKind::LBracket:
		{
			Token open = take();
			ExprPtr lhs = parse_expr();
			expect(TokenKind::Comma, "',' in commutator");
			ExprPtr rhs = parse_expr();
			expect(TokenKind::RBracket, "']'");
			return make(CommutatorNode{lhs, rhs}, open);
		}
		case TokenKind::KwExp:
		{
			Token kw = take();
			expect(TokenKind::LParen, "'(' after exp");
			ExprPtr arg = parse_expr();
			expect(TokenKind::Semicolon, "';' and a truncation degree in exp(...)");
			const Token& deg = expect(TokenKind::Integer, "truncation degree");
			expect(TokenKind::RParen, "')'");
			return make(ExpNode{arg, checked_int(deg)}, kw);
		}
		case TokenKind::KwD:
		{
			Token kw = take();
			expect(TokenKind::LParen, "'(' after D");
			ExprPtr direction = parse_expr();
			expect(TokenKind::Arrow, "'->' in D(direction -> target)");
			Generator target = parse_symbol_token();
			expect(TokenKind::RParen, "')'");
			expect(TokenKind::LParen, "'(' before the derivative operand");
			ExprPtr arg = parse_expr();
			expect(TokenKind::RParen, "')'");
			return make(DerivativeNode{direction, target, arg}, kw);
		}
		case TokenKind::Identifier:
		{
			if (peek(1).kind == TokenKind::LBracket)
			{
				Token name = take();
				if (!env_.orderings.count(name.text))
					throw ParseError("undeclared ordering '" + name.text + "'", name.line,
					                 name.col);
				take(); // '['
				ExprPtr arg = parse_expr();
				expect(TokenKind::RBracket, "']'");
				return make(OrderingAppNode{name.text, arg}, name);
			}
			Token at = peek();
			return make(SymbolNode{parse_symbol_token()}, at);
		}
		default:
			throw ParseError("expected an expression, found '" + t.text + "'", t.line, t.col);
		}
	}

	const std::vector<Token>& tokens_;
	const Env& env_;
	std::size_t pos_ = 0;
};

struct CompileVisitor
{
	const Env& env;
	int line;
	int col;

	NCPoly dispatch(const ExprPtr& e) const
	{
		CompileVisitor v{env, e->line, e->col};
		return std::visit(v, e->node);
	}

	NCPoly operator()(const SymbolNode& n) const
	{
		if (!env.auto_declare_symbols && !env.symbols.count(n.symbol.id))
			throw ParseError("unbound symbol '" + n.symbol.id + "'", line, col);
		return NCPoly::generator(n.symbol);
	}
	NCPoly operator()(const LiteralNode& n) const { return NCPoly(n.value); }
	NCPoly operator()(const NegateNode& n) const { return -dispatch(n.operand); }
	NCPoly operator()(const SumNode& n) const
	{
		NCPoly l = dispatch(n.lhs);
		return n.subtract ? l - dispatch(n.rhs) : l + dispatch(n.rhs);
	}
	NCPoly operator()(const ProductNode& n) const { return dispatch(n.lhs) * dispatch(n.rhs); }
	NCPoly operator()(const CommutatorNode& n) const
	{
		return commutator(dispatch(n.lhs), dispatch(n.rhs));
	}
	NCPoly operator()(const ExpNode& n) const
	{
		if (n.degree < 0)
			throw ParseError("exp truncation degree must be nonnegative", line, col);
		NCPoly arg = dispatch(n.arg);
		if (arg.constant_term() != 0)
			throw ParseError("exp argument must have zero constant term", line, col);
		return exp_truncated(arg, n.degree).to_poly();
	}
	NCPoly operator()(const OrderingAppNode& n) const
	{
		return env.orderings.at(n.rule).apply(dispatch(n.arg));
	}
	NCPoly operator()(const DerivativeNode& n) const
	{
		return directional_derivative(dispatch(n.direction), n.target, dispatch(n.arg));
	}
};

} // namespace

ExprPtr parse(const std::vector<Token>& tokens, const Env& env)
{
	return Parser(tokens, env).run();
}

ExprPtr parse_expression(const std::string& src, const Env& env)
{
	return parse(tokenize(src), env);
}

NCPoly compile(const ExprPtr& ast, const Env& env)
{
	return CompileVisitor{env, ast->line, ast->col}.dispatch(ast);
}

NCPoly compile_expression(const std::string& src, const Env& env)
{
	return compile(parse_expression(src, env), env);
}

std::string to_dsl(const NCPoly& p)
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
		{
			out << to_string(mag);
			continue;
		}
		if (mag != 1)
			out << to_string(mag) << "*";
		for (std::size_t i = 0; i < w.size(); ++i)
		{
			if (i)
				out << "*";
			out << w[i].id;
			if (w[i].time)
				out << "@" << *w[i].time;
		}
	}
	return out.str();
}

} // namespace ncorder
