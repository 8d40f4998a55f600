#pragma once

#include "ncorder/algebra.hpp"
#include "ncorder/ordering.hpp"

#include <map>
#include <memory>
#include <set>
#include <variant>
#include <vector>

namespace ncorder {

enum class TokenKind
{
	Identifier,
	Integer,
	Plus,
	Minus,
	Star,
	Slash,
	LBracket,
	RBracket,
	LParen,
	RParen,
	Comma,
	Semicolon,
	At,
	Arrow,
	KwExp,
	KwD,
	End
};

struct Token
{
	TokenKind kind;
	std::string text;
	int line = 1;
	int col = 1;
};

class ParseError : public std::runtime_error
{
  public:
	ParseError(const std::string& msg, int line, int col)
	    : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
	      line_(line), col_(col)
	{
	}
	int line() const { return line_; }
	int col() const { return col_; }

  private:
	int line_;
	int col_;
};

/// Identifiers [A-Za-z][A-Za-z0-9_]*, integers, punctuation and the
/// keywords exp / D / ->. Whitespace separates; anything else is rejected
/// with its position.
std::vector<Token> tokenize(const std::string& src);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct SymbolNode
{
	Generator symbol;
};
struct LiteralNode
{
	Rational value;
};
struct NegateNode
{
	ExprPtr operand;
};
struct SumNode
{
	ExprPtr lhs;
	ExprPtr rhs;
	bool subtract = false;
};
struct ProductNode
{
	ExprPtr lhs;
	ExprPtr rhs;
};
struct CommutatorNode
{
	ExprPtr lhs;
	ExprPtr rhs;
};
struct ExpNode
{
	ExprPtr arg;
	int degree = 0;
};
struct OrderingAppNode
{
	std::string rule;
	ExprPtr arg;
};
struct DerivativeNode
{
	ExprPtr direction;
	Generator target;
	ExprPtr arg;
};

struct Expr
{
	std::variant<SymbolNode, LiteralNode, NegateNode, SumNode, ProductNode, CommutatorNode,
	             ExpNode, OrderingAppNode, DerivativeNode>
	    node;
	int line = 1;
	int col = 1;
};

/// Declarations visible to the parser and compiler. Ordering applications
/// must name a declared rule. Symbols are declared explicitly or, when
/// auto_declare_symbols is set, bound on first use.
struct Env
{
	std::map<std::string, MonomialOrdering> orderings;
	bool auto_declare_symbols = true;
	std::set<std::string> symbols;
};

/// Grammar, loosest binding first:
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*' factor) | ('/' INTEGER))*
///   factor  := '-' factor | primary
///   primary := INTEGER
///            | IDENT ('@' INTEGER)?          -- symbol, optional time tag
///            | IDENT '[' expr ']'            -- declared ordering applied
///            | '[' expr ',' expr ']'         -- commutator
///            | 'exp' '(' expr ';' INTEGER ')'-- truncated exponential
///            | 'D' '(' expr '->' target ')' '(' expr ')'
///            | '(' expr ')'
ExprPtr parse(const std::vector<Token>& tokens, const Env& env);
ExprPtr parse_expression(const std::string& src, const Env& env);

/// Bottom-up evaluation into a canonical polynomial.
NCPoly compile(const ExprPtr& ast, const Env& env);
NCPoly compile_expression(const std::string& src, const Env& env);

/// Canonical, re-parseable surface form of an (untagged) polynomial.
std::string to_dsl(const NCPoly& p);

} // namespace ncorder
