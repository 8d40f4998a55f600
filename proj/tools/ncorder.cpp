#include "ncorder/expansions.hpp"
#include "ncorder/exprparse.hpp"
#include "ncorder/gotcore.hpp"
#include "ncorder/matrep.hpp"
#include "ncorder/ordering.hpp"
#include "ncorder/serialize.hpp"
#include "ncorder/suite.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ncorder;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct CommonFlags
{
	std::string format = "text";
	std::vector<std::string> ordering_decls;
};

void add_common(CLI::App* cmd, CommonFlags& flags)
{
	cmd->add_option("--format", flags.format, "Output format")
	    ->check(CLI::IsMember({"text", "json"}))
	    ->capture_default_str();
	cmd->add_option("--ordering", flags.ordering_decls,
	                "Declare a DSL-visible ordering as name=spec (repeatable)");
}

Env make_env(const CommonFlags& flags)
{
	Env env;
	for (const auto& decl : flags.ordering_decls)
	{
		auto eq = decl.find('=');
		if (eq == std::string::npos || eq == 0)
			throw std::invalid_argument("ordering declaration must be name=spec: " + decl);
		env.orderings.emplace(decl.substr(0, eq),
		                      MonomialOrdering::from_spec(decl.substr(eq + 1)));
	}
	return env;
}

Generator parse_index(const std::string& text)
{
	auto at = text.find('@');
	if (at == std::string::npos)
		return Generator(text);
	return Generator::timed(text.substr(0, at), std::stoi(text.substr(at + 1)));
}

Word parse_word_spec(const std::string& spec)
{
	Word w;
	std::size_t start = 0;
	while (start < spec.size())
	{
		std::size_t comma = spec.find(',', start);
		std::size_t end = comma == std::string::npos ? spec.size() : comma;
		if (end == start)
			throw std::invalid_argument("empty index in word spec: " + spec);
		w.push_back(parse_index(spec.substr(start, end - start)));
		start = end + 1;
	}
	return w;
}

void emit_poly(const NCPoly& p, const std::string& format)
{
	if (format == "json")
		std::cout << poly_to_json(p).dump(2) << "\n"; // the canonical document, reloadable via --poly
	else
		std::cout << to_dsl(p) << "\n";
}

struct Verdict
{
	std::string name;
	bool pass;
};

int emit_series(const GradedSeries& s, const std::vector<Verdict>& verdicts,
                const std::string& format)
{
	bool all_pass = true;
	for (const auto& v : verdicts)
		all_pass = all_pass && v.pass;
	if (format == "json")
	{
		json degrees = json::array();
		for (int d = 0; d <= s.max_degree(); ++d)
			degrees.push_back({{"degree", d},
			                   {"poly", poly_to_json(s.component(d))},
			                   {"rendered", to_dsl(s.component(d))}});
		json checks = json::array();
		for (const auto& v : verdicts)
			checks.push_back({{"name", v.name}, {"pass", v.pass}});
		std::cout << json{{"degrees", std::move(degrees)}, {"verdicts", std::move(checks)}}.dump(2)
		          << "\n";
	}
	else
	{
		for (int d = 0; d <= s.max_degree(); ++d)
			std::cout << "z[" << d << "] = " << to_dsl(s.component(d)) << "\n";
		for (const auto& v : verdicts)
			std::cout << "verdict " << v.name << ": " << (v.pass ? "pass" : "FAIL") << "\n";
	}
	return all_pass ? kExitOk : kExitVerificationFailed;
}

NCPoly load_poly_document(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw std::invalid_argument("cannot open polynomial file: " + path);
	json j;
	try
	{
		in >> j;
		return poly_from_json(j);
	}
	catch (const json::exception& e)
	{
		throw std::invalid_argument("malformed polynomial file: " + std::string(e.what()));
	}
}

NCPoly input_poly(const std::string& expr, const std::string& poly_file, const CommonFlags& flags)
{
	if (expr.empty() == poly_file.empty())
		throw std::invalid_argument("exactly one of --expr and --poly is required");
	if (!poly_file.empty())
		return load_poly_document(poly_file);
	return compile_expression(expr, make_env(flags));
}

int run_order(const std::string& rule, const std::string& expr, const std::string& poly_file,
              const CommonFlags& flags)
{
	NCPoly p = input_poly(expr, poly_file, flags);
	emit_poly(MonomialOrdering::from_spec(rule).apply(p), flags.format);
	return kExitOk;
}

int run_eval(const std::string& expr, const std::string& poly_file, const CommonFlags& flags)
{
	emit_poly(input_poly(expr, poly_file, flags), flags.format);
	return kExitOk;
}

struct NumericFlags
{
	bool enabled = false;
	int dim = 4;
	double eps = 0.05;
	double tol = 1e-12;
	std::uint64_t seed = 0;
};

int run_got_verify(const std::string& o_spec, const std::string& oprime_spec,
                   const std::string& word_spec, const std::string& l_file,
                   const NumericFlags& numeric, const CommonFlags& flags)
{
	OrderingPair pair{MonomialOrdering::from_spec(o_spec),
	                  MonomialOrdering::from_spec(oprime_spec)};
	Decomposition d = Decomposition::identity();
	if (!l_file.empty())
	{
		std::ifstream in(l_file);
		if (!in)
			throw std::invalid_argument("cannot open decomposition file: " + l_file);
		json j;
		try
		{
			in >> j;
		}
		catch (const json::exception& e)
		{
			throw std::invalid_argument("malformed decomposition file: " + std::string(e.what()));
		}
		d = decomposition_from_json(j);
	}

	VerificationReport report = got_verify(pair, d, parse_word_spec(word_spec));
	json jnumeric;
	bool numeric_pass = true;
	if (numeric.enabled)
	{
		std::vector<Generator> basis;
		if (d.is_identity())
		{
			auto sup = support(report.lhs);
			basis.assign(sup.begin(), sup.end());
		}
		else
			for (const auto& k : d.omega_prime())
				basis.emplace_back(k);
		if (!basis.empty())
		{
			Representation rep =
			    random_representation(basis, numeric.dim, numeric.seed, numeric.eps, false, &std::cerr);
			CompareReport c = compare(evaluate(report.lhs, rep), evaluate(report.rhs, rep),
			                          numeric.tol);
			numeric_pass = c.pass;
			jnumeric = json{{"dim", numeric.dim},      {"eps", numeric.eps},
			                {"seed", numeric.seed},    {"difference", c.difference},
			                {"relative", c.relative},  {"tolerance", c.tolerance},
			                {"pass", c.pass}};
		}
	}

	if (flags.format == "json")
	{
		json j = report_to_json(report);
		if (!jnumeric.is_null())
			j["numeric"] = jnumeric;
		std::cout << j.dump(2) << "\n";
	}
	else
	{
		std::cout << "word: " << to_string(report.word) << "\n";
		std::cout << "o: " << report.ordering_name << "  oprime: " << report.ordering_prime_name
		          << "\n";
		std::cout << "lhs: " << to_dsl(report.lhs) << "\n";
		std::cout << "rhs: " << to_dsl(report.rhs) << "\n";
		for (const auto& entry : report.contractions)
			std::cout << "C[" << entry.alpha << "," << entry.beta << "] = " << to_dsl(entry.poly)
			          << "\n";
		if (!jnumeric.is_null())
			std::cout << "numeric: relative " << jnumeric["relative"].get<double>() << " (tol "
			          << jnumeric["tolerance"].get<double>() << ") "
			          << (numeric_pass ? "pass" : "FAIL") << "\n";
		std::cout << "equal: " << (report.equal ? "yes" : "NO") << "\n";
	}
	return (report.equal && numeric_pass) ? kExitOk : kExitVerificationFailed;
}

int run_bch(int max_order, const std::string& method, bool no_verify, int cap,
            const CommonFlags& flags)
{
	std::vector<Verdict> verdicts;
	GradedSeries listing(0);
	if (method == "got")
	{
		GradedSeries z = bch_recursion({max_order, BchMethod::GotRecursion, cap});
		listing = z;
		if (!no_verify)
		{
			verdicts.push_back({"matches-product-series", z == product_exp_series(max_order, cap)});
			GradedSeries oracle = bch_log_oracle(max_order, cap);
			verdicts.push_back({"log-oracle-consistent",
			                    exp_truncated(oracle.to_poly(), max_order) ==
			                        product_exp_series(max_order, cap)});
		}
	}
	else if (method == "classical")
	{
		GradedSeries z = bch_classical_w({max_order, BchMethod::ClassicalWSeries, cap});
		listing = z;
		if (!no_verify)
			verdicts.push_back({"matches-log-oracle", z == bch_log_oracle(max_order, cap)});
	}
	else // oracle
	{
		GradedSeries z = bch_log_oracle(max_order, cap);
		listing = z;
		if (!no_verify)
			verdicts.push_back({"exp-matches-product-series",
			                    exp_truncated(z.to_poly(), max_order) ==
			                        product_exp_series(max_order, cap)});
	}
	return emit_series(listing, verdicts, flags.format);
}

int run_magnus(int steps, int max_order, const std::string& method, bool no_verify, int term_cap,
               const CommonFlags& flags)
{
	std::vector<Verdict> verdicts;
	GradedSeries listing(0);
	if (method == "got")
	{
		GradedSeries z = magnus_got({steps, max_order, MagnusMethod::GotForm, term_cap});
		listing = z;
		if (!no_verify)
		{
			GradedSeries dyson = dyson_discrete(steps, max_order, term_cap);
			verdicts.push_back({"matches-dyson-product", z == dyson});
			GradedSeries oracle = magnus_log_oracle(steps, max_order, term_cap);
			verdicts.push_back(
			    {"log-oracle-consistent",
			     exp_truncated(oracle.to_poly(), max_order) == dyson});
		}
	}
	else // oracle
	{
		GradedSeries z = magnus_log_oracle(steps, max_order, term_cap);
		listing = z;
		if (!no_verify)
			verdicts.push_back({"exp-matches-dyson-product",
			                    exp_truncated(z.to_poly(), max_order) ==
			                        dyson_discrete(steps, max_order, term_cap)});
	}
	return emit_series(listing, verdicts, flags.format);
}

int run_suite(int cases, std::uint64_t seed, bool mutate_sign, const CommonFlags& flags)
{
	testhook::negate_contraction_sign() = mutate_sign;
	std::vector<PropertyResult> results;
	if (flags.format == "json")
	{
		std::ostringstream sink;
		results = run_property_suite({cases, seed}, sink);
		json props = json::array();
		for (const auto& r : results)
			props.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
		std::cout << json{{"properties", std::move(props)}, {"passed", suite_passed(results)}}
		                 .dump(2)
		          << "\n";
	}
	else
	{
		results = run_property_suite({cases, seed}, std::cout);
		int total = 0, failed = 0;
		for (const auto& r : results)
		{
			total += r.cases;
			failed += r.failures;
		}
		std::cout << results.size() << " properties, " << total << " cases, " << failed
		          << " failures\n";
	}
	testhook::negate_contraction_sign() = false;
	return suite_passed(results) ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Operator-ordering workbench: free-algebra expressions, ordering "
	             "transforms, contraction-based verification, and exponential expansions"};
	app.require_subcommand(1);

	// order
	auto* order_cmd = app.add_subcommand("order", "Apply an ordering rule to an expression");
	std::string order_rule, order_expr, order_poly;
	CommonFlags order_flags;
	order_cmd->add_option("--rule", order_rule, "Ordering spec")->required();
	order_cmd->add_option("--expr", order_expr, "Expression");
	order_cmd->add_option("--poly", order_poly, "Polynomial document (JSON) instead of --expr");
	add_common(order_cmd, order_flags);

	// eval
	auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression to canonical form");
	std::string eval_expr, eval_poly;
	CommonFlags eval_flags;
	eval_cmd->add_option("--expr", eval_expr, "Expression");
	eval_cmd->add_option("--poly", eval_poly, "Polynomial document (JSON) instead of --expr");
	add_common(eval_cmd, eval_flags);

	// got verify
	auto* got_cmd = app.add_subcommand("got", "Ordering-transform verification");
	got_cmd->require_subcommand(1);
	auto* verify_cmd = got_cmd->add_subcommand("verify", "Check O[w] == O'[primed product]");
	std::string got_o, got_oprime, got_word, got_l;
	NumericFlags numeric;
	CommonFlags got_flags;
	verify_cmd->add_option("--o", got_o, "Target ordering spec")->required();
	verify_cmd->add_option("--oprime", got_oprime, "Rewriting ordering spec")->required();
	verify_cmd->add_option("--word", got_word, "Comma-separated index word")->required();
	verify_cmd->add_option("--L", got_l, "Decomposition file (JSON rows of rational strings)");
	verify_cmd->add_flag("--numeric", numeric.enabled, "Also verify in a random matrix representation");
	verify_cmd->add_option("--dim", numeric.dim, "Representation dimension")->capture_default_str();
	verify_cmd->add_option("--eps", numeric.eps, "Matrix norm scale")->capture_default_str();
	verify_cmd->add_option("--tol", numeric.tol, "Relative Frobenius tolerance")
	    ->capture_default_str();
	verify_cmd->add_option("--seed", numeric.seed, "Representation seed")
	    ->envname("NCORDER_SEED")
	    ->capture_default_str();
	add_common(verify_cmd, got_flags);

	// bch
	auto* bch_cmd = app.add_subcommand("bch", "Combined-exponent expansion of e^X e^Y");
	int bch_order = 3, bch_cap = kBchDegreeCap;
	std::string bch_method = "got";
	bool bch_no_verify = false;
	CommonFlags bch_flags;
	bch_cmd->add_option("--max-order", bch_order, "Highest degree")->required();
	bch_cmd->add_option("--method", bch_method, "Expansion route")
	    ->check(CLI::IsMember({"got", "classical", "oracle"}))
	    ->capture_default_str();
	bch_cmd->add_flag("--no-verify", bch_no_verify, "Skip oracle verdicts");
	bch_cmd->add_option("--cap", bch_cap, "Degree cap")->capture_default_str();
	add_common(bch_cmd, bch_flags);

	// magnus
	auto* mag_cmd = app.add_subcommand("magnus", "Stepped single-exponent expansion");
	int mag_steps = 1, mag_order = 2, mag_cap = kMagnusTermCap;
	std::string mag_method = "got";
	bool mag_no_verify = false;
	CommonFlags mag_flags;
	mag_cmd->add_option("--steps", mag_steps, "Number of time steps")->required();
	mag_cmd->add_option("--max-order", mag_order, "Highest degree")->required();
	mag_cmd->add_option("--method", mag_method, "Expansion route")
	    ->check(CLI::IsMember({"got", "oracle"}))
	    ->capture_default_str();
	mag_cmd->add_flag("--no-verify", mag_no_verify, "Skip oracle verdicts");
	mag_cmd->add_option("--term-cap", mag_cap, "Bound on steps * degree")->capture_default_str();
	add_common(mag_cmd, mag_flags);

	// suite
	auto* suite_cmd = app.add_subcommand("suite", "Run the full property suite");
	int suite_cases = 100;
	std::uint64_t suite_seed = 0;
	bool suite_mutate = false;
	CommonFlags suite_flags;
	suite_cmd->add_option("--cases", suite_cases, "Cases per randomized property")
	    ->capture_default_str();
	suite_cmd->add_option("--seed", suite_seed, "Suite seed")
	    ->envname("NCORDER_SEED")
	    ->capture_default_str();
	suite_cmd->add_flag("--negate-contraction-sign", suite_mutate)->group(""); // test-only hook
	add_common(suite_cmd, suite_flags);

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		int code = app.exit(e);
		return code == 0 ? kExitOk : kExitUsage;
	}

	try
	{
		if (order_cmd->parsed())
			return run_order(order_rule, order_expr, order_poly, order_flags);
		if (eval_cmd->parsed())
			return run_eval(eval_expr, eval_poly, eval_flags);
		if (verify_cmd->parsed())
			return run_got_verify(got_o, got_oprime, got_word, got_l, numeric, got_flags);
		if (bch_cmd->parsed())
			return run_bch(bch_order, bch_method, bch_no_verify, bch_cap, bch_flags);
		if (mag_cmd->parsed())
			return run_magnus(mag_steps, mag_order, mag_method, mag_no_verify, mag_cap, mag_flags);
		if (suite_cmd->parsed())
			return run_suite(suite_cases, suite_seed, suite_mutate, suite_flags);
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}
