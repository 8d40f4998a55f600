#pragma once

#include "ncorder/algebra.hpp"
#include "ncorder/ordering.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ncorder {

/// The two rules being related: `o` is the target rule (written ≻ in the
/// step functions), `o_prime` the rule the product is rewritten under (⊳).
struct OrderingPair
{
	MonomialOrdering o;
	MonomialOrdering o_prime;
};

/// Linear decomposition of the Omega symbols over the Omega' basis:
/// phi_alpha = sum_k L[alpha][k] * theta_k. Every row must carry at least
/// one nonzero entry. The identity decomposition means both index sets
/// coincide and L is the Kronecker delta.
class Decomposition
{
  public:
	using Entries = std::map<std::pair<std::string, std::string>, Rational>;

	static Decomposition identity() { return Decomposition(); }

	Decomposition(std::vector<std::string> omega, std::vector<std::string> omega_prime,
	              Entries entries);

	bool is_identity() const { return identity_; }
	const std::vector<std::string>& omega() const { return omega_; }
	const std::vector<std::string>& omega_prime() const { return omega_prime_; }

	/// Zero when the pair carries no entry; throws if either label is
	/// outside its index set.
	Rational entry(const std::string& alpha, const std::string& k) const;

	/// sum_k L[alpha][k] * theta_k as a polynomial over untagged symbols.
	NCPoly row_poly(const std::string& alpha) const;

  private:
	Decomposition() = default;

	bool identity_ = true;
	std::vector<std::string> omega_;
	std::vector<std::string> omega_prime_;
	Entries entries_;
};

namespace testhook {
/// When set, every contraction is negated. Exists solely so the property
/// suite can demonstrate it detects a wrong contraction sign.
bool& negate_contraction_sign();
} // namespace testhook

/// Same-set contraction (identity decomposition):
/// (theta'_{b over a} - theta_{b over a}) * [phi_a, phi_b].
NCPoly contraction_same(const OrderingPair& pair, const Generator& a, const Generator& b);

/// Basis contraction for decomposed symbols:
/// (theta'_{l over k} - theta_{beta over alpha}) * [theta_k, theta_l].
NCPoly contraction_general(const OrderingPair& pair, const Decomposition& d, const std::string& k,
                           const std::string& l, const std::string& alpha,
                           const std::string& beta);

/// C_{alpha beta} = sum_{k,l} L[alpha][k] L[beta][l] c_{kl alpha beta};
/// reduces to contraction_same for the identity decomposition.
NCPoly contraction_matrix(const OrderingPair& pair, const Decomposition& d,
                          const std::string& alpha, const std::string& beta);

/// Directional derivative: every occurrence of `target` in every word of
/// `operand` is replaced, one at a time, by each word of `direction`;
/// results are summed. Linear in both arguments and Leibniz by
/// construction.
NCPoly directional_derivative(const NCPoly& direction, const Generator& target,
                              const NCPoly& operand);

/// Occurrence removal: the directional derivative along the identity word.
NCPoly scalar_derivative(const Generator& target, const NCPoly& operand);

/// Evaluates the primed product O'[prod phi'] for the same-set case: the
/// word is stably arranged by o_prime, then expanded right to left with
/// P_{i+1} = phi_g * P_i + sum_b dderiv(C_{g b}, phi_b, P_i). The rightmost
/// factor is never primed and derivatives act only rightward, both by the
/// shape of the recursion.
NCPoly primed_product_eval(const OrderingPair& pair, const Word& w);

/// Decomposed variant: each word factor expands over the Omega' basis with
/// every basis occurrence tagged by its parent Omega label; each branch is
/// arranged by o_prime (ranks ignore tags), expanded right to left with the
/// basis contraction fed the two occurrences' parents, and the branches are
/// summed with their L coefficients. Tags are stripped from the result.
NCPoly primed_product_eval_general(const OrderingPair& pair, const Decomposition& d,
                                   const Word& w);

struct ContractionEntry
{
	std::string alpha;
	std::string beta;
	NCPoly poly;
};

struct VerificationReport
{
	NCPoly lhs;
	NCPoly rhs;
	bool equal = false;
	std::vector<ContractionEntry> contractions;
	Word word;
	std::string ordering_name;
	std::string ordering_prime_name;
};

/// Checks O[w] == O'[prod phi'] exactly. Inequality is a report outcome,
/// not an error. For a non-identity decomposition both sides are expanded
/// over the Omega' basis before comparison.
VerificationReport got_verify(const OrderingPair& pair, const Decomposition& d, const Word& w);

/// Push identity: phi_a * O[w] == O[phi_a w] + sum_b theta_{b over a} *
/// dderiv([phi_a, phi_b], phi_b, O[w]), as exact polynomials.
bool push_lemma_check(const MonomialOrdering& o, const Generator& a, const Word& w);

} // namespace ncorder
