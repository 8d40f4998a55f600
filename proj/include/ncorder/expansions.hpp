#pragma once

#include "ncorder/algebra.hpp"

namespace ncorder {

inline constexpr int kBchDegreeCap = 8;
inline constexpr int kMagnusTermCap = 15; // bound on steps * max_degree

enum class BchMethod
{
	GotRecursion,
	LogOracle,
	ClassicalWSeries
};

struct BchConfig
{
	int max_degree = kBchDegreeCap;
	BchMethod method = BchMethod::GotRecursion;
	int degree_cap = kBchDegreeCap;
};

enum class MagnusMethod
{
	GotForm,
	LogOracle
};

struct MagnusConfig
{
	int steps = 1;
	int max_degree = 1;
	MagnusMethod method = MagnusMethod::GotForm;
	int term_cap = kMagnusTermCap;
};

/// Exact Bernoulli numbers under the B_1 = -1/2 convention, via the
/// recurrence sum_{j<=n} binomial(n+1, j) B_j = 0.
class BernoulliTable
{
  public:
	explicit BernoulliTable(int max_index);
	const Rational& value(int i) const;
	int max_index() const { return static_cast<int>(values_.size()) - 1; }

  private:
	std::vector<Rational> values_;
};

Rational bernoulli(int n);

/// The two exponent symbols of the product identity.
Generator bch_x();
Generator bch_y();

/// z_0 = 1, z_n = (1/n) (X z + Y z + ([X,Y].d/dX) z): the Taylor orders of
/// the combined exponent whose exponential equals e^X e^Y.
GradedSeries bch_recursion(const BchConfig& cfg);

/// Truncation of e^X e^Y: degree d holds sum_{k+l=d} X^k Y^l / (k! l!).
GradedSeries product_exp_series(int n, int degree_cap = kBchDegreeCap);

/// log of the product series: the exact combined-exponent truncation,
/// independent of the recursion above.
GradedSeries bch_log_oracle(int n, int degree_cap = kBchDegreeCap);

/// Direction series of the classical route: sum_n B_n/n! ad_Y^n X,
/// truncated at word degree max_degree.
NCPoly bch_w_series(int max_degree);

/// Classical nested-commutator series: W = sum B_n/n! ad_Y^n X, then
/// Z = sum 1/n! (W.d/dY)^n Y, truncated at the configured degree.
GradedSeries bch_classical_w(const BchConfig& cfg);

/// Time-stepped generator A@s.
Generator stepped_generator(int s);

/// Ordered product of exponentials e^{A_m} ... e^{A_1}, highest step
/// leftmost, truncated to degree n.
GradedSeries dyson_discrete(int m, int n, int term_cap = kMagnusTermCap);

/// Stepped-exponent recursion z_n = (1/n) E(z_{n-1}) with
/// E(P) = sum_s A_s P + sum_{u>s} ([A_u,A_s].d/dA_u) P; its exponential
/// reproduces the ordered product of exponentials.
GradedSeries magnus_got(const MagnusConfig& cfg);

/// log of the ordered product of exponentials: the exact single-exponent
/// truncation.
GradedSeries magnus_log_oracle(int m, int n, int term_cap = kMagnusTermCap);

/// Direct triple sum over the step grid of the nested-commutator
/// combination left over by the third-order rearrangement of the stepped
/// exponent, with the step function split into the three strict chains.
/// Identically zero by the Jacobi identity.
NCPoly magnus_third_order_cancellation(int m);

} // namespace ncorder
