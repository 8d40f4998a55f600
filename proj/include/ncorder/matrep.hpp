#pragma once

#include "ncorder/algebra.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace ncorder {

/// Dense complex square matrix, just big enough for the numeric oracle.
class ComplexMatrix
{
  public:
	using Scalar = std::complex<double>;

	ComplexMatrix() = default;
	explicit ComplexMatrix(int dim);
	static ComplexMatrix identity(int dim);

	int dim() const { return dim_; }
	Scalar& at(int r, int c) { return data_[index(r, c)]; }
	const Scalar& at(int r, int c) const { return data_[index(r, c)]; }

	ComplexMatrix& operator+=(const ComplexMatrix& rhs);
	ComplexMatrix& operator-=(const ComplexMatrix& rhs);
	ComplexMatrix& operator*=(Scalar s);
	friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b)
	{
		a += b;
		return a;
	}
	friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b)
	{
		a -= b;
		return a;
	}
	friend ComplexMatrix operator*(ComplexMatrix a, Scalar s)
	{
		a *= s;
		return a;
	}
	friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

	double frobenius_norm() const;

  private:
	std::size_t index(int r, int c) const
	{
		return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
		       static_cast<std::size_t>(c);
	}

	int dim_ = 0;
	std::vector<Scalar> data_;
};

/// Scaled-squaring Taylor exponential; relative accuracy well below 1e-13
/// for norms up to 1.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Power-iteration estimate of the largest singular value.
double spectral_norm_estimate(const ComplexMatrix& m);

struct CompareReport
{
	double difference = 0.0; // Frobenius norm of A - B
	double relative = 0.0;   // difference / max(1, |A|_F)
	double tolerance = 0.0;
	bool pass = false;
};

/// Frobenius difference relative to max(1, |A|_F); passes iff <= tol.
CompareReport compare(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// Assignment of a concrete matrix to every generator a polynomial may
/// mention. Lookups ignore bookkeeping tags (a tagged occurrence denotes
/// the same operator as its untagged base).
class Representation
{
  public:
	Representation(int dim, std::uint64_t seed, double scale);

	int dim() const { return dim_; }
	std::uint64_t seed() const { return seed_; }
	double scale() const { return scale_; }

	/// Rejects matrices of the wrong dimension or with a spectral-norm
	/// estimate above scale * (1 + 1e-9).
	void assign(const Generator& g, ComplexMatrix m);
	bool has(const Generator& g) const;
	const ComplexMatrix& matrix_for(const Generator& g) const;

  private:
	int dim_;
	std::uint64_t seed_;
	double scale_;
	std::map<Generator, ComplexMatrix> assignments_;
};

/// Deterministic in (seed): entries drawn from a seeded generator, each
/// matrix rescaled to Frobenius norm eps (so the operator norm is <= eps).
/// Draws where some pair nearly commutes (|[X,Y]|_F < 1e-6 eps^2) are
/// redrawn with an incremented sub-seed and logged. d = 1 is rejected
/// unless explicitly allowed: everything commutes there.
Representation random_representation(const std::vector<Generator>& generators, int dim,
                                     std::uint64_t seed, double eps, bool allow_dim1 = false,
                                     std::ostream* log = nullptr);

/// Algebra homomorphism into matrices: words multiply out left to right,
/// the empty word is the identity, coefficients enter as doubles.
ComplexMatrix evaluate(const NCPoly& p, const Representation& r);

} // namespace ncorder
