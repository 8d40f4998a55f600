#include "ncorder/matrep.hpp"

#include <cmath>
#include <ostream>
#include <random>

namespace ncorder {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim)
{
	if (dim < 1)
		throw std::invalid_argument("matrix dimension must be positive");
	data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Scalar(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim)
{
	ComplexMatrix m(dim);
	for (int i = 0; i < dim; ++i)
		m.at(i, i) = Scalar(1.0, 0.0);
	return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs)
{
	if (dim_ != rhs.dim_)
		throw std::invalid_argument("matrix shape mismatch");
	for (std::size_t i = 0; i < data_.size(); ++i)
		data_[i] += rhs.data_[i];
	return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs)
{
	if (dim_ != rhs.dim_)
		throw std::invalid_argument("matrix shape mismatch");
	for (std::size_t i = 0; i < data_.size(); ++i)
		data_[i] -= rhs.data_[i];
	return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Scalar s)
{
	for (auto& v : data_)
		v *= s;
	return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
	if (a.dim_ != b.dim_)
		throw std::invalid_argument("matrix shape mismatch");
	const int n = a.dim_;
	ComplexMatrix out(n);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			const ComplexMatrix::Scalar aik = a.at(i, k);
			if (aik == ComplexMatrix::Scalar(0.0, 0.0))
				continue;
			for (int j = 0; j < n; ++j)
				out.at(i, j) += aik * b.at(k, j);
		}
	return out;
}

double ComplexMatrix::frobenius_norm() const
{
	double acc = 0.0;
	for (const auto& v : data_)
		acc += std::norm(v);
	return std::sqrt(acc);
}

ComplexMatrix matrix_exp(const ComplexMatrix& m)
{
	int squarings = 0;
	double norm = m.frobenius_norm();
	while (norm > 0.25 && squarings < 64)
	{
		norm /= 2.0;
		++squarings;
	}
	ComplexMatrix scaled = m;
	scaled *= ComplexMatrix::Scalar(std::ldexp(1.0, -squarings), 0.0);

	ComplexMatrix result = ComplexMatrix::identity(m.dim());
	ComplexMatrix term = ComplexMatrix::identity(m.dim());
	for (int k = 1; k <= 40; ++k)
	{
		term = term * scaled;
		term *= ComplexMatrix::Scalar(1.0 / k, 0.0);
		result += term;
		if (term.frobenius_norm() <= 1e-18 * result.frobenius_norm())
			break;
	}
	for (int i = 0; i < squarings; ++i)
		result = result * result;
	return result;
}

double spectral_norm_estimate(const ComplexMatrix& m)
{
	const int n = m.dim();
	std::vector<ComplexMatrix::Scalar> v(static_cast<std::size_t>(n));
	for (int i = 0; i < n; ++i)
		v[static_cast<std::size_t>(i)] = ComplexMatrix::Scalar(1.0 / std::sqrt(double(n)), 0.0);

	double sigma = 0.0;
	for (int iter = 0; iter < 50; ++iter)
	{
		// w = M v, u = M^H w; sigma^2 approximates the top eigenvalue of M^H M
		std::vector<ComplexMatrix::Scalar> w(static_cast<std::size_t>(n));
		for (int i = 0; i < n; ++i)
		{
			ComplexMatrix::Scalar acc(0.0, 0.0);
			for (int j = 0; j < n; ++j)
				acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
			w[static_cast<std::size_t>(i)] = acc;
		}
		std::vector<ComplexMatrix::Scalar> u(static_cast<std::size_t>(n));
		double unorm = 0.0;
		for (int j = 0; j < n; ++j)
		{
			ComplexMatrix::Scalar acc(0.0, 0.0);
			for (int i = 0; i < n; ++i)
				acc += std::conj(m.at(i, j)) * w[static_cast<std::size_t>(i)];
			u[static_cast<std::size_t>(j)] = acc;
			unorm += std::norm(acc);
		}
		unorm = std::sqrt(unorm);
		if (unorm == 0.0)
			return 0.0;
		double next = std::sqrt(unorm);
		for (int j = 0; j < n; ++j)
			v[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j)] / unorm;
		if (std::abs(next - sigma) <= 1e-12 * std::max(1.0, next))
		{
			sigma = next;
			break;
		}
		sigma = next;
	}
	return sigma;
}

CompareReport compare(const ComplexMatrix& a, const ComplexMatrix& b, double tol)
{
	if (a.dim() != b.dim())
		throw std::invalid_argument("matrix shape mismatch");
	CompareReport r;
	r.difference = (a - b).frobenius_norm();
	r.relative = r.difference / std::max(1.0, a.frobenius_norm());
	r.tolerance = tol;
	r.pass = r.relative <= tol;
	return r;
}

Representation::Representation(int dim, std::uint64_t seed, double scale)
    : dim_(dim), seed_(seed), scale_(scale)
{
	if (dim < 1)
		throw std::invalid_argument("representation dimension must be positive");
	if (scale <= 0.0)
		throw std::invalid_argument("representation scale must be positive");
}

void Representation::assign(const Generator& g, ComplexMatrix m)
{
	if (m.dim() != dim_)
		throw std::invalid_argument("matrix shape mismatch");
	if (spectral_norm_estimate(m) > scale_ * (1.0 + 1e-9))
		throw std::invalid_argument("assigned matrix exceeds the representation norm bound");
	assignments_.insert_or_assign(g.without_tag(), std::move(m));
}

bool Representation::has(const Generator& g) const
{
	return assignments_.count(g.without_tag()) > 0;
}

const ComplexMatrix& Representation::matrix_for(const Generator& g) const
{
	auto it = assignments_.find(g.without_tag());
	if (it == assignments_.end())
		throw std::invalid_argument("generator has no matrix assignment: " + to_string(g));
	return it->second;
}

Representation random_representation(const std::vector<Generator>& generators, int dim,
                                     std::uint64_t seed, double eps, bool allow_dim1,
                                     std::ostream* log)
{
	if (dim < 2 && !allow_dim1)
		throw std::invalid_argument("dimension 1 makes everything commute; pass the override to allow it");
	Representation rep(dim, seed, eps);

	for (std::uint64_t sub = 0; sub < 64; ++sub)
	{
		std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + sub);
		std::uniform_real_distribution<double> dist(-1.0, 1.0);

		std::vector<ComplexMatrix> drawn;
		drawn.reserve(generators.size());
		for (std::size_t gi = 0; gi < generators.size(); ++gi)
		{
			ComplexMatrix m(dim);
			for (int r = 0; r < dim; ++r)
				for (int c = 0; c < dim; ++c)
					m.at(r, c) = ComplexMatrix::Scalar(dist(rng), dist(rng));
			double norm = m.frobenius_norm();
			if (norm > 0.0)
				m *= ComplexMatrix::Scalar(eps / norm, 0.0);
			drawn.push_back(std::move(m));
		}

		bool degenerate = false;
		for (std::size_t i = 0; i < drawn.size() && !degenerate; ++i)
			for (std::size_t j = i + 1; j < drawn.size() && !degenerate; ++j)
			{
				ComplexMatrix comm = drawn[i] * drawn[j] - drawn[j] * drawn[i];
				if (comm.frobenius_norm() < 1e-6 * eps * eps)
					degenerate = true;
			}
		if (degenerate && dim > 1 && generators.size() > 1)
		{
			if (log)
				*log << "random_representation: degenerate draw at sub-seed " << sub
				     << ", redrawing\n";
			continue;
		}

		for (std::size_t gi = 0; gi < generators.size(); ++gi)
			rep.assign(generators[gi], drawn[gi]);
		return rep;
	}
	throw std::runtime_error("random_representation: no non-degenerate draw found");
}

ComplexMatrix evaluate(const NCPoly& p, const Representation& r)
{
	ComplexMatrix out(r.dim());
	for (const auto& [w, c] : p.terms())
	{
		ComplexMatrix prod = ComplexMatrix::identity(r.dim());
		for (const auto& g : w)
			prod = prod * r.matrix_for(g);
		prod *= ComplexMatrix::Scalar(to_double(c), 0.0);
		out += prod;
	}
	return out;
}

} // namespace ncorder
