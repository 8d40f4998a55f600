#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ncorder {

namespace bmp = boost::multiprecision;

using BigInt = bmp::number<bmp::backends::cpp_int_backend<>, bmp::et_off>;

/// Exact rational scalar, always in lowest terms with positive denominator.
using Rational =
    bmp::number<bmp::backends::rational_adaptor<bmp::backends::cpp_int_backend<>>, bmp::et_off>;

inline Rational make_rational(BigInt num, BigInt den)
{
	if (den == 0)
		throw std::invalid_argument("rational with zero denominator");
	Rational r(std::move(num));
	r /= Rational(std::move(den));
	return r;
}

/// Accepts "n" or "n/d" with optional sign on either part.
inline Rational rational_from_string(const std::string& text)
{
	auto slash = text.find('/');
	try
	{
		if (slash == std::string::npos)
			return Rational(BigInt(text));
		return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
	}
	catch (const std::runtime_error&)
	{
		throw std::invalid_argument("malformed rational: '" + text + "'");
	}
}

inline std::string to_string(const Rational& r)
{
	if (denominator(r) == 1)
		return numerator(r).str();
	return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline Rational factorial(int n)
{
	if (n < 0)
		throw std::invalid_argument("factorial of negative argument");
	BigInt f = 1;
	for (int i = 2; i <= n; ++i)
		f *= i;
	return Rational(f);
}

inline Rational binomial(int n, int k)
{
	if (k < 0 || k > n)
		return Rational(0);
	BigInt num = 1, den = 1;
	for (int i = 0; i < k; ++i)
	{
		num *= (n - i);
		den *= (i + 1);
	}
	return make_rational(num, den);
}

} // namespace ncorder
