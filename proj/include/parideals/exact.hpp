#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace parideals {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols);
RationalMatrix identity_matrix(std::size_t n);

// Gaussian elimination over Q.
Rational determinant(RationalMatrix m);
int matrix_rank(RationalMatrix m);

// Solves a x = b; returns false when a is singular.
bool solve(const RationalMatrix& a, const RationalVector& b, RationalVector& x);
RationalMatrix inverse(const RationalMatrix& a);

RationalVector mat_vec(const RationalMatrix& a, const RationalVector& x);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& a);

BigInt factorial(unsigned n);
// Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);
BigInt catalan(long n);
BigInt pow2(long e);

std::string to_string(const Rational& q);

}  // namespace parideals
