#include "parideals/exact.hpp"
#include "parideals/error.hpp"

#include <utility>

namespace parideals {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::SeedIntersectsLevi: return "SeedIntersectsLevi";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAnInversionSet: return "NotAnInversionSet";
    case ErrorCode::NotBorelCompatible: return "NotBorelCompatible";
    case ErrorCode::EmptySubspace: return "EmptySubspace";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::MalformedShape: return "MalformedShape";
    case ErrorCode::InvalidArgs: return "InvalidArgs";
    case ErrorCode::NotClassical: return "NotClassical";
    case ErrorCode::NotTypeA: return "NotTypeA";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    }
    return "Unknown";
}

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return RationalMatrix(rows, RationalVector(cols, Rational(0)));
}

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

namespace {

// Reduces m to row echelon form in place; returns rank and the sign of the row permutation.
int echelon(RationalMatrix& m, int& sign) {
    sign = 1;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

Rational determinant(RationalMatrix m) {
    if (m.empty()) return Rational(1);
    int sign = 1;
    int rk = echelon(m, sign);
    if (rk < static_cast<int>(m.size())) return Rational(0);
    Rational d = sign;
    for (std::size_t i = 0; i < m.size(); ++i) d *= m[i][i];
    return d;
}

int matrix_rank(RationalMatrix m) {
    int sign = 1;
    return echelon(m, sign);
}

bool solve(const RationalMatrix& a, const RationalVector& b, RationalVector& x) {
    const std::size_t n = a.size();
    RationalMatrix m = a;
    for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return false;
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (std::size_t j = c; j <= n; ++j) m[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    x.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return true;
}

RationalMatrix inverse(const RationalMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix out = zero_matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RationalVector e(n, Rational(0)), x;
        e[j] = 1;
        if (!solve(a, e, x)) throw Error(ErrorCode::InvalidArgs, "singular matrix");
        for (std::size_t i = 0; i < n; ++i) out[i][j] = x[i];
    }
    return out;
}

RationalVector mat_vec(const RationalMatrix& a, const RationalVector& x) {
    RationalVector y(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    RationalVector c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    RationalVector c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

RationalVector operator*(const Rational& s, const RationalVector& a) {
    RationalVector c(a);
    for (auto& v : c) v *= s;
    return c;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (long i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

BigInt catalan(long n) {
    if (n < 0) return 0;
    BigInt c = binomial(2 * n, n);
    return c / (n + 1);
}

BigInt pow2(long e) {
    if (e < 0) throw Error(ErrorCode::InvalidArgs, "negative exponent");
    BigInt one = 1;
    return one << static_cast<unsigned>(e);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace parideals
