#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<long>;

// Raised on malformed input or broken preconditions (CLI exit code 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation cannot be completed (CLI exit code 3).
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sign determination ran past the configured bit cap.
struct PrecisionExhausted : ComputationError {
  using ComputationError::ComputationError;
};

// Parses "p", "-p" or "p/q" with nonzero q; result is canonical.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

bool is_prime(const Integer& p);

// Prime factorization of |x| by trial division, x nonzero.
std::map<Integer, long> factor_integer(const Integer& x);

// Signed exponents: negative entries come from the denominator.
std::map<Integer, long> factor_rational(const Rational& q);

// p-adic valuation v_p(q) of a nonzero rational.
long valuation(const Rational& q, const Integer& p);

Integer factorial(unsigned n);

struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const;
};

QVec q_add(const QVec& a, const QVec& b);
QVec q_sub(const QVec& a, const QVec& b);
QVec q_scale(const Rational& s, const QVec& a);
Rational q_dot(const QVec& a, const QVec& b);
QVec q_from_z(const ZVec& a);

// Rank of the row span, by Gaussian elimination.
int rational_rank(QMat rows);

// Determinant of a square matrix.
Rational rational_det(QMat m);

// Unique solution of a square system, or nullopt when singular.
std::optional<QVec> solve_square(QMat a, QVec rhs);

// Basis of { x : rows * x = 0 }.
QMat nullspace(const QMat& rows);

}  // namespace toric
