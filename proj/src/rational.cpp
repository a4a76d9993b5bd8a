#include "toric/rational.hpp"

#include <algorithm>
#include <cctype>

namespace toric {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto digits_only = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits_only(num) || !digits_only(den))
    throw ValidationError("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);  // GMP rejects an explicit plus
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw ValidationError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

std::map<Integer, long> factor_integer(const Integer& x) {
  if (x == 0) throw ValidationError("cannot factor zero");
  Integer n = abs(x);
  std::map<Integer, long> out;
  long e2 = 0;
  while (mpz_even_p(n.get_mpz_t())) {
    n /= 2;
    ++e2;
  }
  if (e2 > 0) out[Integer(2)] = e2;
  Integer d = 3;
  while (d * d <= n) {
    if (n % d == 0) {
      long e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out[d] = e;
    }
    d += 2;
  }
  if (n > 1) out[n] += 1;
  return out;
}

std::map<Integer, long> factor_rational(const Rational& q) {
  if (q == 0) throw ValidationError("cannot factor zero");
  std::map<Integer, long> out = factor_integer(q.get_num());
  for (const auto& [p, e] : factor_integer(q.get_den())) {
    out[p] -= e;
    if (out[p] == 0) out.erase(p);
  }
  return out;
}

long valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw ValidationError("valuation of zero");
  auto count = [&](Integer n) {
    long e = 0;
    n = abs(n);
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    return e;
  };
  return count(q.get_num()) - count(q.get_den());
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool QVecLess::operator()(const QVec& a, const QVec& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

QVec q_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec q_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec q_scale(const Rational& s, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rational q_dot(const QVec& a, const QVec& b) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

QVec q_from_z(const ZVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(a[i]);
  return r;
}

namespace {

// Row echelon form in place; returns pivot column of each eliminated row.
std::vector<int> echelon(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

int rational_rank(QMat rows) { return static_cast<int>(echelon(rows).size()); }

Rational rational_det(QMat m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[col], m[sel]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = 1 / m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<QVec> solve_square(QMat a, QVec rhs) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(rhs[i]);
  const std::vector<int> pivots = echelon(a);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

QMat nullspace(const QMat& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows[0].size();
  QMat m = rows;
  const std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace toric
