#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace translab {

// All decision-making arithmetic in this project is exact. Rationals are
// GMP-backed and always kept in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long long>;

// gmpxx lacks long long overloads on some builds; all integral conversions
// funnel through here (long is 64-bit on every platform this targets).
static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Parses "p/q", "p", or a plain decimal such as "-12.375" (converted exactly).
Rational rational_from_string(const std::string& s);

// "p/q" if the denominator is not 1, else "p".
std::string to_fraction_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

// log2 of a positive rational, robust for values far outside double range.
double log2_rational(const Rational& r);

// base^exp with integer exp (negative allowed; base != 0 in that case).
Rational pow_int(const Rational& base, long exp);

// Largest integer k with k^e <= bound (bound >= 0, e >= 1).
long long floor_root(const Rational& bound, int e);

// Nearest integer; exact ties (fractional part 1/2) round toward zero.
Integer nearest_integer(const Rational& v);

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

// A real number represented by a rational approximant together with a bound
// on the approximation error (0 means the value is exact).
struct ApproxReal {
    Rational value;
    Rational eps = Rational(0);
};

// The n x m system matrix with exact rational entries. `entry_eps` carries the
// largest declared approximation error over the entries (0 for exact input);
// the search layer uses it to run its precision guard.
class SystemMatrix {
  public:
    SystemMatrix() : n_(0), m_(0) {}
    SystemMatrix(int n, int m)
        : n_(n), m_(m), entries_(static_cast<std::size_t>(n) * m, Rational(0)) {
        if (n < 1 || m < 1) throw std::invalid_argument("matrix dimensions must be positive");
        if (n + m < 2) throw std::invalid_argument("d = n + m must be at least 2");
    }

    int n() const { return n_; }  // rows = output dimension
    int m() const { return m_; }  // cols = input dimension
    int d() const { return n_ + m_; }

    Rational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * m_ + j]; }
    const Rational& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * m_ + j];
    }

    SystemMatrix transposed() const {
        SystemMatrix t(m_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < m_; ++j) t.at(j, i) = at(i, j);
        t.entry_eps = entry_eps;
        t.label = label;
        return t;
    }

    Rational entry_eps = Rational(0);
    std::string label;

  private:
    int n_, m_;
    std::vector<Rational> entries_;
};

struct PrecisionGuardError : std::runtime_error {
    long long shell;
    explicit PrecisionGuardError(long long shell_)
        : std::runtime_error("precision guard violated at shell " + std::to_string(shell_)),
          shell(shell_) {}
};

struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace translab
