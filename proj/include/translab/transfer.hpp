#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "translab/budget.hpp"
#include "translab/core.hpp"
#include "translab/search.hpp"
#include "translab/secdual.hpp"

namespace translab {

// Tight budget from a hypothesis pair: X^m = pi_prime_power(x),
// U^n = pi_power(Theta x - y). Throws if the residual quality is >= 1;
// an exact solution (upow = 0) sets the flag instead of comparators.
QualityBudget make_budget(const SystemMatrix& theta, const IntVector& x, const IntVector& y);

// Budget from explicit X^m and U^n (looser bounds a caller chose).
QualityBudget make_budget_explicit(const SystemMatrix& theta, const Rational& xpow,
                                   const Rational& upow);

// Sup-norm analogue: X = |x|_inf, U = |Theta x - y|_inf.
MahlerBudget make_mahler_budget(const SystemMatrix& theta, const IntVector& x,
                                const IntVector& y);

// A self-contained verification certificate. Every inequality is re-decided
// in exact rational arithmetic from the stored data; `checks` lists each
// comparison (lhs <= rhs unless the name says otherwise).
struct Certificate {
    SystemMatrix theta;
    IntVector input_x, input_y;
    bool mahler = false;
    QualityBudget budget;        // filled for the multiplicative mode
    MahlerBudget mahler_budget;  // filled for the sup-norm mode
    bool exact_shortcut = false;
    bool witness_found = false;
    IntVector witness_x, witness_y;
    std::vector<CheckLine> checks;
    bool all_ok = false;
};

// Multiplicative transference: builds the (tight or supplied) budget, runs the
// witness search, and re-verifies every inequality. A missing witness leaves
// witness_found false — callers treat that as a falsification event.
Certificate verify_multitrans(const SystemMatrix& theta, const IntVector& x, const IntVector& y,
                              const std::optional<QualityBudget>& explicit_budget = {});

// Sup-norm transference with factor (d-1) in place of delta(d)^{-1/(d-1)}.
Certificate verify_mahler(const SystemMatrix& theta, const IntVector& x, const IntVector& y);

// True iff the multiplicative Y-budget factor beats the sup-norm one, i.e.
// delta(d) * (d-1)^{d-1} > 1. Exact; false at d = 2 where both factors are 1.
bool multiplicative_budget_tighter(int d);

// Recomputes every check line of a certificate from its stored inputs.
bool revalidate(const Certificate& cert);

// ---------------------------------------------------------------------------
// Arbitrary-function transference
// ---------------------------------------------------------------------------

struct FunctionSpec {
    enum class Kind { power, log_littlewood_1, log_littlewood_2, tabulated };
    Kind kind = Kind::power;
    Rational gamma = Rational(1);                   // power: psi(t) = t^-gamma
    std::vector<std::pair<double, double>> table;   // tabulated, ascending t

    double psi(double t) const;
    double t_min() const;  // left edge of the usable domain
    double t_max() const;

    static FunctionSpec power(const Rational& gamma);
    static FunctionSpec log_littlewood_1();  // t^{-1/2} (log t)^{-1/2}, needs (m,n) = (1,2)
    static FunctionSpec log_littlewood_2();  // t^{-2} / log(1+t),      needs (m,n) = (2,1)
    static FunctionSpec tabulated(std::vector<std::pair<double, double>> table);
};

struct TransferReport {
    bool f_increasing = false;
    double psi_below_one_from = 0;  // threshold with psi(t) < 1 beyond it
    bool growth_condition_ok = false;  // t^{(1-n)/n} psi(t) decreasing on the tail
};

// phi = g o f^{-1} with
//   f(t) = D^{-1/(d-1)} (t^m psi(t)^{1-m})^{1/(d-1)},
//   g(t) = D^{-1/(d-1)} (t^{1-n} psi(t)^n)^{1/(d-1)},   D = delta(m+n).
// f is inverted by monotone bisection to 1e-12 relative tolerance.
class PhiTransfer {
  public:
    PhiTransfer(const FunctionSpec& spec, int m, int n);

    double f(double t) const;
    double g(double t) const;
    double f_inverse(double s) const;   // throws std::domain_error outside range
    double operator()(double s) const;  // phi(s)
    const TransferReport& report() const { return report_; }
    double s_min() const { return f(spec_.t_min()); }
    double s_max() const { return f(spec_.t_max()); }

  private:
    FunctionSpec spec_;
    int m_, n_;
    double delta_d_;
    TransferReport report_;
};

PhiTransfer phi_from_psi(const FunctionSpec& spec, int m, int n);

// chi = h o f^{-1} with h(t) = D^{-1/(d-1)} (t^m psi(t)^n)^{1/(d-1)}, the
// sup-norm conclusion bound as a function of the hypothesis parameter
// (n = 1, so d - 1 = m); transfers multiplicative data to ordinary
// approximation of the transposed system.
class ChiTransfer {
  public:
    ChiTransfer(const FunctionSpec& spec, int m);
    double h(double t) const;
    double operator()(double s) const;
    const PhiTransfer& base() const { return base_; }

  private:
    FunctionSpec spec_;
    int m_;
    double delta_d_;
    PhiTransfer base_;
};

ChiTransfer chi_from_psi(const FunctionSpec& spec, int m);

}  // namespace translab
