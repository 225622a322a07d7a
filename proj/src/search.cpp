#include "translab/search.hpp"

#include <map>

namespace translab {

namespace {

// Visits every x with |x|_inf == shell in lexicographic order. With
// half_space set, only the representative of each antipodal pair {x, -x}
// (first nonzero coordinate positive) is visited. prod_limit, when >= 0,
// prunes subtrees whose partial product of max(1,|x_i|) already exceeds it.
// The callback returns true to stop; walk_shell reports whether it stopped.
template <typename Fn>
bool walk_shell(int dim, long long shell, bool half_space, long long prod_limit, Fn&& fn) {
    IntVector x(static_cast<std::size_t>(dim), 0);
    auto rec = [&](auto&& self, int i, bool sup_hit, long long partial,
                   bool zero_prefix) -> bool {
        if (i == dim) return sup_hit && fn(x);
        long long lo = (half_space && zero_prefix) ? 0 : -shell;
        bool last_must_hit = (i == dim - 1) && !sup_hit;
        for (long long v = lo; v <= shell; ++v) {
            if (last_must_hit && v != -shell && v != shell) {
                v = shell - 1;  // only the two faces can complete the shell
                continue;
            }
            long long a = v < 0 ? -v : v;
            long long f = a > 1 ? a : 1;
            if (prod_limit >= 0 &&
                static_cast<__int128>(partial) * f > static_cast<__int128>(prod_limit))
                continue;  // factors are not monotone in v, so skip rather than break
            x[static_cast<std::size_t>(i)] = v;
            if (self(self, i + 1, sup_hit || a == shell, partial * f, zero_prefix && v == 0))
                return true;
        }
        x[static_cast<std::size_t>(i)] = 0;
        return false;
    };
    return rec(rec, 0, false, 1, true);
}

// Pareto front over (t_pow, u_pow): keeps exactly the record-breaking
// candidates, first-come on ties.
class RecordFront {
  public:
    bool offer(const Rational& t, const Rational& u, const IntVector& x, const IntVector& y) {
        auto it = entries_.upper_bound(t);
        if (it != entries_.begin()) {
            auto prev = std::prev(it);
            if (prev->second.u_pow <= u) return false;  // dominated by an earlier record
        }
        auto er = entries_.lower_bound(t);
        while (er != entries_.end() && er->second.u_pow >= u) er = entries_.erase(er);
        entries_.emplace(t, ApproxRecord{x, y, t, u});
        return true;
    }

    std::vector<ApproxRecord> finish() const {
        std::vector<ApproxRecord> out;
        out.reserve(entries_.size());
        for (const auto& [t, rec] : entries_) out.push_back(rec);
        return out;
    }

  private:
    std::map<Rational, ApproxRecord> entries_;
};

}  // namespace

ScanResult best_approximations(const SystemMatrix& theta, const SearchBudget& budget) {
    if (budget.sup_bound < 1)
        throw std::invalid_argument("best_approximations: sup_bound must be >= 1");
    const int m = theta.m(), n = theta.n(), d = theta.d();
    const bool approximate = sgn(theta.entry_eps) > 0;

    RecordFront mult_front, sup_front;
    ScanResult out;
    out.min_residual_entry = 0;
    bool have_min = false;
    Rational min_res;

    RationalVector tx(static_cast<std::size_t>(n));
    for (long long shell = 1; shell <= budget.sup_bound && !out.hit_exact; ++shell) {
        walk_shell(m, shell, true, -1, [&](const IntVector& x) {
            for (int i = 0; i < n; ++i) {
                Rational acc(0);
                for (int j = 0; j < m; ++j)
                    if (x[static_cast<std::size_t>(j)] != 0)
                        acc += theta.at(i, j) * rat(x[static_cast<std::size_t>(j)]);
                tx[static_cast<std::size_t>(i)] = acc;
            }
            IntVector y = nearest_integer_vector(tx);
            Rational u_mult(1), sup_r(0);
            bool zero_entry = false;
            for (int i = 0; i < n; ++i) {
                Rational r = tx[static_cast<std::size_t>(i)] - rat(y[static_cast<std::size_t>(i)]);
                Rational a = abs(r);
                if (sgn(a) == 0) {
                    zero_entry = true;
                } else {
                    if (!have_min || a < min_res) {
                        min_res = a;
                        have_min = true;
                    }
                }
                u_mult *= a;
                if (a > sup_r) sup_r = a;
            }
            if (zero_entry && approximate) throw PrecisionGuardError(shell);

            Rational t_mult = pi_prime_power(x);
            bool is_record = mult_front.offer(t_mult, u_mult, x, y);
            sup_front.offer(pow_int(rat(shell), m), pow_int(sup_r, n), x, y);
            if (is_record && sgn(u_mult) == 0) {
                out.hit_exact = true;
                return true;
            }
            return false;
        });
        out.shells_done = shell;
        if (approximate && have_min) {
            Rational drift = rat(budget.sup_bound) * theta.entry_eps * rat(d);
            if (drift >= budget.guard_margin * min_res) throw PrecisionGuardError(shell);
        }
    }
    if (have_min) out.min_residual_entry = min_res;
    out.mult_records = mult_front.finish();
    out.sup_records = sup_front.finish();
    return out;
}

std::optional<IntegerPair> find_witness(const SystemMatrix& theta, const QualityBudget& budget) {
    const int m = theta.m(), n = theta.n();
    const int dm1 = theta.d() - 1;
    if (budget.m != m || budget.n != n)
        throw std::invalid_argument("find_witness: budget dimensions disagree with the matrix");
    if (budget.ypow_cmp < 1) return std::nullopt;  // no nonzero y fits the region
    long long plim = floor_root(budget.ypow_cmp, dm1);
    if (plim > 2000000000000000LL)
        throw InconclusiveError("find_witness: enumeration region too large");

    std::optional<IntegerPair> found;
    RationalVector ty(static_cast<std::size_t>(m));
    for (long long shell = 1; shell <= plim && !found; ++shell) {
        walk_shell(n, shell, false, plim, [&](const IntVector& y) {
            for (int j = 0; j < m; ++j) {
                Rational acc(0);
                for (int i = 0; i < n; ++i)
                    if (y[static_cast<std::size_t>(i)] != 0)
                        acc += theta.at(i, j) * rat(y[static_cast<std::size_t>(i)]);
                ty[static_cast<std::size_t>(j)] = acc;
            }
            IntVector x = nearest_integer_vector(ty);
            RationalVector r(static_cast<std::size_t>(m));
            Rational prod(1), sup(0);
            for (int j = 0; j < m; ++j) {
                r[static_cast<std::size_t>(j)] =
                    ty[static_cast<std::size_t>(j)] - rat(x[static_cast<std::size_t>(j)]);
                Rational a = abs(r[static_cast<std::size_t>(j)]);
                prod *= a;
                if (a > sup) sup = a;
            }
            if (pow_int(prod, dm1) <= budget.vpow_cmp &&
                pow_int(sup, dm1) <= budget.suppow_cmp) {
                // residual here is the transposed-system residual tr(Theta) y - x
                found = IntegerPair{x, y, r};
                return true;
            }
            return false;
        });
    }
    return found;
}

std::optional<IntegerPair> find_witness_mahler(const SystemMatrix& theta,
                                               const MahlerBudget& budget) {
    const int m = theta.m(), n = theta.n();
    const int dm1 = theta.d() - 1;
    if (budget.ypow_cmp < 1) return std::nullopt;
    long long ylim = floor_root(budget.ypow_cmp, dm1);
    if (ylim > 100000000LL)
        throw InconclusiveError("find_witness_mahler: enumeration region too large");

    std::optional<IntegerPair> found;
    RationalVector ty(static_cast<std::size_t>(m));
    for (long long shell = 1; shell <= ylim && !found; ++shell) {
        walk_shell(n, shell, false, -1, [&](const IntVector& y) {
            for (int j = 0; j < m; ++j) {
                Rational acc(0);
                for (int i = 0; i < n; ++i)
                    if (y[static_cast<std::size_t>(i)] != 0)
                        acc += theta.at(i, j) * rat(y[static_cast<std::size_t>(i)]);
                ty[static_cast<std::size_t>(j)] = acc;
            }
            IntVector x = nearest_integer_vector(ty);
            RationalVector r(static_cast<std::size_t>(m));
            Rational sup(0);
            for (int j = 0; j < m; ++j) {
                r[static_cast<std::size_t>(j)] =
                    ty[static_cast<std::size_t>(j)] - rat(x[static_cast<std::size_t>(j)]);
                Rational a = abs(r[static_cast<std::size_t>(j)]);
                if (a > sup) sup = a;
            }
            if (pow_int(sup, dm1) <= budget.vpow_cmp) {
                found = IntegerPair{x, y, r};
                return true;
            }
            return false;
        });
    }
    return found;
}

bool uniform_feasible(const SystemMatrix& theta, const Rational& t, const Rational& gamma,
                      const SearchBudget& budget) {
    if (t <= 1) throw std::invalid_argument("uniform_feasible: t must exceed 1");
    const int m = theta.m(), n = theta.n();
    Rational tm = pow_int(t, m);
    Integer lim_z;
    mpz_fdiv_q(lim_z.get_mpz_t(), tm.get_num().get_mpz_t(), tm.get_den().get_mpz_t());
    if (sgn(lim_z) < 1) return false;
    if (!lim_z.fits_slong_p() || lim_z.get_si() > budget.sup_bound)
        throw InconclusiveError("uniform_feasible: region exceeds the search budget");
    long long plim = lim_z.get_si();

    // residual predicate (prod |r_i|)^q <= t^{-p n}, gamma = p/q, decided as
    // u^q * t^{p n} <= 1 in exact arithmetic
    if (!gamma.get_num().fits_slong_p() || !gamma.get_den().fits_slong_p())
        throw std::invalid_argument("uniform_feasible: gamma out of supported range");
    long p = gamma.get_num().get_si();
    long q = gamma.get_den().get_si();
    Rational t_pn = pow_int(t, p * static_cast<long>(n));

    bool feasible = false;
    RationalVector tx(static_cast<std::size_t>(n));
    for (long long shell = 1; shell <= plim && !feasible; ++shell) {
        walk_shell(m, shell, true, plim, [&](const IntVector& x) {
            for (int i = 0; i < n; ++i) {
                Rational acc(0);
                for (int j = 0; j < m; ++j)
                    if (x[static_cast<std::size_t>(j)] != 0)
                        acc += theta.at(i, j) * rat(x[static_cast<std::size_t>(j)]);
                tx[static_cast<std::size_t>(i)] = acc;
            }
            IntVector y = nearest_integer_vector(tx);
            Rational u(1);
            for (int i = 0; i < n; ++i)
                u *= abs(tx[static_cast<std::size_t>(i)] - rat(y[static_cast<std::size_t>(i)]));
            if (sgn(u) == 0 || pow_int(u, q) * t_pn <= 1) {
                feasible = true;
                return true;
            }
            return false;
        });
    }
    return feasible;
}

BadnessResult badness_infimum(const SystemMatrix& theta, const SearchBudget& budget) {
    if (budget.sup_bound < 1)
        throw std::invalid_argument("badness_infimum: sup_bound must be >= 1");
    const int m = theta.m(), n = theta.n(), d = theta.d();
    const bool approximate = sgn(theta.entry_eps) > 0;

    BadnessResult out;
    bool have = false;
    bool have_min = false;
    Rational min_res;
    RationalVector tx(static_cast<std::size_t>(n));
    for (long long shell = 1; shell <= budget.sup_bound && !out.exact_zero; ++shell) {
        walk_shell(m, shell, true, -1, [&](const IntVector& x) {
            for (int i = 0; i < n; ++i) {
                Rational acc(0);
                for (int j = 0; j < m; ++j)
                    if (x[static_cast<std::size_t>(j)] != 0)
                        acc += theta.at(i, j) * rat(x[static_cast<std::size_t>(j)]);
                tx[static_cast<std::size_t>(i)] = acc;
            }
            IntVector y = nearest_integer_vector(tx);
            RationalVector r(static_cast<std::size_t>(n));
            Rational u(1);
            bool zero_entry = false;
            for (int i = 0; i < n; ++i) {
                r[static_cast<std::size_t>(i)] =
                    tx[static_cast<std::size_t>(i)] - rat(y[static_cast<std::size_t>(i)]);
                Rational a = abs(r[static_cast<std::size_t>(i)]);
                if (sgn(a) == 0)
                    zero_entry = true;
                else if (!have_min || a < min_res) {
                    min_res = a;
                    have_min = true;
                }
                u *= a;
            }
            if (zero_entry && approximate) throw PrecisionGuardError(shell);
            Rational value = pi_prime_power(x) * u;
            if (!have || value < out.min_value) {
                out.min_value = value;
                out.argmin = IntegerPair{x, y, r};
                have = true;
                if (sgn(value) == 0) {
                    out.exact_zero = true;
                    return true;
                }
            }
            return false;
        });
        if (approximate && have_min) {
            Rational drift = rat(budget.sup_bound) * theta.entry_eps * rat(d);
            if (drift >= budget.guard_margin * min_res) throw PrecisionGuardError(shell);
        }
    }
    return out;
}

LittlewoodScanResult littlewood_scan(const ApproxReal& alpha, const ApproxReal& beta,
                                     long long qmax) {
    if (qmax < 1) throw std::invalid_argument("littlewood_scan: qmax must be >= 1");
    const Integer da = alpha.value.get_den(), db = beta.value.get_den();
    Integer a_step = alpha.value.get_num() % da;  // GMP %: sign of dividend
    if (sgn(a_step) < 0) a_step += da;
    Integer b_step = beta.value.get_num() % db;
    if (sgn(b_step) < 0) b_step += db;

    const bool approximate = sgn(alpha.eps) > 0 || sgn(beta.eps) > 0;
    Rational eps = alpha.eps > beta.eps ? alpha.eps : beta.eps;

    LittlewoodScanResult out;
    out.qmax = qmax;
    Integer cur_a(0), cur_b(0), dist_a, dist_b, vnum, best_num(-1);
    Integer common_den = da * db;
    Integer min_num_a(-1), min_num_b(-1);  // per-side minima over fixed denominators

    for (long long q = 1; q <= qmax; ++q) {
        cur_a += a_step;
        if (cur_a >= da) cur_a -= da;
        cur_b += b_step;
        if (cur_b >= db) cur_b -= db;
        dist_a = cur_a * 2 <= da ? cur_a : da - cur_a;
        dist_b = cur_b * 2 <= db ? cur_b : db - cur_b;

        if ((sgn(dist_a) == 0 || sgn(dist_b) == 0) && approximate)
            throw PrecisionGuardError(q);

        vnum = dist_a * dist_b * static_cast<long>(q);  // value = vnum / (da*db), common across q
        if (best_num < 0 || vnum < best_num) {
            best_num = vnum;
            Rational value(vnum, common_den);
            value.canonicalize();
            Rational fa(dist_a, da), fb(dist_b, db);
            fa.canonicalize();
            fb.canonicalize();
            out.records.push_back({q, value, fa, fb});
            if (sgn(vnum) == 0) break;  // exact hit; nothing can improve on 0
        }
        if (approximate) {
            if (sgn(dist_a) != 0 && (min_num_a < 0 || dist_a < min_num_a)) min_num_a = dist_a;
            if (sgn(dist_b) != 0 && (min_num_b < 0 || dist_b < min_num_b)) min_num_b = dist_b;
        }
    }
    if (approximate && (min_num_a >= 0 || min_num_b >= 0)) {
        Rational min_dist;
        bool have_min = false;
        if (min_num_a >= 0) {
            min_dist = Rational(min_num_a, da);
            min_dist.canonicalize();
            have_min = true;
        }
        if (min_num_b >= 0) {
            Rational rb(min_num_b, db);
            rb.canonicalize();
            if (!have_min || rb < min_dist) min_dist = rb;
        }
        Rational drift = rat(qmax) * eps * 3;
        if (drift >= Rational(1, 1000000) * min_dist) throw PrecisionGuardError(qmax);
    }
    if (!out.records.empty()) out.min_value = out.records.back().value;
    return out;
}

std::optional<long long> littlewood_corollary_check(const ApproxReal& alpha,
                                                    const ApproxReal& beta, long long qmax,
                                                    const Rational& mu) {
    if (qmax < 1) throw std::invalid_argument("littlewood_corollary_check: qmax must be >= 1");
    if (sgn(mu) <= 0) throw std::invalid_argument("littlewood_corollary_check: mu must be positive");
    const Integer da = alpha.value.get_den(), db = beta.value.get_den();
    Integer a_step = alpha.value.get_num() % da;
    if (sgn(a_step) < 0) a_step += da;
    Integer b_step = beta.value.get_num() % db;
    if (sgn(b_step) < 0) b_step += db;

    // Each condition reduces to an integer threshold: X^4/D^4 <= P/Q holds for
    // integer X iff X <= floor((P D^4 / Q)^{1/4}), so the loop body is three
    // integer comparisons against precomputed roots.
    auto fourth_root_threshold = [](const Rational& rhs, const Integer& den) {
        Rational scaled = rhs * pow_int(Rational(den), 4);
        Integer t4;
        mpz_fdiv_q(t4.get_mpz_t(), scaled.get_num().get_mpz_t(),
                   scaled.get_den().get_mpz_t());
        if (sgn(t4) < 0) return Integer(-1);
        Integer root;
        mpz_root(root.get_mpz_t(), t4.get_mpz_t(), 4);
        return root;
    };
    Rational prod_rhs = pow_int(rat(4, 3), 9) * mu;  // vs (q |qa| |qb|)^4
    Rational sup_rhs = pow_int(rat(4, 3), 5) * mu;   // vs max(|qa|, |qb|)^4
    Integer prod_limit = fourth_root_threshold(prod_rhs, da * db);
    Integer sup_limit_a = fourth_root_threshold(sup_rhs, da);
    Integer sup_limit_b = fourth_root_threshold(sup_rhs, db);

    Integer cur_a(0), cur_b(0), dist_a, dist_b;
    for (long long q = 1; q <= qmax; ++q) {
        cur_a += a_step;
        if (cur_a >= da) cur_a -= da;
        cur_b += b_step;
        if (cur_b >= db) cur_b -= db;
        dist_a = cur_a * 2 <= da ? cur_a : da - cur_a;
        dist_b = cur_b * 2 <= db ? cur_b : db - cur_b;
        if (dist_a > sup_limit_a || dist_b > sup_limit_b) continue;
        if (dist_a * dist_b * static_cast<long>(q) <= prod_limit) return q;
    }
    return std::nullopt;
}

}  // namespace translab
