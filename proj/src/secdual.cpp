#include "translab/secdual.hpp"

#include <algorithm>
#include <cmath>

#include "translab/delta.hpp"
#include "translab/rng.hpp"

namespace translab {

// ---------------------------------------------------------------------------
// SquareMatrix
// ---------------------------------------------------------------------------

SquareMatrix SquareMatrix::identity(int d) {
    SquareMatrix a(d);
    for (int i = 0; i < d; ++i) a.at(i, i) = 1;
    return a;
}

SquareMatrix SquareMatrix::diagonal(const RationalVector& diag) {
    SquareMatrix a(static_cast<int>(diag.size()));
    for (int i = 0; i < a.dim(); ++i) a.at(i, i) = diag[i];
    return a;
}

Rational SquareMatrix::det() const {
    SquareMatrix w = *this;
    int d = d_;
    Rational result(1);
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r)
            if (sgn(w.at(r, col)) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < d; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            result = -result;
        }
        result *= w.at(col, col);
        for (int r = col + 1; r < d; ++r) {
            if (sgn(w.at(r, col)) == 0) continue;
            Rational f = w.at(r, col) / w.at(col, col);
            for (int j = col; j < d; ++j) w.at(r, j) -= f * w.at(col, j);
        }
    }
    return result;
}

SquareMatrix SquareMatrix::transposed() const {
    SquareMatrix t(d_);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) t.at(j, i) = at(i, j);
    return t;
}

SquareMatrix SquareMatrix::inverse() const {
    int d = d_;
    SquareMatrix w = *this;
    SquareMatrix inv = identity(d);
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r)
            if (sgn(w.at(r, col)) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("inverse of a singular matrix");
        if (pivot != col)
            for (int j = 0; j < d; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = w.at(col, col);
        for (int j = 0; j < d; ++j) {
            w.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col || sgn(w.at(r, col)) == 0) continue;
            Rational f = w.at(r, col);
            for (int j = 0; j < d; ++j) {
                w.at(r, j) -= f * w.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

SquareMatrix SquareMatrix::cofactor_matrix() const {
    int d = d_;
    SquareMatrix c(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            SquareMatrix minor(d - 1);
            for (int r = 0, rr = 0; r < d; ++r) {
                if (r == i) continue;
                for (int s = 0, ss = 0; s < d; ++s) {
                    if (s == j) continue;
                    minor.at(rr, ss) = at(r, s);
                    ++ss;
                }
                ++rr;
            }
            Rational m = d > 1 ? minor.det() : Rational(1);
            c.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
        }
    return c;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
    SquareMatrix out(d_);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            Rational acc(0);
            for (int k = 0; k < d_; ++k) acc += at(i, k) * rhs.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

RationalVector SquareMatrix::operator*(const RationalVector& v) const {
    RationalVector out(d_);
    for (int i = 0; i < d_; ++i) {
        Rational acc(0);
        for (int k = 0; k < d_; ++k) acc += at(i, k) * v[k];
        out[i] = acc;
    }
    return out;
}

RationalVector SquareMatrix::mul_transposed(const RationalVector& v) const {
    RationalVector out(d_);
    for (int i = 0; i < d_; ++i) {
        Rational acc(0);
        for (int k = 0; k < d_; ++k) acc += at(k, i) * v[k];
        out[i] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sections
// ---------------------------------------------------------------------------

AxisBox unit_cube(int d) { return AxisBox{RationalVector(d, Rational(1))}; }

Parallelepiped Parallelepiped::cube(int d) {
    return Parallelepiped{unit_cube(d), SquareMatrix::identity(d)};
}

double SectionValue::value() const { return to_double(coeff) * std::sqrt(to_double(norm_sq)); }

static Rational norm_squared(const RationalVector& v) {
    Rational s(0);
    for (const Rational& x : v) s += x * x;
    return s;
}

Rational section_coefficient(const AxisBox& box, const RationalVector& dir) {
    int d = box.dim();
    if (static_cast<int>(dir.size()) != d)
        throw std::invalid_argument("section_coefficient: dimension mismatch");
    RationalVector a;  // |g_i| c_i over the support of g
    Rational face(1), prod_c(1), prod_a(1), total(0);
    for (int i = 0; i < d; ++i) {
        if (sgn(box.half_sides[i]) <= 0)
            throw std::invalid_argument("section_coefficient: half-sides must be positive");
        if (sgn(dir[i]) == 0) {
            face *= 2 * box.half_sides[i];
        } else {
            Rational ai = abs(dir[i]) * box.half_sides[i];
            a.push_back(ai);
            prod_c *= box.half_sides[i];
            prod_a *= ai;
            total += ai;
        }
    }
    int k = static_cast<int>(a.size());
    if (k == 0) throw std::invalid_argument("section_coefficient: zero direction");
    if (k > 30) throw std::invalid_argument("section_coefficient: dimension too large");

    Rational sum(0);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        Rational arg = total;
        int bits = 0;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                arg -= 2 * a[i];
                ++bits;
            }
        if (sgn(arg) <= 0) continue;  // truncated power (arg)_+^{k-1}
        Rational term = pow_int(arg, k - 1);
        if (bits % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), k - 1);
    Rational q = face * prod_c * sum / (prod_a * Rational(fact));
    return q;
}

SectionValue box_section_volume(const AxisBox& box, const RationalVector& dir) {
    return SectionValue{section_coefficient(box, dir), norm_squared(dir)};
}

double box_section_volume_mc(const AxisBox& box, const RationalVector& dir,
                             std::uint64_t samples, std::uint64_t seed, double eps,
                             double* std_error_out) {
    int d = box.dim();
    std::vector<double> c(d), u(d);
    double norm = 0;
    for (int i = 0; i < d; ++i) {
        c[i] = to_double(box.half_sides[i]);
        u[i] = to_double(dir[i]);
        norm += u[i] * u[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0) throw std::invalid_argument("box_section_volume_mc: zero direction");
    for (int i = 0; i < d; ++i) u[i] /= norm;
    double box_volume = 1;
    for (int i = 0; i < d; ++i) box_volume *= 2 * c[i];

    RandomStream rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double dot = 0;
        for (int i = 0; i < d; ++i) dot += u[i] * (c[i] * rng.next_symmetric());
        if (std::abs(dot) <= eps) ++hits;
    }
    double p = static_cast<double>(hits) / static_cast<double>(samples);
    double est = p * box_volume / (2 * eps);
    if (std_error_out)
        *std_error_out =
            std::sqrt(p * (1 - p) / static_cast<double>(samples)) * box_volume / (2 * eps);
    return est;
}

SectionValue parallelepiped_section_volume(const Parallelepiped& M, const RationalVector& dir) {
    Rational det = M.basis.det();
    if (sgn(det) == 0)
        throw std::domain_error("parallelepiped_section_volume: singular basis");
    RationalVector pulled = M.basis.mul_transposed(dir);
    Rational q = section_coefficient(M.shape, pulled);
    return SectionValue{abs(det) * q, norm_squared(dir)};
}

double parallelepiped_section_volume_mc(const Parallelepiped& M, const RationalVector& dir,
                                        std::uint64_t samples, std::uint64_t seed, double eps,
                                        double* std_error_out) {
    int d = M.dim();
    std::vector<double> c(d), u(d);
    std::vector<std::vector<double>> a(d, std::vector<double>(d));
    double norm = 0;
    for (int i = 0; i < d; ++i) {
        c[i] = to_double(M.shape.half_sides[i]);
        u[i] = to_double(dir[i]);
        norm += u[i] * u[i];
        for (int j = 0; j < d; ++j) a[i][j] = to_double(M.basis.at(i, j));
    }
    norm = std::sqrt(norm);
    if (norm == 0)
        throw std::invalid_argument("parallelepiped_section_volume_mc: zero direction");
    for (int i = 0; i < d; ++i) u[i] /= norm;
    double volume = std::abs(to_double(M.basis.det()));
    for (int i = 0; i < d; ++i) volume *= 2 * c[i];

    RandomStream rng(seed);
    std::uint64_t hits = 0;
    std::vector<double> z(d);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < d; ++i) z[i] = c[i] * rng.next_symmetric();
        double dot = 0;
        for (int i = 0; i < d; ++i) {
            double pi = 0;
            for (int j = 0; j < d; ++j) pi += a[i][j] * z[j];
            dot += u[i] * pi;
        }
        if (std::abs(dot) <= eps) ++hits;
    }
    double p = static_cast<double>(hits) / static_cast<double>(samples);
    double est = p * volume / (2 * eps);
    if (std_error_out)
        *std_error_out =
            std::sqrt(p * (1 - p) / static_cast<double>(samples)) * volume / (2 * eps);
    return est;
}

// ---------------------------------------------------------------------------
// Section-dual set
// ---------------------------------------------------------------------------

SectionValue wedge_radius(const Parallelepiped& M, const RationalVector& dir) {
    SectionValue v = parallelepiped_section_volume(M, dir);
    v.coeff *= pow_int(Rational(1, 2), M.dim() - 1);
    return v;
}

// Membership coefficient: p in M^ iff 2^{1-d} |det A| Q(box, tr(A) p) >= 1.
// Q is homogeneous of degree -1, so the point's magnitude enters through Q.
static Rational wedge_membership_coefficient(const Parallelepiped& M, const RationalVector& p) {
    Rational det = M.basis.det();
    if (sgn(det) == 0) throw std::domain_error("wedge membership: singular basis");
    RationalVector pulled = M.basis.mul_transposed(p);
    Rational q = section_coefficient(M.shape, pulled);
    return abs(det) * q * pow_int(Rational(1, 2), M.dim() - 1);
}

bool wedge_contains(const Parallelepiped& M, const RationalVector& p) {
    bool zero = true;
    for (const Rational& v : p)
        if (sgn(v) != 0) zero = false;
    if (zero) return true;
    return wedge_membership_coefficient(M, p) >= 1;
}

bool wedge_contains(const Parallelepiped& M, const IntVector& p) {
    RationalVector r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = rat(p[i]);
    return wedge_contains(M, r);
}

bool body_contains(const Parallelepiped& M, const RationalVector& p) {
    RationalVector q = M.basis.inverse() * p;
    for (int i = 0; i < M.dim(); ++i)
        if (abs(q[i]) > M.shape.half_sides[i]) return false;
    return true;
}

bool body_contains(const Parallelepiped& M, const IntVector& p) {
    RationalVector r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = rat(p[i]);
    return body_contains(M, r);
}

RationalVector wedge_boundary_point(const Parallelepiped& M, const RationalVector& dir,
                                    const Rational& t) {
    Rational det = M.basis.det();
    if (sgn(det) == 0) throw std::domain_error("wedge_boundary_point: singular basis");
    RationalVector pulled = M.basis.mul_transposed(dir);
    Rational scale =
        t * abs(det) * section_coefficient(M.shape, pulled) * pow_int(Rational(1, 2), M.dim() - 1);
    RationalVector out(dir.size());
    for (std::size_t i = 0; i < dir.size(); ++i) out[i] = scale * dir[i];
    return out;
}

// ---------------------------------------------------------------------------
// Lemma checks
// ---------------------------------------------------------------------------

static RationalVector random_direction(RandomStream& rng, int d) {
    RationalVector g(d);
    while (true) {
        bool nonzero = false;
        for (int i = 0; i < d; ++i) {
            g[i] = rat(rng.next_int(-9, 9));
            if (sgn(g[i]) != 0) nonzero = true;
        }
        if (nonzero) return g;
    }
}

// Enumerates integer points of [-b_0,b_0] x ... and reports whether a nonzero
// point satisfies `pred`; also counts them.
template <typename Pred>
static long long count_points(const std::vector<long long>& bounds, Pred&& pred) {
    int d = static_cast<int>(bounds.size());
    double total = 1;
    for (long long b : bounds) total *= static_cast<double>(2 * b + 1);
    if (total > 5e7)
        throw std::runtime_error("integer enumeration region too large; shrink the body");
    IntVector p(d, 0);
    for (int i = 0; i < d; ++i) p[i] = -bounds[i];
    long long found = 0;
    while (true) {
        bool zero = true;
        for (long long v : p)
            if (v != 0) zero = false;
        if (!zero && pred(p)) ++found;
        int i = d - 1;
        while (i >= 0 && p[i] == bounds[i]) {
            p[i] = -bounds[i];
            --i;
        }
        if (i < 0) break;
        ++p[i];
    }
    return found;
}

WedgeLemmaReport check_wedge_lemma(const Parallelepiped& M, int trials, std::uint64_t seed) {
    WedgeLemmaReport rep;
    int d = M.dim();
    Rational det = M.basis.det();
    if (sgn(det) == 0) throw std::domain_error("check_wedge_lemma: singular basis");

    auto fail = [&rep](bool& flag, const std::string& what) {
        flag = false;
        if (rep.first_failure.empty()) rep.first_failure = what;
    };

    // (i) integer-point transfer, exhaustive over bounding boxes
    if (d > 6) throw std::invalid_argument("check_wedge_lemma: exhaustive part needs d <= 6");
    {
        // sampled maximum of the directional radius, padded by 1%
        RandomStream rng = RandomStream::derived(seed, 1);
        double rmax = 0;
        std::vector<RationalVector> dirs;
        for (int i = 0; i < d; ++i) {
            RationalVector axis(d, Rational(0));
            axis[i] = 1;
            dirs.push_back(axis);
        }
        dirs.push_back(RationalVector(d, Rational(1)));
        for (int t = 0; t < std::max(trials, 200); ++t) dirs.push_back(random_direction(rng, d));
        for (const auto& g : dirs) rmax = std::max(rmax, wedge_radius(M, g).value());
        long long bound = static_cast<long long>(std::ceil(rmax * 1.01));
        long long wedge_points =
            count_points(std::vector<long long>(d, bound),
                         [&](const IntVector& p) { return wedge_contains(M, p); });
        std::vector<long long> body_bounds(d);
        for (int i = 0; i < d; ++i) {
            Rational extent(0);
            for (int j = 0; j < d; ++j) extent += abs(M.basis.at(i, j)) * M.shape.half_sides[j];
            body_bounds[i] = static_cast<long long>(to_double(extent)) + 1;
        }
        long long body_points = count_points(
            body_bounds, [&](const IntVector& p) { return body_contains(M, p); });
        rep.wedge_integer_points = wedge_points;
        rep.body_integer_points = body_points;
        if (wedge_points > 0 && body_points == 0)
            fail(rep.integer_transfer_ok, "wedge has a nonzero integer point but body has none");
    }

    // (ii) convexity of M^ on sampled chords
    for (int t = 0; t < trials; ++t) {
        RandomStream rng = RandomStream::derived(seed, 1000 + t);
        RationalVector g1 = random_direction(rng, d);
        Rational t1 = rat(rng.next_int(0, 16), 16);
        RationalVector g2 = random_direction(rng, d);
        Rational t2 = rat(rng.next_int(0, 16), 16);
        RationalVector p = wedge_boundary_point(M, g1, t1);
        RationalVector q = wedge_boundary_point(M, g2, t2);
        Rational th = rat(rng.next_int(0, 16), 16);
        RationalVector mid(d);
        for (int i = 0; i < d; ++i) mid[i] = th * p[i] + (1 - th) * q[i];
        if (!wedge_contains(M, mid)) {
            fail(rep.convexity_ok, "chord point left the section-dual set");
            break;
        }
    }

    // (iii) (A M)^ = A'(M^) by membership equivalence on sampled points
    for (int t = 0; t < trials; ++t) {
        RandomStream rng = RandomStream::derived(seed, 2000 + t);
        SquareMatrix A(d);
        do {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    A.at(i, j) = rat(rng.next_int(-8, 8), rng.next_int(1, 3));
        } while (sgn(A.det()) == 0);
        Parallelepiped AM{M.shape, A * M.basis};
        Rational detA = A.det();
        SquareMatrix At = A.transposed();
        // a point near the boundary of (A M)^, sometimes outside (scale > 1)
        RationalVector gz = random_direction(rng, d);
        Rational tz = rat(rng.next_int(0, 20), 16);
        RationalVector z = wedge_boundary_point(AM, gz, tz);
        bool zero = true;
        for (const Rational& v : z)
            if (sgn(v) != 0) zero = false;
        if (zero) continue;
        // A'(M^) membership: (A')^{-1} z = tr(A) z / det(A)
        RationalVector pulled = At * z;
        for (auto& v : pulled) v /= detA;
        if (wedge_contains(AM, z) != wedge_contains(M, pulled)) {
            fail(rep.cofactor_map_ok, "cofactor image of the section-dual set mismatched");
            break;
        }
    }

    // (iv) the cube's section-dual contains delta(d) * cube
    {
        Parallelepiped C = Parallelepiped::cube(d);
        Rational D = delta(d);
        bool ok = true;
        for (std::uint32_t corner = 0; corner < (1u << d) && ok; ++corner) {
            RationalVector p(d);
            for (int i = 0; i < d; ++i) p[i] = (corner & (1u << i)) ? -D : D;
            ok = wedge_contains(C, p);
        }
        for (int t = 0; t < trials && ok; ++t) {
            RandomStream rng = RandomStream::derived(seed, 3000 + t);
            RationalVector p(d);
            for (int i = 0; i < d; ++i) p[i] = D * rat(rng.next_int(-16, 16), 16);
            ok = wedge_contains(C, p);
        }
        if (!ok) fail(rep.cube_inclusion_ok, "delta(d) cube point escaped the cube section-dual");
    }

    return rep;
}

Parallelepiped random_parallelepiped(RandomStream& rng, int d) {
    SquareMatrix basis(d);
    do {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) basis.at(i, j) = rat(rng.next_int(-6, 6), 4);
    } while (abs(basis.det()) < rat(1, 2));
    AxisBox box;
    box.half_sides.resize(d);
    for (int i = 0; i < d; ++i) box.half_sides[i] = rat(rng.next_int(2, 6), 4);
    return Parallelepiped{box, basis};
}

// ---------------------------------------------------------------------------
// Dual tuples / surface bijection
// ---------------------------------------------------------------------------

TupleSpec dual_tuple(const TupleSpec& t) {
    Rational p(1);
    for (const Rational& v : t.lambda) {
        if (sgn(v) <= 0) throw std::invalid_argument("dual_tuple: entries must be positive");
        p *= v;
    }
    for (const Rational& v : t.mu) {
        if (sgn(v) <= 0) throw std::invalid_argument("dual_tuple: entries must be positive");
        p *= v;
    }
    TupleSpec out;
    out.lambda.reserve(t.lambda.size());
    out.mu.reserve(t.mu.size());
    for (const Rational& v : t.lambda) out.lambda.push_back(p / v);
    for (const Rational& v : t.mu) out.mu.push_back(p / v);
    return out;
}

SurfaceBijectionReport check_surface_bijection(const SystemMatrix& theta, const TupleSpec& t_pow,
                                               const QualityBudget& budget) {
    SurfaceBijectionReport rep;
    int m = budget.m, n = budget.n, dm1 = budget.d() - 1;
    if (static_cast<int>(t_pow.lambda.size()) != m || static_cast<int>(t_pow.mu.size()) != n ||
        theta.m() != m || theta.n() != n)
        throw std::invalid_argument("check_surface_bijection: dimension mismatch");

    Rational prod_lambda(1), prod_mu(1), max_lambda(0), min_mu;
    for (const Rational& v : t_pow.lambda) {
        if (sgn(v) <= 0) throw std::invalid_argument("tuple powers must be positive");
        prod_lambda *= v;
        if (v > max_lambda) max_lambda = v;
    }
    for (const Rational& v : t_pow.mu) {
        if (sgn(v) <= 0) throw std::invalid_argument("tuple powers must be positive");
        prod_mu *= v;
        if (min_mu == 0 || v < min_mu) min_mu = v;
    }
    rep.precondition_ok = prod_lambda == budget.vpow_cmp && prod_mu == budget.ypow_cmp &&
                          max_lambda <= budget.suppow_cmp && min_mu >= 1;
    if (!rep.precondition_ok)
        throw std::invalid_argument(
            "check_surface_bijection: tuple violates the transposed-side constraints");

    TupleSpec dual = dual_tuple(t_pow);
    Rational dpow = pow_int(budget.delta_d, dm1);

    Rational prod_lambda_primal(1), min_lambda_primal, max_mu_primal(0), prod_mu_primal(1);
    for (const Rational& v : dual.lambda) {
        Rational scaled = dpow * v;
        prod_lambda_primal *= scaled;
        if (min_lambda_primal == 0 || scaled < min_lambda_primal) min_lambda_primal = scaled;
    }
    for (const Rational& v : dual.mu) {
        Rational scaled = dpow * v;
        prod_mu_primal *= scaled;
        if (scaled > max_mu_primal) max_mu_primal = scaled;
    }

    auto line = [&rep](const std::string& name, const Rational& lhs, const Rational& rhs,
                       bool ok) { rep.checks.push_back({name, lhs, rhs, ok}); };

    Rational xp = pow_int(budget.xpow, dm1);
    Rational up = pow_int(budget.upow, dm1);
    line("prod(D*lambda') == X^m  [powers d-1]", prod_lambda_primal, xp,
         prod_lambda_primal == xp);
    line("prod(D*mu') == U^n  [powers d-1]", prod_mu_primal, up, prod_mu_primal == up);
    line("min(D*lambda') >= 1  [powers d-1]", min_lambda_primal, Rational(1),
         min_lambda_primal >= 1);
    line("max(D*mu') <= D V^m Y^n  [powers d-1]", max_mu_primal, budget.suppow_cmp,
         max_mu_primal <= budget.suppow_cmp);

    // the cofactor product identities behind the correspondence
    Rational lhs1(1);
    for (const Rational& v : dual.lambda) lhs1 *= v;
    Rational rhs1 = pow_int(budget.vpow_cmp, m - 1) * pow_int(budget.ypow_cmp, m);
    line("prod lambda' == V^{m(m-1)} Y^{mn}  [powers d-1]", lhs1, rhs1, lhs1 == rhs1);
    Rational lhs2(1);
    for (const Rational& v : dual.mu) lhs2 *= v;
    Rational rhs2 = pow_int(budget.vpow_cmp, n) * pow_int(budget.ypow_cmp, n - 1);
    line("prod mu' == V^{mn} Y^{n(n-1)}  [powers d-1]", lhs2, rhs2, lhs2 == rhs2);

    rep.all_ok = true;
    for (const auto& c : rep.checks) rep.all_ok = rep.all_ok && c.ok;
    return rep;
}

}  // namespace translab
