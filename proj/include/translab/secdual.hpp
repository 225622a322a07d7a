#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "translab/budget.hpp"
#include "translab/rational.hpp"

namespace translab {

// ---------------------------------------------------------------------------
// Small exact linear algebra (dimensions here are tiny, d <= ~8)
// ---------------------------------------------------------------------------

class SquareMatrix {
  public:
    SquareMatrix() : d_(0) {}
    explicit SquareMatrix(int d) : d_(d), e_(static_cast<std::size_t>(d) * d, Rational(0)) {}

    static SquareMatrix identity(int d);
    static SquareMatrix diagonal(const RationalVector& diag);

    int dim() const { return d_; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * d_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * d_ + j]; }

    Rational det() const;
    SquareMatrix transposed() const;
    SquareMatrix inverse() const;  // throws on singular
    // Cofactor matrix A' with A'_{ij} = (-1)^{i+j} * minor_{ij}; satisfies
    // A' = det(A) * (A^-1)^T for invertible A.
    SquareMatrix cofactor_matrix() const;
    SquareMatrix operator*(const SquareMatrix& rhs) const;
    RationalVector operator*(const RationalVector& v) const;
    RationalVector mul_transposed(const RationalVector& v) const;  // tr(A) * v

  private:
    int d_;
    std::vector<Rational> e_;
};

// ---------------------------------------------------------------------------
// Bodies
// ---------------------------------------------------------------------------

// Axis-aligned box prod [-c_i, c_i], all half-sides positive.
struct AxisBox {
    RationalVector half_sides;
    int dim() const { return static_cast<int>(half_sides.size()); }
};

AxisBox unit_cube(int d);

// M = basis * box (a 0-symmetric parallelepiped).
struct Parallelepiped {
    AxisBox shape;
    SquareMatrix basis;
    int dim() const { return shape.dim(); }

    static Parallelepiped cube(int d);
};

// Exact value of the form coeff * sqrt(norm_sq); the irrational factor is the
// Euclidean length of the (unnormalized) direction vector.
struct SectionValue {
    Rational coeff;
    Rational norm_sq;
    double value() const;
};

// Rational coefficient Q(box, g) of the central hyperplane section: for a
// nonzero rational direction g the (d-1)-volume of {x in box : <g,x> = 0} is
// |g|_2 * Q. Evaluated by the truncated-power (box-spline) formula for the
// density at 0 of sum_i g_i U[-c_i, c_i]; coordinates with g_i = 0 factor out
// as box faces. Homogeneous of degree -1 in g.
Rational section_coefficient(const AxisBox& box, const RationalVector& dir);

// (d-1)-volume of the central section of the box orthogonal to dir.
SectionValue box_section_volume(const AxisBox& box, const RationalVector& dir);

// Monte-Carlo slab estimator of the same quantity (the definitional oracle).
double box_section_volume_mc(const AxisBox& box, const RationalVector& dir,
                             std::uint64_t samples, std::uint64_t seed, double eps,
                             double* std_error_out = nullptr);

// vol_e(A * box) via the exact identity
//   vol_e(A box) = |det A| * |g|_2 * Q(box, tr(A) g)
// for unnormalized rational g (validated against the Monte-Carlo oracle).
SectionValue parallelepiped_section_volume(const Parallelepiped& M, const RationalVector& dir);

double parallelepiped_section_volume_mc(const Parallelepiped& M, const RationalVector& dir,
                                        std::uint64_t samples, std::uint64_t seed, double eps,
                                        double* std_error_out = nullptr);

// ---------------------------------------------------------------------------
// Section-dual set M^ = { s e : e unit, 0 <= s <= 2^{1-d} vol_e(M) }
// ---------------------------------------------------------------------------

// 2^{1-d} vol_e(M) for the direction of dir.
SectionValue wedge_radius(const Parallelepiped& M, const RationalVector& dir);

// Membership of a rational point p != 0 in M^. Reduces to the single exact
// inequality 2^{1-d} |det A| Q(box, tr(A) p) >= 1 (the |p|_2 factors cancel),
// so no irrational arithmetic is ever needed.
bool wedge_contains(const Parallelepiped& M, const RationalVector& p);
bool wedge_contains(const Parallelepiped& M, const IntVector& p);

// Membership of p in M itself: basis^-1 p inside the box, exact.
bool body_contains(const Parallelepiped& M, const RationalVector& p);
bool body_contains(const Parallelepiped& M, const IntVector& p);

// Point on the boundary of M^ in direction dir, scaled by t (rational since
// the radius formula absorbs the norm of dir). t = 1 is the boundary.
RationalVector wedge_boundary_point(const Parallelepiped& M, const RationalVector& dir,
                                    const Rational& t);

// Sampled/exhaustive verification of the four section-dual properties:
//   (i)   integer-point transfer: nonzero integer point in M^ implies one in M
//         (exhaustive enumeration over bounding boxes; d <= 6),
//   (ii)  convexity of M^ on sampled chords,
//   (iii) (A M)^ = A'(M^) for random A, by sampled membership equivalence,
//   (iv)  the cube's section-dual contains delta(d) * cube (sampled points,
//         including the extremal corners).
struct WedgeLemmaReport {
    bool integer_transfer_ok = true;
    bool convexity_ok = true;
    bool cofactor_map_ok = true;
    bool cube_inclusion_ok = true;
    long long wedge_integer_points = 0;  // nonzero integer points found in M^
    long long body_integer_points = 0;   // nonzero integer points found in M
    std::string first_failure;
    bool all_ok() const {
        return integer_transfer_ok && convexity_ok && cofactor_map_ok && cube_inclusion_ok;
    }
};

WedgeLemmaReport check_wedge_lemma(const Parallelepiped& M, int trials, std::uint64_t seed);

class RandomStream;

// Random 0-symmetric parallelepiped of controlled size (basis entries in
// [-3/2, 3/2], |det| >= 1/2, half-sides in [1/2, 3/2]); sized so the lemma
// checks' integer enumerations stay small.
Parallelepiped random_parallelepiped(RandomStream& rng, int d);

// ---------------------------------------------------------------------------
// Dual tuples and the surface bijection of the transference construction
// ---------------------------------------------------------------------------

// (lambda, mu) in R_+^{m+n}.
struct TupleSpec {
    RationalVector lambda;
    RationalVector mu;
    int d() const { return static_cast<int>(lambda.size() + mu.size()); }
};

// lambda'_j = P / lambda_j, mu'_i = P / mu_i with P = prod lambda * prod mu.
TupleSpec dual_tuple(const TupleSpec& t);

struct CheckLine {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool ok;
};

struct SurfaceBijectionReport {
    bool precondition_ok = false;
    std::vector<CheckLine> checks;
    bool all_ok = false;
};

// Exact verification that the dual of a tuple on the transposed-side
// constraint surface lands on the primal-side constraint surface. All
// quantities are handled in (d-1)-th powers: `t_pow` carries the rationals
// lambda_j^{d-1}, mu_i^{d-1}, the only form in which the constraint
//
//   (prod lambda)^{d-1} = vpow_cmp,  (prod mu)^{d-1} = ypow_cmp,
//   (max lambda)^{d-1} <= suppow_cmp,  min mu >= 1
//
// admits exact rational solutions. The report then certifies
//
//   prod(D lambda') = X^m,  prod(D mu') = U^n,
//   min(D lambda') >= 1,    (max D mu')^{d-1} <= suppow_cmp
//
// (again through (d-1)-th powers), with D = delta(d).
SurfaceBijectionReport check_surface_bijection(const SystemMatrix& theta, const TupleSpec& t_pow,
                                               const QualityBudget& budget);

}  // namespace translab
