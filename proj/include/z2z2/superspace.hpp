#pragma once

#include "z2z2/graded_poly.hpp"
#include "z2z2/power_series.hpp"
#include "z2z2/structure.hpp"

#include <array>

namespace z2z2 {

/// Lie-(super)algebra-valued superfield: one graded-commutative coefficient
/// per generator (H, Q1, Q2, Q3|Z); each coefficient must be homogeneous of
/// its generator's sector grading.
struct Superfield {
    std::array<GradedPoly, 4> coeff;

    static Superfield zero(const Ctx& ctx);
    Superfield operator+(const Superfield& o) const;
    Superfield operator-(const Superfield& o) const;
    bool operator==(const Superfield& o) const;
    bool is_zero() const;
    void check_homogeneous() const;
};

// Commutator of two superfields, computed from the structure constants and
// the coordinate sign rules.  Both fields must live in the same context;
// for the two-point formulas the fields must not share any symbol.
Superfield superfield_commutator(const AlgebraConstants& c, const Superfield& a,
                                 const Superfield& b, bool require_disjoint = true);
Superfield superfield_commutator(const SuperalgebraConstants& c, const Superfield& a,
                                 const Superfield& b, bool require_disjoint = true);

// n-fold iterated commutator [Phi, [Phi, ... [Phi, Lam]]].
template <class Constants>
Superfield lambda_tower(const Constants& c, const Superfield& phi, const Superfield& lam, int n) {
    if (n < 0) throw Error("tower index must be nonnegative");
    Superfield out = superfield_commutator(c, phi, lam, false);
    for (int k = 0; k < n; ++k) out = superfield_commutator(c, phi, out, false);
    return out;
}

// ---------------------------------------------------------------------------
// The composition coefficients c_n and their generating function.

// Taylor coefficients of 1/(e^x - 1) - 1/x, by exact series division.
PowerSeries bch_series(int order);
std::vector<Scalar> bch_coefficients(int n);

// Series expansion of C/(1 - e^{-Cx}) - 1/x at the origin.
PowerSeries shifted_solution_series(const Scalar& C, int order);

// x f' + 2 f + x f^2 - C (1 + x f), to the order of f.
PowerSeries riccati_residual(const Scalar& C, const PowerSeries& f);

// ---------------------------------------------------------------------------
// Two-point commutator formulas.

struct TwoPointModel {
    Ctx ctx;
    std::array<int, 4> a_coord, b_coord;  // coordinates of the two points
    Superfield phi_a, phi_b;
};

TwoPointModel two_point_model(GradingKind kind, Field f);

// The closed formulas as printed, for comparison against the computed
// commutator.  They agree except for one term of the algebra-case weight
// coupling, which the comparison surfaces.
Superfield printed_two_point(const AlgebraConstants& c, const TwoPointModel& m);
Superfield printed_two_point(const SuperalgebraConstants& c, const TwoPointModel& m);

// ---------------------------------------------------------------------------
// Covariant derivatives.

/// First-order operator sum(coeff * d/d(coordinate)) with a definite grading;
/// applied with the graded left Leibniz rule.
struct CovariantDerivative {
    GradingVector grading;
    std::vector<std::pair<GradedPoly, int>> terms;  // (coefficient, coordinate)
    GradedPoly apply(const GradedPoly& p) const;
};

enum class SuperspaceCase { S10, A4, A8 };

struct SuperspaceModel {
    Ctx ctx;
    std::array<int, 4> coord;               // x and the three graded coordinates
    std::array<CovariantDerivative, 4> d;   // indexed like coord
    int order = 0;                          // series truncation (A8)
};

// The covariant derivative quadruple of the given case; eps enters the S10
// case only, order the A8 case only.
SuperspaceModel superspace_model(SuperspaceCase cs, const Scalar& eps = Scalar(1),
                                 int order = PowerSeries::kDefaultOrder);

// Graded bracket of two derivatives applied to an element (the kind follows
// from the operator gradings under the context's inner product).
GradedPoly bracket_apply(const CovariantDerivative& a, const CovariantDerivative& b,
                         const GradedPoly& p);

// ---------------------------------------------------------------------------
// Infinitesimal coordinate shifts induced by the left group action.

struct TransformationModel {
    Ctx ctx;
    std::array<int, 4> coord;   // point coordinates
    std::array<int, 4> param;   // infinitesimal parameters, one per sector
    Superfield phi, lam;
    std::variant<AlgebraConstants, SuperalgebraConstants> constants;
    int order = 0;
};

TransformationModel transformation_model(SuperspaceCase cs, const Scalar& eps = Scalar(1),
                                         int order = PowerSeries::kDefaultOrder);

// delta(coordinate k) = (Lam + sum c_n Lam^(n))'s coefficient of generator k.
std::array<GradedPoly, 4> infinitesimal_transformations(const TransformationModel& m);

}  // namespace z2z2
