#pragma once

#include "z2z2/grading.hpp"
#include "z2z2/scalar.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace z2z2 {

// ---------------------------------------------------------------------------
// Structure constants of the three minimal graded families.

/// [H,Q] = r Q, {Q,Q} = 2s H.
struct Z2Constants {
    Scalar r, s;
    Field field() const { return r.mode(); }
    bool operator==(const Z2Constants& o) const { return r == o.r && s == o.s; }
};

/// {Qi,Qj} = d_k Q_k for the three unordered pairs, [H,Qi] = b_i Q_i.
struct AlgebraConstants {
    std::array<Scalar, 3> d, b;
    Field field() const { return d[0].mode(); }
    bool operator==(const AlgebraConstants& o) const { return d == o.d && b == o.b; }
    std::string str() const;
};

/// [H,Qi] = a_i Qi, [H,Z] = b Z, [Q1,Q2] = c Z,
/// {Qi,Qi} = alpha_i H, {Z,Q1} = beta1 Q2, {Z,Q2} = beta2 Q1.
struct SuperalgebraConstants {
    Scalar a1, a2, b, c, beta1, beta2, alpha1, alpha2;
    Field field() const { return a1.mode(); }
    bool operator==(const SuperalgebraConstants& o) const {
        return a1 == o.a1 && a2 == o.a2 && b == o.b && c == o.c && beta1 == o.beta1 &&
               beta2 == o.beta2 && alpha1 == o.alpha1 && alpha2 == o.alpha2;
    }
    std::array<Scalar, 8> as_array() const { return {a1, a2, b, c, beta1, beta2, alpha1, alpha2}; }
    std::string str() const;
};

// ---------------------------------------------------------------------------
// Catalog labels.

enum class AlgebraKind { Z2, Algebra, Superalgebra };

/// Canonical catalog label: family index plus the sign/continuous parameters
/// the family carries (eps in {+1,-1}; x, or (y,z)).
struct TableLabel {
    AlgebraKind kind = AlgebraKind::Algebra;
    int family = 0;                 // A1..A8 -> 1..8, S1..S21 -> 1..21, Z2 classes -> 1..3
    std::optional<int> eps;         // +1 / -1
    std::vector<Scalar> params;     // x, or y,z

    std::string str() const;
    static TableLabel parse(const std::string& s, Field f);
    int cmp(const TableLabel& o) const;  // lexicographic: kind, family, eps, params
    bool operator==(const TableLabel& o) const { return cmp(o) == 0; }
    bool operator<(const TableLabel& o) const { return cmp(o) < 0; }
};

// The exact constants of a catalog row; throws if parameters violate the
// admissible ranges (eps = ±1; A6: x >= 0 over R, arg in [0,pi) over C;
// A8: 0 <= |y| <= |z| <= 1; S17/S19: x != 0; S18/S21: 0 < |y| <= 1).
Z2Constants z2_entry(const TableLabel& label, Field f);
AlgebraConstants table1_entry(const TableLabel& label, Field f);
SuperalgebraConstants table2_entry(const TableLabel& label, Field f);

// ---------------------------------------------------------------------------
// Equivalence witnesses.
//
// A witness acts "permute, then rescale".  Generator rescalings may need
// square roots over R, so each is certified by its exact square lambda^2
// together with a branch sign per induced multiplier: the multiplier on a
// d (or c/beta) slot is branch * principal_sqrt(product of squares), which
// keeps every applied quantity an exact scalar.  Branch signs compose with
// an exact +-1 correction, so the action is a genuine group action.
// A multiplier whose square certificate is not a perfect square can never
// be applied to a nonzero constant; its branch is left empty.

struct Z2Witness {
    Scalar lambda_h{1};
    Scalar lambda_q_sq{1};  // square of the odd-generator rescaling
    Z2Witness inverse() const;
    bool acts_trivially(const Z2Constants& c) const;
};

struct AlgebraWitness {
    std::array<int, 3> perm{0, 1, 2};  // new slot k takes old slot perm[k]
    Scalar lambda_h{1};
    std::array<Scalar, 3> lambda_sq{Scalar(1), Scalar(1), Scalar(1)};  // lambda_i^2
    // sign of the d-slot multiplier mu_k = lambda_i lambda_j / lambda_k
    // relative to principal_sqrt(lambda_sq_i lambda_sq_j / lambda_sq_k)
    std::array<std::optional<int>, 3> branch{1, 1, 1};

    static AlgebraWitness identity(Field f);
    static AlgebraWitness from_rescalings(const std::array<int, 3>& perm, const Scalar& lambda_h,
                                          const std::array<Scalar, 3>& lambda);
    // The exact multiplier acting on d slot k (throws when unavailable).
    Scalar mu(int k) const;
    AlgebraWitness inverse() const;
    static AlgebraWitness compose(const AlgebraWitness& second, const AlgebraWitness& first);
    bool acts_trivially(const AlgebraConstants& c) const;
};

struct SuperalgebraWitness {
    bool swap = false;  // exchange the two odd sectors (a,alpha,beta swap; c -> -c)
    Scalar lambda_h{1};
    Scalar sq1{1}, sq2{1}, sqz{1};  // squares of the Q1, Q2, Z rescalings
    // branch signs of the multipliers on the c, beta1, beta2 slots
    std::optional<int> branch_c{1}, branch_b1{1}, branch_b2{1};

    static SuperalgebraWitness identity(Field f);
    static SuperalgebraWitness from_rescalings(bool swap, const Scalar& lambda_h, const Scalar& l1,
                                               const Scalar& l2, const Scalar& lz);
    Scalar mu_c() const;    // lambda_1 lambda_2 / lambda_z
    Scalar mu_b1() const;   // lambda_z lambda_1 / lambda_2
    Scalar mu_b2() const;   // lambda_z lambda_2 / lambda_1
    SuperalgebraWitness inverse() const;
    static SuperalgebraWitness compose(const SuperalgebraWitness& second, const SuperalgebraWitness& first);
    bool acts_trivially(const SuperalgebraConstants& c) const;
};

Z2Constants apply_equivalence(const Z2Constants& c, const Z2Witness& w);
AlgebraConstants apply_equivalence(const AlgebraConstants& c, const AlgebraWitness& w);
SuperalgebraConstants apply_equivalence(const SuperalgebraConstants& c, const SuperalgebraWitness& w);

// ---------------------------------------------------------------------------
// Jacobi residuals.

// r*s
Scalar jacobi_residuals_z2(const Z2Constants& c);
// d1(b1-b2-b3), d2(b2-b3-b1), d3(b3-b1-b2)
std::array<Scalar, 3> jacobi_residuals_algebra(const AlgebraConstants& c);
// the eight constraint rows, in order:
//  c(b-a1-a2), beta1(a2-a1-b), beta2(a1-a2-b), c*beta1-alpha1*a2,
//  c*beta2+alpha2*a1, c*beta1-alpha1*b, c*beta2+alpha2*b, beta1*alpha2-alpha1*beta2
std::array<Scalar, 8> jacobi_residuals_superalgebra(const SuperalgebraConstants& c);

/// Element of the 4-generator algebra as coefficients over (H, Q1, Q2, Q3|Z).
using Elem4 = std::array<Scalar, 4>;

Elem4 elem_zero(Field f);
Elem4 elem_gen(int g, Field f);
Elem4 elem_add(const Elem4& a, const Elem4& b);
Elem4 elem_neg(const Elem4& a);
Elem4 elem_scale(const Scalar& s, const Elem4& a);
bool elem_is_zero(const Elem4& a);

// The graded bracket of two basis generators, read off the structure
// constants (the bracket kind follows from the sector gradings).
Elem4 bracket_eval(const AlgebraConstants& c, int gi, int gj);
Elem4 bracket_eval(const SuperalgebraConstants& c, int gi, int gj);
// Bilinear extension to elements.
template <class Constants>
Elem4 bracket_eval_elem(const Constants& c, const Elem4& x, const Elem4& y) {
    Elem4 acc = elem_zero(x[0].mode());
    for (int i = 0; i < 4; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (y[j].is_zero()) continue;
            acc = elem_add(acc, elem_scale(x[i] * y[j], bracket_eval(c, i, j)));
        }
    }
    return acc;
}

struct JacobiTriple {
    std::array<int, 3> gens;  // indices into (H,Q1,Q2,Q3|Z)
    Elem4 residual;
    bool zero;
};

// Jacobi residuals for every ordered generator triple, computed through the
// generic signed cyclic combination.  For algebras this reproduces the three
// constraint rows exactly.  For superalgebras it is strictly stronger than
// the row formulas: the rows coupling c to beta carry a factor 2 here, and
// the (H,Qi,Qi)-type triples contribute alpha_i*a_i = 0.  Constants may
// satisfy every row formula yet fail this scan (the catalog's S13 row is the
// one such case); such constants admit no associative realization, which is
// what the representation-nonexistence prover certifies independently.
std::vector<JacobiTriple> full_jacobi_scan(const AlgebraConstants& c);
std::vector<JacobiTriple> full_jacobi_scan(const SuperalgebraConstants& c);
bool full_jacobi_admissible(const AlgebraConstants& c);
bool full_jacobi_admissible(const SuperalgebraConstants& c);

// Admissibility in the catalog sense: the row residual formulas vanish.
bool admissible(const AlgebraConstants& c);
bool admissible(const SuperalgebraConstants& c);
bool admissible(const Z2Constants& c);

// ---------------------------------------------------------------------------
// Normalization onto the catalog.

template <class Witness>
struct Normalized {
    TableLabel label;
    Witness witness;  // apply_equivalence(input, witness) == table entry of label
};

Normalized<Z2Witness> classify_z2(const Z2Constants& c);
Normalized<AlgebraWitness> normalize_algebra(const AlgebraConstants& c, Field field);
Normalized<SuperalgebraWitness> normalize_superalgebra(const SuperalgebraConstants& c, Field field);

// ---------------------------------------------------------------------------
// Seeded random admissible constants (constructive, never rejection-sampled);
// numerators and denominators of free parameters stay <= 20.

using Rng = std::mt19937_64;

Scalar random_rational(Rng& rng, Field f, bool nonzero = false);
AlgebraConstants random_admissible_algebra(Rng& rng, Field f);
SuperalgebraConstants random_admissible_superalgebra(Rng& rng, Field f);
Z2Constants random_admissible_z2(Rng& rng, Field f);

// Random witnesses with exact rational scales (used to scramble canonical rows).
AlgebraWitness random_algebra_witness(Rng& rng, Field f);
SuperalgebraWitness random_superalgebra_witness(Rng& rng, Field f);

// Catalog enumeration: every family with a deterministic parameter grid
// (>= 25 points for parameterized families, boundary values included).
std::vector<TableLabel> table1_samples(Field f);
std::vector<TableLabel> table2_samples(Field f);
std::vector<TableLabel> z2_samples();

// In Complex mode two labels differing only by the eps sign are identified.
TableLabel collapse_eps(const TableLabel& label, Field f);

// Expected boundary coincidences: labels distinct as tuples but equivalent
// (A8 with |y| = |z| under the sector swap; S18 with y = -1 under the odd
// swap).  Used by the table verification report.
bool expected_boundary_alias(const TableLabel& a, const TableLabel& b, Field f);

}  // namespace z2z2
