#pragma once

#include "z2z2/structure.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace z2z2 {

/// Entry domain for graded matrices: a polynomial in one central symbol
/// (written "dt"), degree at most 2.  Plain scalars are degree-0 polynomials.
class DPoly {
  public:
    static constexpr int kMaxDegree = 2;

    DPoly() : c_{Scalar(0), Scalar(0), Scalar(0)} {}
    DPoly(const Scalar& a) : c_{a, Scalar::zero(a.mode()), Scalar::zero(a.mode())} {}
    static DPoly zero(Field f) { return DPoly(Scalar::zero(f)); }
    static DPoly sym(Field f) {  // the central symbol itself
        DPoly p(Scalar::zero(f));
        p.c_[1] = Scalar::one(f);
        return p;
    }

    Field mode() const { return c_[0].mode(); }
    const Scalar& coeff(int k) const { return c_[k]; }
    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
    bool is_scalar() const { return c_[1].is_zero() && c_[2].is_zero(); }
    Scalar scalar() const;

    DPoly operator+(const DPoly& o) const;
    DPoly operator-(const DPoly& o) const;
    DPoly operator-() const;
    DPoly operator*(const DPoly& o) const;  // error past degree 2
    bool operator==(const DPoly& o) const { return c_ == o.c_; }
    std::string str() const;

  private:
    std::array<Scalar, 3> c_;
};

/**
 * Square matrix (4x4, or 2x2 for the one-bit grading) whose support is
 * confined to one graded sector: the diagonal for the trivial degree and
 * fixed anti-diagonal block patterns for the others.
 */
class GradedMatrix {
  public:
    explicit GradedMatrix(int n, Field f);
    static GradedMatrix zero(int n, Field f) { return GradedMatrix(n, f); }
    static GradedMatrix identity(int n, Field f);
    static GradedMatrix from_entries(const std::vector<std::vector<Scalar>>& rows);

    int dim() const { return n_; }
    Field mode() const { return f_; }
    const DPoly& at(int r, int c) const { return e_[r * n_ + c]; }
    void set(int r, int c, const DPoly& v) { e_[r * n_ + c] = v; }
    void set(int r, int c, const Scalar& v) { e_[r * n_ + c] = DPoly(v); }

    bool is_zero() const;
    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator-(const GradedMatrix& o) const;
    GradedMatrix operator*(const GradedMatrix& o) const;
    GradedMatrix scaled(const Scalar& a) const;
    bool operator==(const GradedMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    std::string str() const;

  private:
    int n_;
    Field f_;
    std::vector<DPoly> e_;
};

// The unique sector whose support pattern contains the support of M
// (the zero matrix reports the trivial sector); error on mixed support.
GradingVector sector_of_matrix(const GradedMatrix& m);

// Grading of a vector supported on a single coordinate, read from the
// eigenvalues of the negative-parity projectors.
GradingVector grade_vector(const std::array<Scalar, 4>& v);

/// Parity operators and projectors for the 4x4 graded space.
struct ParityOps {
    GradedMatrix n1, n2, n3;
    GradedMatrix p1_plus, p1_minus, p2_plus, p2_minus;
    static ParityOps make(Field f);
};

// Graded bracket AB -+ BA, the kind read from the operand sectors.
GradedMatrix bracket_matrices(GradingKind kind, const GradedMatrix& a, const GradedMatrix& b);

// ---------------------------------------------------------------------------

struct Representation {
    GradingKind kind = GradingKind::Z2Z2Algebra;
    // q3 is the 11-sector generator (Z for superalgebras)
    GradedMatrix h{4, Field::Real}, q1{4, Field::Real}, q2{4, Field::Real}, q3{4, Field::Real};
    std::variant<AlgebraConstants, SuperalgebraConstants> constants;
};

struct RelationResidual {
    std::string relation;
    GradedMatrix residual;
    bool zero;
};

struct RepReport {
    std::vector<RelationResidual> relations;
    bool all_zero = false;
    bool all_nonzero = false;  // every generator matrix is nonzero
    bool ok() const { return all_zero && all_nonzero; }
};

// Evaluates every defining bracket on the matrices.  The three odd sector
// matrices may sit in any assignment of the nonzero sectors (for algebras;
// superalgebras allow the two one-odd-bit sectors to be exchanged).
RepReport verify_rep(const Representation& rep);

// ---------------------------------------------------------------------------
// The catalog of minimal 4x4 families, one builder per printed family and
// restricted variant.

struct RepParams {
    std::map<std::string, Scalar> values;  // lambda, mu, p, q
    Scalar get(const std::string& name, Field f) const;
    Scalar get_nonzero(const std::string& name, Field f) const;
};

struct CatalogEntry {
    TableLabel label;
    std::string variant;               // "" for the primary family
    std::vector<std::string> params;   // accepted parameter names
    std::vector<std::string> nonzero;  // parameters that must not vanish
};

std::vector<CatalogEntry> catalog_entries();

// Materializes the family for the given label/variant; throws for the three
// labels that have no such family (A5, A6 off x = 1/2, S13).
Representation catalog_rep(const TableLabel& label, const RepParams& params,
                           const std::string& variant = "");

// e0..e3 (split = false) or the split set (split = true), exactly.
std::array<GradedMatrix, 4> quaternion_units(bool split, Field f = Field::Real);

// ---------------------------------------------------------------------------
// Bounded nonexistence prover for the excluded labels.

enum class NoRepStatus { Proven, Inconclusive };

struct NoRepTrace {
    uint64_t assignments = 0;
    uint64_t patterns = 0;
    uint64_t contradictions = 0;
    std::map<std::string, uint64_t> by_rule;
    std::string surviving_pattern;  // first non-refuted support pattern, if any
    std::string sample;             // one refuted pattern with its derivation
};

struct NoRepResult {
    NoRepStatus status;
    NoRepTrace trace;
};

// label must be one of A5, A6 (x != 1/2), S13.  Enumerates sector
// assignments and support patterns, propagating the closure equations;
// Proven only when every pattern with four nonzero generators is refuted.
NoRepResult prove_no_rep(const TableLabel& label, uint64_t budget = uint64_t(1) << 16);

}  // namespace z2z2
