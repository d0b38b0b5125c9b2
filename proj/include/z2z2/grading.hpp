#pragma once

#include "z2z2/scalar.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace z2z2 {

/// Which bilinear form on degree vectors selects the bracket:
/// Z2Super uses 1-bit degrees, the two Z2xZ2 kinds use 2-bit degrees with
/// the antisymmetric (algebra) or symmetric (superalgebra) form.
enum class GradingKind { Z2Super, Z2Z2Algebra, Z2Z2Superalgebra };

enum class BracketKind { Commutator, Anticommutator };

/// Degree vector: one or two Z2 components.
class GradingVector {
  public:
    GradingVector() : bits_(0), arity_(1) {}
    static GradingVector z2(int a) { return GradingVector(uint8_t(a & 1), 1); }
    static GradingVector z22(int a1, int a2) { return GradingVector(uint8_t((a1 & 1) | ((a2 & 1) << 1)), 2); }

    int arity() const { return arity_; }
    int bit(int k) const { return (bits_ >> k) & 1; }
    bool is_zero() const { return bits_ == 0; }
    bool operator==(const GradingVector& o) const { return bits_ == o.bits_ && arity_ == o.arity_; }
    bool operator!=(const GradingVector& o) const { return !(*this == o); }
    bool operator<(const GradingVector& o) const {
        return arity_ != o.arity_ ? arity_ < o.arity_ : bits_ < o.bits_;
    }

    std::string str() const {
        std::string s;
        for (int k = 0; k < arity_; ++k) s += char('0' + bit(k));
        return s;
    }

  private:
    GradingVector(uint8_t bits, uint8_t arity) : bits_(bits), arity_(arity) {}
    uint8_t bits_, arity_;
};

// g00, g10, g01, g11 in the order used for generator/coordinate sectors.
inline GradingVector g00() { return GradingVector::z22(0, 0); }
inline GradingVector g10() { return GradingVector::z22(1, 0); }
inline GradingVector g01() { return GradingVector::z22(0, 1); }
inline GradingVector g11() { return GradingVector::z22(1, 1); }
inline std::array<GradingVector, 4> sector_gradings() { return {g00(), g10(), g01(), g11()}; }

// The degree pairing, mod 2.
int inner_product(GradingKind kind, const GradingVector& a, const GradingVector& b);

// (-1)^{a.b}: -1 selects an anticommutator, +1 a commutator.
int bracket_sign(GradingKind kind, const GradingVector& a, const GradingVector& b);

BracketKind bracket_kind(GradingKind kind, const GradingVector& a, const GradingVector& b);

GradingVector degree_sum(const GradingVector& a, const GradingVector& b);

/// Signed cyclic Jacobi combination.  `br` maps an ordered pair of elements
/// to their graded bracket; the result must vanish for an admissible algebra.
///   s(ga,gc) br(A,br(B,C)) + s(gb,ga) br(B,br(C,A)) + s(gc,gb) br(C,br(A,B))
/// with s(u,v) = (-1)^{u.v}.
template <class Elem, class Bracket>
Elem jacobi_combination(GradingKind kind, const std::array<GradingVector, 3>& deg,
                        const std::array<Elem, 3>& abc, Bracket br) {
    auto signed_term = [&](int sgn, Elem t) { return sgn < 0 ? -t : t; };
    Elem t1 = signed_term(bracket_sign(kind, deg[2], deg[0]), br(abc[0], br(abc[1], abc[2])));
    Elem t2 = signed_term(bracket_sign(kind, deg[0], deg[1]), br(abc[1], br(abc[2], abc[0])));
    Elem t3 = signed_term(bracket_sign(kind, deg[1], deg[2]), br(abc[2], br(abc[0], abc[1])));
    return t1 + t2 + t3;
}

}  // namespace z2z2
