#include "z2z2/grading.hpp"

namespace z2z2 {

static void check_arity(GradingKind kind, const GradingVector& a, const GradingVector& b) {
    int want = kind == GradingKind::Z2Super ? 1 : 2;
    if (a.arity() != want || b.arity() != want)
        throw Error("grading arity mismatch for kind (want " + std::to_string(want) + ")");
}

int inner_product(GradingKind kind, const GradingVector& a, const GradingVector& b) {
    check_arity(kind, a, b);
    switch (kind) {
        case GradingKind::Z2Super:
            return (a.bit(0) * b.bit(0)) & 1;
        case GradingKind::Z2Z2Algebra:
            // a1*b2 - a2*b1, mod 2
            return (a.bit(0) * b.bit(1) + a.bit(1) * b.bit(0)) & 1;
        case GradingKind::Z2Z2Superalgebra:
            return (a.bit(0) * b.bit(0) + a.bit(1) * b.bit(1)) & 1;
    }
    throw Error("unreachable");
}

int bracket_sign(GradingKind kind, const GradingVector& a, const GradingVector& b) {
    return inner_product(kind, a, b) ? -1 : 1;
}

BracketKind bracket_kind(GradingKind kind, const GradingVector& a, const GradingVector& b) {
    return inner_product(kind, a, b) ? BracketKind::Anticommutator : BracketKind::Commutator;
}

GradingVector degree_sum(const GradingVector& a, const GradingVector& b) {
    if (a.arity() != b.arity()) throw Error("grading arity mismatch in degree_sum");
    if (a.arity() == 1) return GradingVector::z2(a.bit(0) ^ b.bit(0));
    return GradingVector::z22(a.bit(0) ^ b.bit(0), a.bit(1) ^ b.bit(1));
}

}  // namespace z2z2
