#pragma once

#include "z2z2/grading.hpp"
#include "z2z2/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace z2z2 {

/// One generator of a free graded-commutative algebra.  The point label
/// distinguishes copies of the same coordinate attached to different
/// superspace points; it does not enter the sign rules.
struct SymbolInfo {
    std::string name;
    GradingVector grading;
    int point = 0;  // 0 none, 1/2/... point tags
};

/**
 * Symbol table plus the sign conventions of a graded-commutative algebra:
 * reordering two symbols multiplies by (-1)^{<deg,deg>} under the configured
 * inner product, and symbols odd under the form square to zero.  An optional
 * exponent cap on one symbol turns the algebra into a truncated series ring
 * in that symbol.
 */
class GradedContext {
  public:
    GradedContext(GradingKind kind, Field field) : kind_(kind), field_(field) {}

    int add_symbol(std::string name, GradingVector grading, int point = 0) {
        syms_.push_back({std::move(name), grading, point});
        return int(syms_.size()) - 1;
    }
    void set_cap(int sym, int max_exp) { cap_ = {sym, max_exp}; }

    GradingKind kind() const { return kind_; }
    Field field() const { return field_; }
    size_t size() const { return syms_.size(); }
    const SymbolInfo& info(int s) const { return syms_.at(s); }
    int sign(int s, int t) const {
        return bracket_sign(kind_, syms_[s].grading, syms_[t].grading);
    }
    bool nilpotent(int s) const {
        return inner_product(kind_, syms_[s].grading, syms_[s].grading) == 1;
    }
    std::optional<std::pair<int, int>> cap() const { return cap_; }

  private:
    GradingKind kind_;
    Field field_;
    std::vector<SymbolInfo> syms_;
    std::optional<std::pair<int, int>> cap_;
};

using Ctx = std::shared_ptr<const GradedContext>;

/// Sorted (symbol, exponent) list; the canonical monomial order.
using GradedMono = std::vector<std::pair<int, int>>;

/// Element of the free graded-commutative algebra over a context.
class GradedPoly {
  public:
    GradedPoly() = default;  // the zero element of a yet-unknown context
    explicit GradedPoly(Ctx ctx) : ctx_(std::move(ctx)) {}
    static GradedPoly scalar(Ctx ctx, const Scalar& a);
    static GradedPoly symbol(Ctx ctx, int s);

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<GradedMono, Scalar>& terms() const { return terms_; }

    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator-() const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly scaled(const Scalar& a) const;
    bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }

    // Graded left derivative with respect to a symbol.
    GradedPoly derivative(int s) const;

    // Total grading when homogeneous; empty for mixed or zero elements.
    std::optional<GradingVector> grading() const;

    // Drop terms whose exponent of `sym` exceeds `max_exp`.
    GradedPoly truncated(int sym, int max_exp) const;
    // Largest exponent of `sym` across terms (0 for none).
    int degree_in(int sym) const;
    // Sum of exponents, maximized over terms.
    int total_degree() const;

    bool uses_symbol(int s) const;
    std::string str() const;

    // Internal: adds coeff * mono (mono must be sorted and reduced).
    void add_term(const GradedMono& m, const Scalar& c);

  private:
    Ctx ctx_;
    std::map<GradedMono, Scalar> terms_;
};

// Multiplies two canonical monomials, returning the sign and the canonical
// product; empty when a square of an odd symbol (or the cap) kills it.
std::optional<std::pair<GradedMono, int>> mono_mul(const GradedContext& ctx, const GradedMono& a,
                                                   const GradedMono& b);

GradingVector mono_grading(const GradedContext& ctx, const GradedMono& m);

// All monomials of total degree <= deg (respecting nilpotency) over the
// given symbols, in deterministic order.
std::vector<GradedMono> monomial_basis(const GradedContext& ctx, const std::vector<int>& symbols,
                                       int deg);

}  // namespace z2z2
