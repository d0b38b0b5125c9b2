#include "z2z2/graded_poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace z2z2 {

GradedPoly GradedPoly::scalar(Ctx ctx, const Scalar& a) {
    GradedPoly p(std::move(ctx));
    if (!a.is_zero()) p.terms_[{}] = a;
    return p;
}

GradedPoly GradedPoly::symbol(Ctx ctx, int s) {
    GradedPoly p(ctx);
    if (s < 0 || size_t(s) >= ctx->size()) throw Error("unknown symbol");
    p.terms_[{{s, 1}}] = Scalar::one(ctx->field());
    return p;
}

void GradedPoly::add_term(const GradedMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    GradedPoly r = *this;
    if (!r.ctx_) r.ctx_ = o.ctx_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + (-o); }

GradedPoly GradedPoly::scaled(const Scalar& a) const {
    GradedPoly r(ctx_);
    if (a.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c * a;
    return r;
}

std::optional<std::pair<GradedMono, int>> mono_mul(const GradedContext& ctx, const GradedMono& a,
                                                   const GradedMono& b) {
    GradedMono v = a;
    v.insert(v.end(), b.begin(), b.end());
    int sign = 1;
    // insertion sort counting graded transpositions of symbol blocks
    for (size_t i = 1; i < v.size(); ++i) {
        size_t j = i;
        while (j > 0 && v[j].first < v[j - 1].first) {
            if ((v[j].second & 1) && (v[j - 1].second & 1) &&
                ctx.sign(v[j].first, v[j - 1].first) < 0)
                sign = -sign;
            std::swap(v[j], v[j - 1]);
            --j;
        }
    }
    GradedMono out;
    for (const auto& [s, e] : v) {
        if (!out.empty() && out.back().first == s)
            out.back().second += e;
        else
            out.push_back({s, e});
    }
    for (const auto& [s, e] : out) {
        if (e >= 2 && ctx.nilpotent(s)) return std::nullopt;
        if (auto cap = ctx.cap(); cap && cap->first == s && e > cap->second) return std::nullopt;
    }
    return std::make_pair(out, sign);
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    GradedPoly r(ctx_ ? ctx_ : o.ctx_);
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            auto prod = mono_mul(*ctx_, m1, m2);
            if (!prod) continue;
            Scalar c = c1 * c2;
            if (prod->second < 0) c = -c;
            r.add_term(prod->first, c);
        }
    return r;
}

GradedPoly GradedPoly::derivative(int s) const {
    GradedPoly r(ctx_);
    const Field f = ctx_->field();
    const GradingVector gs = ctx_->info(s).grading;
    for (const auto& [m, c] : terms_) {
        int presign = 1;
        for (size_t k = 0; k < m.size(); ++k) {
            const auto& [sym, exp] = m[k];
            if (sym == s) {
                GradedMono rest = m;
                if (exp == 1)
                    rest.erase(rest.begin() + k);
                else
                    rest[k].second -= 1;
                Scalar coeff = c * Scalar(exp, f);
                if (presign < 0) coeff = -coeff;
                r.add_term(rest, coeff);
                break;  // the symbol occupies a single sorted slot
            }
            if (bracket_sign(ctx_->kind(), gs, ctx_->info(sym).grading) < 0 && (exp & 1))
                presign = -presign;
        }
    }
    return r;
}

GradingVector mono_grading(const GradedContext& ctx, const GradedMono& m) {
    GradingVector g = ctx.kind() == GradingKind::Z2Super ? GradingVector::z2(0) : g00();
    for (const auto& [sym, exp] : m)
        if (exp & 1) g = degree_sum(g, ctx.info(sym).grading);
    return g;
}

std::optional<GradingVector> GradedPoly::grading() const {
    std::optional<GradingVector> g;
    for (const auto& [m, c] : terms_) {
        GradingVector mg = mono_grading(*ctx_, m);
        if (!g)
            g = mg;
        else if (!(*g == mg))
            return std::nullopt;
    }
    return g;
}

GradedPoly GradedPoly::truncated(int sym, int max_exp) const {
    GradedPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        int e = 0;
        for (const auto& [s, x] : m)
            if (s == sym) e = x;
        if (e <= max_exp) r.terms_[m] = c;
    }
    return r;
}

int GradedPoly::degree_in(int sym) const {
    int deg = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, x] : m)
            if (s == sym) deg = std::max(deg, x);
    return deg;
}

int GradedPoly::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [s, x] : m) d += x;
        deg = std::max(deg, d);
    }
    return deg;
}

bool GradedPoly::uses_symbol(int s) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [sym, x] : m)
            if (sym == s) return true;
    return false;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (const auto& [s, e] : m) {
            os << "*" << ctx_->info(s).name;
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::vector<GradedMono> monomial_basis(const GradedContext& ctx, const std::vector<int>& symbols,
                                       int deg) {
    std::vector<GradedMono> out{{}};
    GradedMono current;
    std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
        if (idx == symbols.size() || remaining == 0) return;
        rec(idx + 1, remaining);
        int sym = symbols[idx];
        int maxe = ctx.nilpotent(sym) ? 1 : remaining;
        if (auto cap = ctx.cap(); cap && cap->first == sym) maxe = std::min(maxe, cap->second);
        for (int e = 1; e <= maxe; ++e) {
            current.push_back({sym, e});
            GradedMono m = current;
            std::sort(m.begin(), m.end());
            out.push_back(m);
            rec(idx + 1, remaining - e);
            current.pop_back();
        }
    };
    rec(0, deg);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace z2z2
