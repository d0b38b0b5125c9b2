#include "z2z2/matrep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

// Bounded nonexistence search.  For a fixed support pattern of the three
// generator matrices the closure equations form a small polynomial system;
// the rules below (all solution-preserving) either refute the pattern or
// leave it standing.  Refuting every pattern across every admissible sector
// assignment certifies that no four-nonzero-generator family exists.

namespace z2z2 {

namespace {

// Variables: 0..3 weight diagonal, 4..7 the 10-sector entries, 8..11 the
// 01-sector entries, 12..15 the 11-sector entries.
constexpr int kH0 = 0, kA0 = 4, kB0 = 8, kC0 = 12;

using Mono = std::vector<int>;  // sorted variable list, repetition = power

struct Poly {
    std::map<Mono, Scalar> t;

    static Poly zero() { return {}; }
    static Poly constant(const Scalar& a) {
        Poly p;
        if (!a.is_zero()) p.t[{}] = a;
        return p;
    }
    static Poly var(int v) {
        Poly p;
        p.t[{v}] = Scalar(1);
        return p;
    }
    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.size() == 1 && t.begin()->first.empty(); }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [m, c] : o.t) {
            auto it = r.t.find(m);
            if (it == r.t.end()) {
                r.t[m] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.t.erase(it);
            }
        }
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t) c = -c;
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [m1, c1] : t)
            for (const auto& [m2, c2] : o.t) {
                Mono m = m1;
                m.insert(m.end(), m2.begin(), m2.end());
                std::sort(m.begin(), m.end());
                auto it = r.t.find(m);
                if (it == r.t.end()) {
                    Scalar c = c1 * c2;
                    if (!c.is_zero()) r.t[m] = c;
                } else {
                    it->second += c1 * c2;
                    if (it->second.is_zero()) r.t.erase(it);
                }
            }
        return r;
    }
    Poly scaled(const Scalar& a) const {
        if (a.is_zero()) return {};
        Poly r = *this;
        for (auto& [m, c] : r.t) c = c * a;
        return r;
    }

    // substitute var -> value (a polynomial)
    Poly subst(int v, const Poly& value) const {
        Poly r;
        for (const auto& [m, c] : t) {
            int count = int(std::count(m.begin(), m.end(), v));
            Mono rest;
            for (int x : m)
                if (x != v) rest.push_back(x);
            Poly term;
            term.t[rest] = c;
            for (int k = 0; k < count; ++k) term = term * value;
            r = r + term;
        }
        return r;
    }

    std::set<int> vars() const {
        std::set<int> s;
        for (const auto& [m, c] : t) s.insert(m.begin(), m.end());
        return s;
    }

    std::string str() const {
        if (t.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        const char* names = "h a b c";
        (void)names;
        for (const auto& [m, c] : t) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            for (int v : m) {
                static const char* base[4] = {"h", "a", "b", "c"};
                os << "*" << base[v / 4] << (v % 4);
            }
            first = false;
        }
        return os.str();
    }
};

// 4x4 matrix of polynomials
using PMat = std::array<Poly, 16>;

PMat pm_zero() { return {}; }

PMat pm_mul(const PMat& x, const PMat& y) {
    PMat r = pm_zero();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (x[i * 4 + k].is_zero()) continue;
            for (int j = 0; j < 4; ++j) r[i * 4 + j] = r[i * 4 + j] + x[i * 4 + k] * y[k * 4 + j];
        }
    return r;
}

PMat pm_add(const PMat& x, const PMat& y) {
    PMat r;
    for (int k = 0; k < 16; ++k) r[k] = x[k] + y[k];
    return r;
}

PMat pm_sub(const PMat& x, const PMat& y) {
    PMat r;
    for (int k = 0; k < 16; ++k) r[k] = x[k] - y[k];
    return r;
}

PMat pm_scaled(const PMat& x, const Scalar& a) {
    PMat r;
    for (int k = 0; k < 16; ++k) r[k] = x[k].scaled(a);
    return r;
}

// sector patterns (row, col) for the generator variables
constexpr int kPat10[4][2] = {{0, 2}, {1, 3}, {2, 0}, {3, 1}};
constexpr int kPat01[4][2] = {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
constexpr int kPat11[4][2] = {{0, 1}, {1, 0}, {2, 3}, {3, 2}};

struct System {
    std::vector<Poly> eqs;  // all must vanish
};

// Builds the closure equations for the generic matrices.
System build_equations(const std::variant<AlgebraConstants, SuperalgebraConstants>& constants) {
    PMat H = pm_zero(), A = pm_zero(), B = pm_zero(), C = pm_zero();
    for (int k = 0; k < 4; ++k) {
        H[k * 4 + k] = Poly::var(kH0 + k);
        A[kPat10[k][0] * 4 + kPat10[k][1]] = Poly::var(kA0 + k);
        B[kPat01[k][0] * 4 + kPat01[k][1]] = Poly::var(kB0 + k);
        C[kPat11[k][0] * 4 + kPat11[k][1]] = Poly::var(kC0 + k);
    }
    auto comm = [](const PMat& x, const PMat& y) { return pm_sub(pm_mul(x, y), pm_mul(y, x)); };
    auto anti = [](const PMat& x, const PMat& y) { return pm_add(pm_mul(x, y), pm_mul(y, x)); };
    System sys;
    auto push = [&](const PMat& residual) {
        for (const auto& p : residual)
            if (!p.is_zero()) sys.eqs.push_back(p);
    };
    if (std::holds_alternative<AlgebraConstants>(constants)) {
        const auto& c = std::get<AlgebraConstants>(constants);
        const PMat* G[3] = {&A, &B, &C};
        for (int i = 0; i < 3; ++i) push(pm_sub(comm(H, *G[i]), pm_scaled(*G[i], c.b[i])));
        const int pi[3] = {1, 2, 0}, pj[3] = {2, 0, 1};
        for (int k = 0; k < 3; ++k)
            push(pm_sub(anti(*G[pi[k]], *G[pj[k]]), pm_scaled(*G[k], c.d[k])));
    } else {
        const auto& c = std::get<SuperalgebraConstants>(constants);
        push(pm_sub(comm(H, A), pm_scaled(A, c.a1)));
        push(pm_sub(comm(H, B), pm_scaled(B, c.a2)));
        push(pm_sub(comm(H, C), pm_scaled(C, c.b)));
        push(pm_sub(comm(A, B), pm_scaled(C, c.c)));
        push(pm_sub(anti(A, A), pm_scaled(H, c.alpha1)));
        push(pm_sub(anti(B, B), pm_scaled(H, c.alpha2)));
        push(pm_sub(anti(C, A), pm_scaled(B, c.beta1)));
        push(pm_sub(anti(C, B), pm_scaled(A, c.beta2)));
    }
    return sys;
}

enum class Verdict { Refuted, Open };

struct PatternOutcome {
    Verdict verdict;
    std::string rule;
};

// All rules preserve solutions, so Refuted is sound.
PatternOutcome propagate(std::vector<Poly> eqs, const std::set<int>& nonzero_vars,
                         bool weight_from_squares) {
    // track substitutions applied to the weight variables (for the
    // H-vanishing check when the odd squares pin the diagonal)
    std::array<Poly, 4> hval;
    std::array<bool, 4> hsub{false, false, false, false};
    for (int k = 0; k < 4; ++k) hval[k] = Poly::var(kH0 + k);

    auto is_nonzero_var = [&](int v) { return nonzero_vars.count(v) > 0; };

    for (int round = 0; round < 24; ++round) {
        bool changed = false;
        // drop zero equations; detect immediate contradictions
        std::vector<Poly> next;
        for (auto& p : eqs) {
            if (p.is_zero()) continue;
            if (p.is_constant()) return {Verdict::Refuted, "constant-residual"};
            if (p.t.size() == 1) {
                const Mono& m = p.t.begin()->first;
                if (std::all_of(m.begin(), m.end(), is_nonzero_var))
                    return {Verdict::Refuted, "nonzero-product-vanishes"};
            }
            next.push_back(std::move(p));
        }
        eqs = std::move(next);

        // divide out common provably-nonzero variable factors
        for (auto& p : eqs) {
            for (bool divided = true; divided;) {
                divided = false;
                auto vs = p.vars();
                for (int v : vs) {
                    if (!is_nonzero_var(v)) continue;
                    bool common = std::all_of(p.t.begin(), p.t.end(), [&](const auto& term) {
                        return std::count(term.first.begin(), term.first.end(), v) > 0;
                    });
                    if (!common) continue;
                    Poly q;
                    for (const auto& [m, c] : p.t) {
                        Mono mm = m;
                        mm.erase(std::find(mm.begin(), mm.end(), v));
                        q.t[mm] = c;
                    }
                    p = q;
                    divided = true;
                    changed = true;
                    break;
                }
            }
        }

        // solve for a variable that appears alone in one term and nowhere
        // else in its equation; prefer the shortest equation so that the
        // substituted value is as close to a monomial as possible
        size_t best_eq = eqs.size();
        Mono best_mono;
        size_t best_terms = SIZE_MAX;
        for (size_t i = 0; i < eqs.size(); ++i) {
            for (const auto& [m, c] : eqs[i].t) {
                if (m.size() != 1) continue;
                int v = m[0];
                bool elsewhere = false;
                for (const auto& [m2, c2] : eqs[i].t)
                    if (&m2 != &m && std::count(m2.begin(), m2.end(), v)) elsewhere = true;
                if (elsewhere) continue;
                if (eqs[i].t.size() < best_terms) {
                    best_terms = eqs[i].t.size();
                    best_eq = i;
                    best_mono = m;
                }
            }
        }
        if (best_eq < eqs.size()) {
            int v = best_mono[0];
            Scalar coef = eqs[best_eq].t.at(best_mono);
            Poly rest = eqs[best_eq];
            rest.t.erase(best_mono);
            Poly value = (-rest).scaled(coef.inv());
            eqs.erase(eqs.begin() + best_eq);
            for (auto& p : eqs) p = p.subst(v, value);
            if (v < 4) {
                hval[v] = value;
                hsub[v] = true;
            } else {
                for (int k = 0; k < 4; ++k)
                    if (hsub[k]) hval[k] = hval[k].subst(v, value);
            }
            changed = true;
        }

        if (!changed) break;
    }

    if (weight_from_squares) {
        bool all_zero = true;
        for (int k = 0; k < 4; ++k)
            if (!hsub[k] || !hval[k].is_zero()) all_zero = false;
        if (all_zero) return {Verdict::Refuted, "weight-matrix-vanishes"};
    }

    // linearize: monomials as atoms, Gaussian elimination over Q
    std::map<Mono, int> atom_index;
    for (const auto& p : eqs)
        for (const auto& [m, c] : p.t)
            if (!atom_index.count(m)) atom_index[m] = int(atom_index.size());
    int cols = int(atom_index.size());
    std::vector<std::vector<Scalar>> rows;
    for (const auto& p : eqs) {
        std::vector<Scalar> row(cols, Scalar(0));
        for (const auto& [m, c] : p.t) row[atom_index[m]] = c;
        rows.push_back(std::move(row));
    }
    // put the constant atom last, if present
    int const_col = -1;
    auto cit = atom_index.find(Mono{});
    if (cit != atom_index.end()) const_col = cit->second;
    size_t rank_row = 0;
    for (int col = 0; col < cols && rank_row < rows.size(); ++col) {
        if (col == const_col) continue;
        size_t pivot = rank_row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank_row]);
        Scalar inv = rows[rank_row][col].inv();
        for (auto& x : rows[rank_row]) x = x * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank_row || rows[r][col].is_zero()) continue;
            Scalar factor = rows[r][col];
            for (int cc = 0; cc < cols; ++cc) rows[r][cc] = rows[r][cc] - factor * rows[rank_row][cc];
        }
        ++rank_row;
    }
    if (const_col >= 0) {
        for (const auto& row : rows) {
            bool only_const = !row[const_col].is_zero();
            for (int cc = 0; cc < cols && only_const; ++cc)
                if (cc != const_col && !row[cc].is_zero()) only_const = false;
            if (only_const) return {Verdict::Refuted, "linear-inconsistency"};
        }
    }
    return {Verdict::Open, ""};
}

std::string pattern_string(unsigned a, unsigned b, unsigned c) {
    auto bits = [](unsigned m) {
        std::string s;
        for (int k = 0; k < 4; ++k) s += (m >> k) & 1 ? '1' : '0';
        return s;
    };
    return "10:" + bits(a) + " 01:" + bits(b) + " 11:" + bits(c);
}

}  // namespace

NoRepResult prove_no_rep(const TableLabel& label, uint64_t budget) {
    Field f = Field::Real;
    std::vector<std::variant<AlgebraConstants, SuperalgebraConstants>> assignments;
    bool weight_from_squares = false;

    if (label.kind == AlgebraKind::Algebra && label.family == 5) {
        AlgebraConstants c = table1_entry(label, f);
        static const std::array<std::array<int, 3>, 6> perms = {
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& p : perms) {
            AlgebraWitness w = AlgebraWitness::identity(f);
            w.perm = p;
            assignments.push_back(apply_equivalence(c, w));
        }
    } else if (label.kind == AlgebraKind::Algebra && label.family == 6) {
        if (label.params.size() != 1) throw Error("A6 label needs its parameter");
        if (label.params[0] == Scalar(1, 2, f))
            throw Error("A6 at x = 1/2 has a catalog family; nothing to refute");
        AlgebraConstants c = table1_entry(label, f);
        static const std::array<std::array<int, 3>, 6> perms = {
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& p : perms) {
            AlgebraWitness w = AlgebraWitness::identity(f);
            w.perm = p;
            assignments.push_back(apply_equivalence(c, w));
        }
    } else if (label.kind == AlgebraKind::Superalgebra && label.family == 13) {
        SuperalgebraConstants c = table2_entry(label, f);
        weight_from_squares = true;  // the odd squares pin the whole diagonal
        for (bool sw : {false, true}) {
            SuperalgebraWitness w = SuperalgebraWitness::identity(f);
            w.swap = sw;
            assignments.push_back(apply_equivalence(c, w));
        }
    } else {
        throw Error(label.str() + " is not one of the excluded labels (A5, A6 off 1/2, S13)");
    }

    NoRepResult result;
    result.trace.assignments = assignments.size();
    bool all_refuted = true;

    for (const auto& constants : assignments) {
        System sys = build_equations(constants);
        for (unsigned pa = 1; pa < 16 && result.trace.patterns <= budget; ++pa)
            for (unsigned pb = 1; pb < 16 && result.trace.patterns <= budget; ++pb)
                for (unsigned pc = 1; pc < 16; ++pc) {
                    if (++result.trace.patterns > budget) break;
                    std::set<int> nonzero;
                    std::vector<Poly> eqs = sys.eqs;
                    auto apply_pattern = [&](unsigned mask, int base) {
                        for (int k = 0; k < 4; ++k) {
                            if ((mask >> k) & 1)
                                nonzero.insert(base + k);
                            else
                                for (auto& p : eqs) p = p.subst(base + k, Poly::zero());
                        }
                    };
                    apply_pattern(pa, kA0);
                    apply_pattern(pb, kB0);
                    apply_pattern(pc, kC0);
                    auto outcome = propagate(std::move(eqs), nonzero, weight_from_squares);
                    if (outcome.verdict == Verdict::Refuted) {
                        ++result.trace.contradictions;
                        ++result.trace.by_rule[outcome.rule];
                        if (result.trace.sample.empty())
                            result.trace.sample =
                                pattern_string(pa, pb, pc) + " refuted by " + outcome.rule;
                    } else {
                        all_refuted = false;
                        if (result.trace.surviving_pattern.empty())
                            result.trace.surviving_pattern = pattern_string(pa, pb, pc);
                    }
                }
    }

    if (result.trace.patterns > budget) {
        result.status = NoRepStatus::Inconclusive;
        result.trace.surviving_pattern = "(budget exhausted)";
    } else {
        result.status = all_refuted ? NoRepStatus::Proven : NoRepStatus::Inconclusive;
    }
    return result;
}

}  // namespace z2z2
