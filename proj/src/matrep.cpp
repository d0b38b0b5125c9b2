#include "z2z2/matrep.hpp"

#include <algorithm>
#include <sstream>

namespace z2z2 {

Scalar DPoly::scalar() const {
    if (!is_scalar()) throw Error("matrix entry is not a plain scalar: " + str());
    return c_[0];
}

DPoly DPoly::operator+(const DPoly& o) const {
    DPoly r = *this;
    for (int k = 0; k <= kMaxDegree; ++k) r.c_[k] += o.c_[k];
    return r;
}

DPoly DPoly::operator-(const DPoly& o) const { return *this + (-o); }

DPoly DPoly::operator-() const {
    DPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

DPoly DPoly::operator*(const DPoly& o) const {
    DPoly r = DPoly::zero(mode());
    for (int i = 0; i <= kMaxDegree; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j <= kMaxDegree; ++j) {
            if (o.c_[j].is_zero()) continue;
            if (i + j > kMaxDegree) throw Error("matrix entry degree exceeds 2 in dt");
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

std::string DPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= kMaxDegree; ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << "+";
        os << "(" << c_[k].str() << ")";
        if (k == 1) os << "*dt";
        if (k == 2) os << "*dt^2";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

GradedMatrix::GradedMatrix(int n, Field f) : n_(n), f_(f), e_(n * n, DPoly::zero(f)) {
    if (n != 2 && n != 4) throw Error("graded matrices are 2x2 or 4x4");
}

GradedMatrix GradedMatrix::identity(int n, Field f) {
    GradedMatrix m(n, f);
    for (int k = 0; k < n; ++k) m.set(k, k, Scalar::one(f));
    return m;
}

GradedMatrix GradedMatrix::from_entries(const std::vector<std::vector<Scalar>>& rows) {
    int n = int(rows.size());
    if (n == 0) throw Error("empty matrix");
    GradedMatrix m(n, rows[0][0].mode());
    for (int r = 0; r < n; ++r) {
        if (int(rows[r].size()) != n) throw Error("ragged matrix");
        for (int c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

bool GradedMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const DPoly& p) { return p.is_zero(); });
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (n_ != o.n_) throw Error("matrix size mismatch");
    GradedMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& o) const {
    if (n_ != o.n_) throw Error("matrix size mismatch");
    GradedMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
    if (n_ != o.n_) throw Error("matrix size mismatch");
    GradedMatrix r(n_, f_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.e_[i * n_ + j] = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return r;
}

GradedMatrix GradedMatrix::scaled(const Scalar& a) const {
    GradedMatrix r = *this;
    for (auto& p : r.e_) p = p * DPoly(a);
    return r;
}

std::string GradedMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < n_; ++r) {
        os << (r == 0 ? "[" : " ") << "[";
        for (int c = 0; c < n_; ++c) os << (c ? ", " : "") << at(r, c).str();
        os << "]" << (r + 1 == n_ ? "]" : "\n");
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Sector patterns.  Coordinates carry gradings (00, 11, 10, 01); an entry at
// (r, c) belongs to the sector grading(r) + grading(c).

static const std::array<GradingVector, 4> kCoord4 = {g00(), g11(), g10(), g01()};

static GradingVector coord_grading(int n, int k) {
    if (n == 4) return kCoord4[k];
    return GradingVector::z2(k);  // 2x2: coordinates 0 (even), 1 (odd)
}

GradingVector sector_of_matrix(const GradedMatrix& m) {
    int n = m.dim();
    std::optional<GradingVector> sector;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (m.at(r, c).is_zero()) continue;
            GradingVector s = degree_sum(coord_grading(n, r), coord_grading(n, c));
            if (!sector)
                sector = s;
            else if (*sector != s)
                throw Error("matrix support spans more than one sector");
        }
    if (!sector) return n == 4 ? g00() : GradingVector::z2(0);
    return *sector;
}

GradingVector grade_vector(const std::array<Scalar, 4>& v) {
    Field f = v[0].mode();
    auto par = ParityOps::make(f);
    std::optional<int> support;
    for (int k = 0; k < 4; ++k) {
        if (v[k].is_zero()) continue;
        if (support) throw Error("vector is supported on more than one coordinate");
        support = k;
    }
    if (!support) throw Error("zero vector has no grading");
    // eigenvalues of the negative projectors on the supported coordinate
    int p1 = par.p1_minus.at(*support, *support).scalar().is_zero() ? 0 : 1;
    int p2 = par.p2_minus.at(*support, *support).scalar().is_zero() ? 0 : 1;
    return GradingVector::z22(p1, p2);
}

ParityOps ParityOps::make(Field f) {
    auto diag = [&](int a, int b, int c, int d) {
        GradedMatrix m(4, f);
        m.set(0, 0, Scalar(a, f));
        m.set(1, 1, Scalar(b, f));
        m.set(2, 2, Scalar(c, f));
        m.set(3, 3, Scalar(d, f));
        return m;
    };
    return {diag(1, -1, -1, 1), diag(1, -1, 1, -1), diag(1, 1, -1, -1),
            diag(1, 0, 0, 1),   diag(0, 1, 1, 0),   diag(1, 0, 1, 0),
            diag(0, 1, 0, 1)};
}

GradedMatrix bracket_matrices(GradingKind kind, const GradedMatrix& a, const GradedMatrix& b) {
    GradingVector sa = sector_of_matrix(a), sb = sector_of_matrix(b);
    GradedMatrix ab = a * b, ba = b * a;
    return bracket_kind(kind, sa, sb) == BracketKind::Anticommutator ? ab + ba : ab - ba;
}

// ---------------------------------------------------------------------------

namespace {

void push(RepReport& rep, std::string name, GradedMatrix residual) {
    bool z = residual.is_zero();
    rep.relations.push_back({std::move(name), std::move(residual), z});
}

}  // namespace

RepReport verify_rep(const Representation& rep) {
    RepReport out;
    const GradedMatrix &H = rep.h, &A = rep.q1, &B = rep.q2, &C = rep.q3;

    GradingVector sh = sector_of_matrix(H);
    if (!(sh == g00()) && !H.is_zero()) throw Error("weight operator must sit in the 00 sector");

    std::array<const GradedMatrix*, 3> gens = {&A, &B, &C};
    std::array<GradingVector, 3> sec;
    for (int k = 0; k < 3; ++k) sec[k] = sector_of_matrix(*gens[k]);
    bool distinct = !(sec[0] == sec[1]) && !(sec[1] == sec[2]) && !(sec[0] == sec[2]) &&
                    !(sec[0] == g00()) && !(sec[1] == g00()) && !(sec[2] == g00());

    out.all_nonzero = !H.is_zero() && !A.is_zero() && !B.is_zero() && !C.is_zero() && distinct;

    auto br = [&](const GradedMatrix& x, const GradedMatrix& y) {
        return bracket_matrices(rep.kind, x, y);
    };

    if (std::holds_alternative<AlgebraConstants>(rep.constants)) {
        const auto& c = std::get<AlgebraConstants>(rep.constants);
        for (int i = 0; i < 3; ++i)
            push(out, "[H,Q" + std::to_string(i + 1) + "]",
                 br(H, *gens[i]) - gens[i]->scaled(c.b[i]));
        const char* names[3] = {"{Q2,Q3}", "{Q3,Q1}", "{Q1,Q2}"};
        const int pi[3] = {1, 2, 0}, pj[3] = {2, 0, 1};
        for (int k = 0; k < 3; ++k)
            push(out, names[k], br(*gens[pi[k]], *gens[pj[k]]) - gens[k]->scaled(c.d[k]));
    } else {
        const auto& c = std::get<SuperalgebraConstants>(rep.constants);
        if (out.all_nonzero && !(sec[2] == g11()))
            throw Error("superalgebra 11-sector generator must sit in the 11 sector");
        push(out, "[H,Q1]", br(H, A) - A.scaled(c.a1));
        push(out, "[H,Q2]", br(H, B) - B.scaled(c.a2));
        push(out, "[H,Z]", br(H, C) - C.scaled(c.b));
        push(out, "[Q1,Q2]", br(A, B) - C.scaled(c.c));
        push(out, "{Q1,Q1}", br(A, A) - H.scaled(c.alpha1));
        push(out, "{Q2,Q2}", br(B, B) - H.scaled(c.alpha2));
        push(out, "{Z,Q1}", br(C, A) - B.scaled(c.beta1));
        push(out, "{Z,Q2}", br(C, B) - A.scaled(c.beta2));
    }
    out.all_zero = std::all_of(out.relations.begin(), out.relations.end(),
                               [](const RelationResidual& r) { return r.zero; });
    return out;
}

// ---------------------------------------------------------------------------

std::array<GradedMatrix, 4> quaternion_units(bool split, Field f) {
    auto M = [&](std::array<int, 16> v) {
        GradedMatrix m(4, f);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m.set(r, c, Scalar(v[r * 4 + c], f));
        return m;
    };
    GradedMatrix e0 = GradedMatrix::identity(4, f);
    GradedMatrix e1 = M({0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0});
    if (!split) {
        GradedMatrix e2 = M({0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
        GradedMatrix e3 = M({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0});
        return {e0, e1, e2, e3};
    }
    GradedMatrix e2 = M({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
    GradedMatrix e3 = M({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0});
    return {e0, e1, e2, e3};
}

Scalar RepParams::get(const std::string& name, Field f) const {
    auto it = values.find(name);
    if (it == values.end()) throw Error("missing representation parameter: " + name);
    return it->second.to_field(f);
}

Scalar RepParams::get_nonzero(const std::string& name, Field f) const {
    Scalar v = get(name, f);
    if (v.is_zero()) throw Error("representation parameter must be nonzero: " + name);
    return v;
}

}  // namespace z2z2
