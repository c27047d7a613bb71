#include "tcubic/cubic_model.hpp"

#include <stdexcept>

namespace tcubic {

std::vector<Param> all_params(const Field& F) {
    std::vector<Param> out;
    out.reserve(F.q() + 1);
    for (int t = 0; t < F.q(); ++t) out.push_back(Param::at(static_cast<Elt>(t)));
    out.push_back(Param::infinity());
    return out;
}

Pt4 veronese(const Field& F, const Pt2& x) {
    Elt a = x[0], b = x[1];
    Pt4 raw{F.mul(F.mul(a, a), a), F.mul(F.mul(a, a), b), F.mul(a, F.mul(b, b)),
            F.mul(F.mul(b, b), b)};
    return normalize4(F, raw);
}

Pt4 curve_point(const Field& F, Param t) {
    if (t.inf) return Pt4{0, 0, 0, 1};
    return veronese(F, Pt2{1, t.t});
}

Pt4 delta3(const Field& F, const Cubic& f) { return normalize4(F, f); }

Pt4 osculating_plane(const Field& F, Param t) {
    if (t.inf) return Pt4{1, 0, 0, 0};
    Elt t2 = F.mul(t.t, t.t);
    Elt t3 = F.mul(t2, t.t);
    Elt three = F.from_int(3);
    Pt4 raw{F.neg(t3), F.mul(three, t2), F.neg(F.mul(three, t.t)), 1};
    return normalize4(F, raw);
}

Line tangent_line(const Field& F, Param t) {
    if (t.inf) {
        // Z(Y0, Y1)
        return line_from_planes(F, Pt4{1, 0, 0, 0}, Pt4{0, 1, 0, 0});
    }
    Elt t2 = F.mul(t.t, t.t);
    Elt two_t = F.mul(F.from_int(2), t.t);
    Pt4 h1{0, t2, F.neg(two_t), 1};
    Pt4 h2{F.neg(t2), two_t, F.neg(static_cast<Elt>(1)), 0};
    return line_from_planes(F, normalize4(F, h1), normalize4(F, h2));
}

Line real_chord(const Field& F, Param t1, Param t2) {
    if (t1 == t2) throw std::invalid_argument("coinciding parameters give a tangent");
    if (t1.inf || t2.inf)
        return line_through(F, curve_point(F, t1), curve_point(F, t2));
    Elt prod = F.mul(t1.t, t2.t);
    Elt sum = F.add(t1.t, t2.t);
    Pt4 h1{0, prod, F.neg(sum), 1};
    Pt4 h2{F.neg(prod), sum, F.neg(static_cast<Elt>(1)), 0};
    return line_from_planes(F, normalize4(F, h1), normalize4(F, h2));
}

Pt4 sigma_point(const Field& F, const Pt4& p) {
    Elt three = F.from_int(3);
    Pt4 raw{F.neg(p[3]), F.mul(three, p[2]), F.neg(F.mul(three, p[1])), p[0]};
    return normalize4(F, raw);
}

Line sigma_line(const Field& F, const Line& l) {
    Pt4 r0{l.m[0], l.m[1], l.m[2], l.m[3]};
    Pt4 r1{l.m[4], l.m[5], l.m[6], l.m[7]};
    return line_from_planes(F, sigma_point(F, r0), sigma_point(F, r1));
}

Mat2 canon2(const Field& F, std::array<Elt, 4> raw) {
    for (int i = 0; i < 4; ++i)
        if (raw[i] != 0) {
            Elt s = F.inv(raw[i]);
            Mat2 m;
            for (int j = 0; j < 4; ++j) m.a[j] = F.mul(raw[j], s);
            return m;
        }
    throw std::invalid_argument("zero matrix");
}

Mat2 mul2(const Field& F, const Mat2& x, const Mat2& y) {
    std::array<Elt, 4> r;
    r[0] = F.add(F.mul(x.a[0], y.a[0]), F.mul(x.a[1], y.a[2]));
    r[1] = F.add(F.mul(x.a[0], y.a[1]), F.mul(x.a[1], y.a[3]));
    r[2] = F.add(F.mul(x.a[2], y.a[0]), F.mul(x.a[3], y.a[2]));
    r[3] = F.add(F.mul(x.a[2], y.a[1]), F.mul(x.a[3], y.a[3]));
    return canon2(F, r);
}

Mat4 phi(const Field& F, const Mat2& g) {
    Elt a = g.a[0], b = g.a[1], c = g.a[2], d = g.a[3];
    Elt det = F.sub(F.mul(a, d), F.mul(b, c));
    if (det == 0) throw std::invalid_argument("singular matrix");
    auto m3 = [&](Elt x, Elt y, Elt z) { return F.mul(F.mul(x, y), z); };
    Elt two = F.from_int(2), three = F.from_int(3);
    Mat4 m;
    m.a = {
        m3(a, a, a), m3(a, a, b), m3(a, b, b), m3(b, b, b),
        F.mul(three, m3(a, a, c)),
        F.add(m3(a, a, d), F.mul(two, m3(a, b, c))),
        F.add(m3(b, b, c), F.mul(two, m3(a, b, d))),
        F.mul(three, m3(b, b, d)),
        F.mul(three, m3(a, c, c)),
        F.add(m3(b, c, c), F.mul(two, m3(a, c, d))),
        F.add(m3(a, d, d), F.mul(two, m3(b, c, d))),
        F.mul(three, m3(b, d, d)),
        m3(c, c, c), m3(c, c, d), m3(c, d, d), m3(d, d, d),
    };
    return canon4(F, m);
}

Mat4 canon4(const Field& F, Mat4 m) {
    for (int i = 0; i < 16; ++i)
        if (m.a[i] != 0) {
            Elt s = F.inv(m.a[i]);
            for (int j = 0; j < 16; ++j) m.a[j] = F.mul(m.a[j], s);
            return m;
        }
    throw std::invalid_argument("zero matrix");
}

Mat4 mat4_inverse(const Field& F, const Mat4& m) {
    // Gauss-Jordan on [m | I].
    Elt w[4][8] = {};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) w[i][j] = m.a[i * 4 + j];
        w[i][4 + i] = 1;
    }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (w[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("singular matrix");
        for (int j = 0; j < 8; ++j) std::swap(w[col][j], w[piv][j]);
        Elt s = F.inv(w[col][col]);
        for (int j = 0; j < 8; ++j) w[col][j] = F.mul(w[col][j], s);
        for (int r = 0; r < 4; ++r) {
            if (r == col || w[r][col] == 0) continue;
            Elt c = w[r][col];
            for (int j = 0; j < 8; ++j) w[r][j] = F.sub(w[r][j], F.mul(c, w[col][j]));
        }
    }
    Mat4 inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv.a[i * 4 + j] = w[i][4 + j];
    return inv;
}

Pt4 apply_point(const Field& F, const Mat4& m, const Pt4& p) {
    Pt4 out{0, 0, 0, 0};
    for (int j = 0; j < 4; ++j) {
        Elt s = 0;
        for (int i = 0; i < 4; ++i) s = F.add(s, F.mul(p[i], m.a[i * 4 + j]));
        out[j] = s;
    }
    return normalize4(F, out);
}

Line apply_line(const Field& F, const Mat4& m, const Line& l) {
    Pt4 r0{l.m[0], l.m[1], l.m[2], l.m[3]};
    Pt4 r1{l.m[4], l.m[5], l.m[6], l.m[7]};
    return line_from_rows(F, apply_point(F, m, r0), apply_point(F, m, r1));
}

Pt4 apply_plane(const Field& F, const Mat4& m_inv, const Pt4& h) {
    // h' with (y m) . h' = y . h for all y, i.e. h'^T = m^{-1} h^T.
    Pt4 out{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        Elt s = 0;
        for (int j = 0; j < 4; ++j) s = F.add(s, F.mul(m_inv.a[i * 4 + j], h[j]));
        out[i] = s;
    }
    return normalize4(F, out);
}

std::vector<Mat2> group_generators(const Field& F) {
    Elt lambda = F.primitive_element();
    return {
        canon2(F, {1, 1, 0, 1}),      // x -> x + 1
        canon2(F, {1, 0, 0, lambda}), // x -> lambda x
        canon2(F, {0, 1, 1, 0}),      // x -> 1/x
    };
}

long group_order(const Field& F) {
    long q = F.q();
    return q * q * q - q;
}

std::vector<Mat2> all_group_elements(const Field& F) {
    std::vector<Mat2> out;
    out.reserve(group_order(F));
    const int q = F.q();
    // Canonical form: first nonzero entry in row-major order equals 1.
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
            for (int d = 0; d < q; ++d) {
                Elt det = F.sub(static_cast<Elt>(d),
                                F.mul(static_cast<Elt>(b), static_cast<Elt>(c)));
                if (det != 0)
                    out.push_back(Mat2{{1, static_cast<Elt>(b), static_cast<Elt>(c),
                                        static_cast<Elt>(d)}});
            }
    for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d)
            if (c != 0)
                out.push_back(Mat2{{0, 1, static_cast<Elt>(c), static_cast<Elt>(d)}});
    return out;
}

CubicModel::CubicModel(const Field& F) : F_(&F) {
    if (F.p() == 3) throw std::invalid_argument("characteristic 3 is not supported");
    params_ = all_params(F);
    for (Param t : params_) {
        Pt4 p = curve_point(F, t);
        Pt4 h = osculating_plane(F, t);
        Line tan = tangent_line(F, t);
        points_.push_back(p);
        osc_planes_.push_back(h);
        tangents_.push_back(tan);
        curve_set_.insert(pack4(F, p));
        osc_set_.insert(pack4(F, h));
        tangent_set_.insert(pack_line(F, tan));
    }
    for (size_t i = 0; i < params_.size(); ++i)
        for (size_t j = i + 1; j < params_.size(); ++j)
            real_chord_set_.insert(pack_line(F, real_chord(F, params_[i], params_[j])));

    // Imaginary chords: one line per conjugate pair {t, t^q} over GF(q^2).
    // The chord equations only involve the trace and norm of t, so the line
    // is rational.
    ExtField E(F);
    std::unordered_set<std::uint32_t> seen; // keyed by (trace, norm)
    for (const ExtElt& t : E.all_elements()) {
        if (E.in_base(t)) continue;
        Elt s = E.trace(t), e = E.norm(t);
        std::uint32_t key = static_cast<std::uint32_t>(s) * F.q() + e;
        if (!seen.insert(key).second) continue;
        Pt4 h1{0, e, F.neg(s), 1};
        Pt4 h2{F.neg(e), s, F.neg(static_cast<Elt>(1)), 0};
        Line l = line_from_planes(F, normalize4(F, h1), normalize4(F, h2));
        imag_chords_.push_back(l);
        imag_chord_set_.insert(pack_line(F, l));
    }
}

int CubicModel::curve_points_on(const Line& l) const {
    int n = 0;
    for (const Pt4& p : points_on_line(*F_, l))
        if (on_curve(p)) ++n;
    return n;
}

int CubicModel::osc_planes_containing(const Line& l) const {
    int n = 0;
    for (const Pt4& h : osc_planes_)
        if (line_in_plane(*F_, l, h)) ++n;
    return n;
}

int CubicModel::osc_planes_through(const Pt4& p) const {
    int n = 0;
    for (const Pt4& h : osc_planes_)
        if (incident(*F_, p, h)) ++n;
    return n;
}

bool CubicModel::on_some_tangent(const Pt4& p) const {
    for (const Line& t : tangents_)
        if (point_on_line(*F_, p, t)) return true;
    return false;
}

} // namespace tcubic
