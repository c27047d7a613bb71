#include "tcubic/pg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcubic {

Pt4 normalize4(const Field& F, Pt4 raw) {
    for (int i = 0; i < 4; ++i) {
        if (raw[i] != 0) {
            Elt s = F.inv(raw[i]);
            Pt4 out;
            for (int j = 0; j < 4; ++j) out[j] = F.mul(raw[j], s);
            return out;
        }
    }
    throw std::invalid_argument("zero vector has no projective class");
}

Pt2 normalize2(const Field& F, Pt2 raw) {
    for (int i = 0; i < 2; ++i) {
        if (raw[i] != 0) {
            Elt s = F.inv(raw[i]);
            return {F.mul(raw[0], s), F.mul(raw[1], s)};
        }
    }
    throw std::invalid_argument("zero vector has no projective class");
}

std::uint32_t pack4(const Field& F, const Pt4& p) {
    std::uint32_t key = 0;
    for (int i = 0; i < 4; ++i) key = key * F.q() + p[i];
    return key;
}

std::uint64_t pack_line(const Field& F, const Line& l) {
    std::uint64_t key = 0;
    for (int i = 0; i < 8; ++i) key = key * F.q() + l.m[i];
    return key;
}

Line line_from_rows(const Field& F, Pt4 r0, Pt4 r1) {
    std::array<Pt4, 2> rows = {r0, r1};
    int rank = 0;
    for (int col = 0; col < 4 && rank < 2; ++col) {
        int piv = -1;
        for (int r = rank; r < 2; ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        Elt s = F.inv(rows[rank][col]);
        for (int j = 0; j < 4; ++j) rows[rank][j] = F.mul(rows[rank][j], s);
        for (int r = 0; r < 2; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Elt c = rows[r][col];
            for (int j = 0; j < 4; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    if (rank != 2) throw std::invalid_argument("spanning pair is not independent");
    Line l;
    for (int j = 0; j < 4; ++j) {
        l.m[j] = rows[0][j];
        l.m[4 + j] = rows[1][j];
    }
    return l;
}

Line line_through(const Field& F, const Pt4& p, const Pt4& r) {
    if (p == r) throw std::invalid_argument("line_through requires distinct points");
    return line_from_rows(F, p, r);
}

std::array<Pt4, 2> null_space(const Field& F, const Line& l) {
    // Rows are in RREF; read the pivot columns off directly.
    std::array<Pt4, 2> rows;
    for (int j = 0; j < 4; ++j) {
        rows[0][j] = l.m[j];
        rows[1][j] = l.m[4 + j];
    }
    int pivot[2];
    for (int r = 0; r < 2; ++r) {
        pivot[r] = -1;
        for (int j = 0; j < 4; ++j)
            if (rows[r][j] != 0) {
                pivot[r] = j;
                break;
            }
    }
    std::array<Pt4, 2> basis;
    int nb = 0;
    for (int c = 0; c < 4; ++c) {
        if (c == pivot[0] || c == pivot[1]) continue;
        Pt4 x{0, 0, 0, 0};
        x[c] = 1;
        for (int r = 0; r < 2; ++r) x[pivot[r]] = F.neg(rows[r][c]);
        basis[nb++] = x;
    }
    return basis;
}

Line line_from_planes(const Field& F, const Pt4& h1, const Pt4& h2) {
    if (h1 == h2) throw std::invalid_argument("line_from_planes requires distinct planes");
    Line duals = line_from_rows(F, h1, h2);
    auto basis = null_space(F, duals);
    return line_from_rows(F, basis[0], basis[1]);
}

static std::vector<Pt4> span_classes(const Field& F, const Pt4& r0, const Pt4& r1) {
    std::vector<Pt4> out;
    out.reserve(F.q() + 1);
    for (int t = 0; t < F.q(); ++t) {
        Pt4 v;
        for (int j = 0; j < 4; ++j)
            v[j] = F.add(r0[j], F.mul(static_cast<Elt>(t), r1[j]));
        out.push_back(normalize4(F, v));
    }
    out.push_back(normalize4(F, r1));
    return out;
}

std::vector<Pt4> points_on_line(const Field& F, const Line& l) {
    Pt4 r0{l.m[0], l.m[1], l.m[2], l.m[3]};
    Pt4 r1{l.m[4], l.m[5], l.m[6], l.m[7]};
    return span_classes(F, r0, r1);
}

std::vector<Pt4> planes_through_line(const Field& F, const Line& l) {
    auto basis = null_space(F, l);
    return span_classes(F, basis[0], basis[1]);
}

bool incident(const Field& F, const Pt4& p, const Pt4& h) {
    Elt s = 0;
    for (int i = 0; i < 4; ++i) s = F.add(s, F.mul(p[i], h[i]));
    return s == 0;
}

bool point_on_line(const Field& F, const Pt4& p, const Line& l) {
    for (const Pt4& h : null_space(F, l))
        if (!incident(F, p, h)) return false;
    return true;
}

bool line_in_plane(const Field& F, const Line& l, const Pt4& h) {
    Pt4 r0{l.m[0], l.m[1], l.m[2], l.m[3]};
    Pt4 r1{l.m[4], l.m[5], l.m[6], l.m[7]};
    return incident(F, r0, h) && incident(F, r1, h);
}

std::vector<Pt4> all_points(const Field& F) {
    std::vector<Pt4> out;
    const int q = F.q();
    out.reserve(static_cast<size_t>(q) * q * q + q * q + q + 1);
    for (int lead = 0; lead < 4; ++lead) {
        int free = 3 - lead;
        long count = 1;
        for (int i = 0; i < free; ++i) count *= q;
        for (long v = 0; v < count; ++v) {
            Pt4 p{0, 0, 0, 0};
            p[lead] = 1;
            long rest = v;
            // Fill trailing coordinates so enumeration is lexicographic.
            for (int j = lead + 1; j < 4; ++j) {
                long divisor = 1;
                for (int t = j + 1; t < 4; ++t) divisor *= q;
                p[j] = static_cast<Elt>((rest / divisor) % q);
            }
            (void)rest;
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Pt4& a, const Pt4& b) {
        return pack4(F, a) < pack4(F, b);
    });
    return out;
}

std::vector<Pt4> all_planes(const Field& F) { return all_points(F); }

std::vector<Line> all_lines(const Field& F) {
    const int q = F.q();
    std::vector<Line> out;
    out.reserve(static_cast<size_t>(q * q + 1) * (q * q + q + 1));
    // Enumerate canonical RREFs by the pivot column pair (c0 < c1); the
    // entries in non-pivot columns to the right of each pivot are free.
    for (int c0 = 0; c0 < 4; ++c0)
        for (int c1 = c0 + 1; c1 < 4; ++c1) {
            std::vector<int> free0, free1;
            for (int j = c0 + 1; j < 4; ++j)
                if (j != c1) free0.push_back(j);
            for (int j = c1 + 1; j < 4; ++j) free1.push_back(j);
            long count = 1;
            for (size_t i = 0; i < free0.size() + free1.size(); ++i) count *= q;
            for (long v = 0; v < count; ++v) {
                Line l;
                l.m.fill(0);
                l.m[c0] = 1;
                l.m[4 + c1] = 1;
                long rest = v;
                for (auto it = free1.rbegin(); it != free1.rend(); ++it) {
                    l.m[4 + *it] = static_cast<Elt>(rest % q);
                    rest /= q;
                }
                for (auto it = free0.rbegin(); it != free0.rend(); ++it) {
                    l.m[*it] = static_cast<Elt>(rest % q);
                    rest /= q;
                }
                out.push_back(l);
            }
        }
    std::sort(out.begin(), out.end(), [&](const Line& a, const Line& b) {
        return pack_line(F, a) < pack_line(F, b);
    });
    return out;
}

std::string point_to_string(const Pt4& p) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i) s += ':';
        s += std::to_string(p[i]);
    }
    return s;
}

std::string plane_to_string(const Pt4& h) { return "[" + point_to_string(h) + "]"; }

std::string line_to_string(const Line& l) {
    Pt4 r0{l.m[0], l.m[1], l.m[2], l.m[3]};
    Pt4 r1{l.m[4], l.m[5], l.m[6], l.m[7]};
    return point_to_string(r0) + ";" + point_to_string(r1);
}

static Pt4 parse_tuple(const Field& F, const std::string& s) {
    Pt4 p{};
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t next = s.find(':', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        long v = std::stol(tok);
        if (v < 0 || v >= F.q()) throw std::invalid_argument("coordinate out of range");
        p[i] = static_cast<Elt>(v);
        if (i < 3) {
            if (next == std::string::npos) throw std::invalid_argument("expected 4 coordinates");
            pos = next + 1;
        }
    }
    return normalize4(F, p);
}

Pt4 parse_point(const Field& F, const std::string& s) { return parse_tuple(F, s); }

Pt4 parse_plane(const Field& F, const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("plane syntax is \"[y0:y1:y2:y3]\"");
    return parse_tuple(F, s.substr(1, s.size() - 2));
}

Line parse_line(const Field& F, const std::string& s) {
    if (auto amp = s.find('&'); amp != std::string::npos)
        return line_from_planes(F, parse_plane(F, s.substr(0, amp)),
                                parse_plane(F, s.substr(amp + 1)));
    if (auto semi = s.find(';'); semi != std::string::npos)
        return line_through(F, parse_point(F, s.substr(0, semi)),
                            parse_point(F, s.substr(semi + 1)));
    throw std::invalid_argument("line syntax is \"pt;pt\" or \"plane&plane\"");
}

} // namespace tcubic
