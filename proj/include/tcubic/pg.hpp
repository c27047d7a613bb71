#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tcubic/gf.hpp"

namespace tcubic {

/// Homogeneous 4-tuple, normalized so the leftmost nonzero entry is 1.
/// Used both for points of PG(3,q) and (dual coordinates of) planes.
using Pt4 = std::array<Elt, 4>;

/// Point of PG(1,q), normalized the same way.
using Pt2 = std::array<Elt, 2>;

/// Line of PG(3,q), stored as the unique 2x4 reduced row echelon form of a
/// spanning pair. Equality and hashing are representational.
struct Line {
    std::array<Elt, 8> m{};
    bool operator==(const Line&) const = default;
};

Pt4 normalize4(const Field& F, Pt4 raw);
Pt2 normalize2(const Field& F, Pt2 raw);

/// Packs a normalized tuple into an integer key; lexicographic in the tuple.
std::uint32_t pack4(const Field& F, const Pt4& p);
std::uint64_t pack_line(const Field& F, const Line& l);

Line line_through(const Field& F, const Pt4& p, const Pt4& r);
Line line_from_planes(const Field& F, const Pt4& h1, const Pt4& h2);

/// RREF of the span of two (independent) row vectors.
Line line_from_rows(const Field& F, Pt4 r0, Pt4 r1);

/// Basis of the 2-dimensional solution space of r0.x = r1.x = 0, where
/// r0, r1 are the rows of the line. Self-dual: applying it twice returns
/// the original row space.
std::array<Pt4, 2> null_space(const Field& F, const Line& l);

std::vector<Pt4> points_on_line(const Field& F, const Line& l);
std::vector<Pt4> planes_through_line(const Field& F, const Line& l);

bool incident(const Field& F, const Pt4& p, const Pt4& h);
bool point_on_line(const Field& F, const Pt4& p, const Line& l);
bool line_in_plane(const Field& F, const Line& l, const Pt4& h);

std::vector<Pt4> all_points(const Field& F);
std::vector<Pt4> all_planes(const Field& F);

/// All (q^2+1)(q^2+q+1) lines, sorted by packed key (lexicographic in the
/// canonical representative).
std::vector<Line> all_lines(const Field& F);

std::string point_to_string(const Pt4& p);
std::string plane_to_string(const Pt4& h);
std::string line_to_string(const Line& l);

Pt4 parse_point(const Field& F, const std::string& s);   // "y0:y1:y2:y3"
Pt4 parse_plane(const Field& F, const std::string& s);   // "[y0:y1:y2:y3]"
Line parse_line(const Field& F, const std::string& s);   // "pt;pt" or "plane&plane"

} // namespace tcubic
