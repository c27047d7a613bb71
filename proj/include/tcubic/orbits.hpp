#pragma once

#include <optional>
#include <unordered_map>

#include "tcubic/classify.hpp"

namespace tcubic {

struct OrbitInfo {
    int id = 0;
    Line rep;        // lexicographically smallest member
    long size = 0;
    LineCell cell = LineCell::O6;
    OrbitLabel label = 0;
    OD od0, od2;
    long stabilizer = 0; // |G| / size
};

struct OrbitTable {
    std::vector<OrbitInfo> orbits;
    /// packed canonical line -> orbit id; empty when loaded from cache.
    std::unordered_map<std::uint64_t, std::int32_t> orbit_of;
};

/// Exhaustive orbit partition of all lines under the group generated by the
/// three standard generators, via breadth-first closure over canonical
/// forms. Orbit ids follow the order of the smallest representatives.
OrbitTable line_orbits(const Classifier& cls, int jobs = 1);

/// Direct scan over all q^3-q group elements.
long stabilizer_order(const Field& F, const Line& l);

struct TableRow {
    OrbitLabel label = 0;
    long member_count = 0;  // lines carrying this label
    int orbit_count = 0;    // BFS orbits those lines fall into (must be 1)
    long orbit_size = 0;
    OD expected_od2, expected_od0;
    bool od_ok = false;
    bool single_orbit = false;
    std::string counterexample; // first offending line, if any
    bool pass() const { return od_ok && single_orbit; }
};

struct TableReport {
    int q = 0;
    bool minus3_square = false;
    std::vector<TableRow> rows; // L1..L10
    bool all_pass() const;
};

/// Checks, for every line with a named label, that it lies in exactly one
/// G-orbit per label and that (od2, od0) match the closed forms.
TableReport verify_table(const Classifier& cls, const OrbitTable& table, int jobs = 1);

struct CensusReport {
    int q = 0;
    int q_mod6 = 0;
    long total_orbits = 0;
    std::array<long, 9> orbits_per_cell{}; // indexed by LineCell
    long predicted = 0;                    // 9+(2q-1) or 9+(2q-3)
    bool matches_prediction = false;
};

CensusReport census(const Field& F, const OrbitTable& table);

struct L4Report {
    int q = 0;
    long l4_size = 0;
    bool per_plane_constant = false;
    long per_plane_count = 0;       // lines of L4 in each osculating plane
    long expected_per_plane = 0;    // q(q-1)/2
    long total_variant_a = 0;       // q(q^2-1), as stated in the lemma
    long total_variant_b = 0;       // q(q^2-1)/2, as computed in the remark
    bool matches_a = false, matches_b = false;
};

/// Reports which of the two published |L4| totals the enumeration matches.
L4Report l4_size_check(const Classifier& cls, const OrbitTable& table);

struct CorollaryReport {
    long lines_scanned = 0;
    std::vector<std::string> counterexamples;
    bool pass() const { return counterexamples.empty(); }
};

/// No line may have a plane orbit distribution of the shape [1,0,0,d,e]
/// with d >= 1.
CorollaryReport corollary_scan(const Classifier& cls, int jobs = 1);

inline const char* engine_version() { return "1.0.0"; }

/// Versioned JSON cache keyed by (p, k, modulus).
std::string cache_file_name(const Field& F);
void save_orbit_cache(const Field& F, const OrbitTable& table, const std::string& dir);
std::optional<OrbitTable> load_orbit_cache(const Field& F, const std::string& dir);

} // namespace tcubic
