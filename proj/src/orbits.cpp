#include "tcubic/orbits.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <thread>

#include <json.hpp>

namespace tcubic {

namespace {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t, std::size_t)>& body) {
    if (jobs <= 1 || n < 1024) {
        body(0, n);
        return;
    }
    std::size_t chunk = (n + jobs - 1) / jobs;
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi] { body(lo, hi); });
    }
    for (auto& th : threads) th.join();
}

} // namespace

OrbitTable line_orbits(const Classifier& cls, int jobs) {
    const Field& F = cls.field();
    std::vector<Line> lines = all_lines(F);

    OrbitTable table;
    table.orbit_of.reserve(lines.size() * 2);

    std::vector<Mat4> gens;
    for (const Mat2& g : group_generators(F)) gens.push_back(phi(F, g));

    for (const Line& seed : lines) {
        std::uint64_t seed_key = pack_line(F, seed);
        if (table.orbit_of.count(seed_key)) continue;
        // Lines are visited in increasing key order, so the seed is the
        // smallest member of its orbit.
        int id = static_cast<int>(table.orbits.size());
        long size = 0;
        std::deque<Line> queue{seed};
        table.orbit_of.emplace(seed_key, id);
        while (!queue.empty()) {
            Line cur = queue.front();
            queue.pop_front();
            ++size;
            for (const Mat4& g : gens) {
                Line img = apply_line(F, g, cur);
                if (table.orbit_of.emplace(pack_line(F, img), id).second)
                    queue.push_back(img);
            }
        }
        OrbitInfo info;
        info.id = id;
        info.rep = seed;
        info.size = size;
        info.stabilizer = group_order(F) / size;
        table.orbits.push_back(info);
    }

    parallel_for(table.orbits.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            OrbitInfo& o = table.orbits[i];
            o.cell = cls.classify_line_cell(o.rep);
            o.label = cls.classify_line_orbit(o.rep);
            o.od0 = cls.od0(o.rep);
            o.od2 = cls.od2(o.rep);
        }
    });
    return table;
}

long stabilizer_order(const Field& F, const Line& l) {
    long count = 0;
    for (const Mat2& g : all_group_elements(F))
        if (apply_line(F, phi(F, g), l) == l) ++count;
    return count;
}

bool TableReport::all_pass() const {
    for (const TableRow& r : rows)
        if (!r.pass()) return false;
    return true;
}

TableReport verify_table(const Classifier& cls, const OrbitTable& table, int jobs) {
    const Field& F = cls.field();
    std::vector<Line> lines = all_lines(F);

    struct PerLine {
        std::int8_t label;
        bool od_ok;
    };
    std::vector<PerLine> per_line(lines.size());
    std::array<ExpectedOD, 11> expect{};
    for (int lab = 1; lab <= 10; ++lab) expect[lab] = expected_od(lab, F);

    parallel_for(lines.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            OrbitLabel lab = cls.classify_line_orbit(lines[i]);
            bool ok = true;
            if (lab != 0)
                ok = cls.od2(lines[i]) == expect[lab].od2 &&
                     cls.od0(lines[i]) == expect[lab].od0;
            per_line[i] = {static_cast<std::int8_t>(lab), ok};
        }
    });

    TableReport report;
    report.q = F.q();
    report.minus3_square = F.minus_three_square();
    report.rows.resize(10);
    std::array<std::vector<int>, 11> orbit_ids{};
    for (int lab = 1; lab <= 10; ++lab) {
        TableRow& row = report.rows[lab - 1];
        row.label = lab;
        row.expected_od2 = expect[lab].od2;
        row.expected_od0 = expect[lab].od0;
        row.od_ok = true;
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lab = per_line[i].label;
        if (lab == 0) continue;
        TableRow& row = report.rows[lab - 1];
        ++row.member_count;
        if (!per_line[i].od_ok && row.od_ok) {
            row.od_ok = false;
            row.counterexample = line_to_string(lines[i]);
        }
        int id = table.orbit_of.at(pack_line(F, lines[i]));
        auto& ids = orbit_ids[lab];
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    for (int lab = 1; lab <= 10; ++lab) {
        TableRow& row = report.rows[lab - 1];
        row.orbit_count = static_cast<int>(orbit_ids[lab].size());
        row.single_orbit = row.orbit_count == 1;
        if (row.single_orbit) {
            const OrbitInfo& o = table.orbits[orbit_ids[lab].front()];
            row.orbit_size = o.size;
            // The BFS orbit must coincide with the label's member set, not
            // just overlap it.
            if (o.size != row.member_count) {
                row.single_orbit = false;
                if (row.counterexample.empty())
                    row.counterexample = "orbit size " + std::to_string(o.size) +
                                         " != member count " + std::to_string(row.member_count);
            }
        }
    }
    return report;
}

CensusReport census(const Field& F, const OrbitTable& table) {
    CensusReport rep;
    rep.q = F.q();
    rep.q_mod6 = F.q() % 6;
    rep.total_orbits = static_cast<long>(table.orbits.size());
    for (const OrbitInfo& o : table.orbits) ++rep.orbits_per_cell[static_cast<int>(o.cell)];
    rep.predicted = rep.q_mod6 == 1 ? 9 + (2L * F.q() - 1) : 9 + (2L * F.q() - 3);
    rep.matches_prediction = rep.total_orbits == rep.predicted;
    return rep;
}

L4Report l4_size_check(const Classifier& cls, const OrbitTable& table) {
    const Field& F = cls.field();
    const long q = F.q();
    L4Report rep;
    rep.q = static_cast<int>(q);
    for (const OrbitInfo& o : table.orbits)
        if (o.label == 4) rep.l4_size += o.size;

    // Count L4 lines per osculating plane directly.
    std::vector<long> per_plane;
    for (const Pt4& h : cls.model().osc_planes()) {
        long n = 0;
        for (const Line& l : all_lines(F))
            if (line_in_plane(F, l, h) && cls.classify_line_orbit(l) == 4) ++n;
        per_plane.push_back(n);
    }
    rep.per_plane_constant = std::all_of(per_plane.begin(), per_plane.end(),
                                         [&](long n) { return n == per_plane.front(); });
    rep.per_plane_count = per_plane.front();
    rep.expected_per_plane = q * (q - 1) / 2;
    rep.total_variant_a = q * (q * q - 1);
    rep.total_variant_b = q * (q * q - 1) / 2;
    rep.matches_a = rep.l4_size == rep.total_variant_a;
    rep.matches_b = rep.l4_size == rep.total_variant_b;
    return rep;
}

CorollaryReport corollary_scan(const Classifier& cls, int jobs) {
    const Field& F = cls.field();
    std::vector<Line> lines = all_lines(F);
    std::vector<std::uint8_t> bad(lines.size(), 0);
    parallel_for(lines.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            OD od = cls.od2(lines[i]);
            bad[i] = od.v[0] == 1 && od.v[1] == 0 && od.v[2] == 0 && od.v[3] >= 1;
        }
    });
    CorollaryReport rep;
    rep.lines_scanned = static_cast<long>(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (bad[i]) rep.counterexamples.push_back(line_to_string(lines[i]));
    return rep;
}

std::string cache_file_name(const Field& F) {
    return "orbits-p" + std::to_string(F.p()) + "-k" + std::to_string(F.k()) + ".json";
}

void save_orbit_cache(const Field& F, const OrbitTable& table, const std::string& dir) {
    nlohmann::json j;
    j["meta"] = {{"p", F.p()},       {"k", F.k()},
                 {"modulus", F.modulus()}, {"q", F.q()},
                 {"engine_version", engine_version()}};
    nlohmann::json orbits = nlohmann::json::array();
    for (const OrbitInfo& o : table.orbits) {
        orbits.push_back({{"id", o.id},
                          {"size", o.size},
                          {"rep", line_to_string(o.rep)},
                          {"label", label_name(o.label)},
                          {"cell", cell_name(o.cell)},
                          {"od0", o.od0.v},
                          {"od2", o.od2.v},
                          {"stab", o.stabilizer}});
    }
    j["orbits"] = std::move(orbits);
    std::ofstream out(dir + "/" + cache_file_name(F));
    out << j.dump(1) << "\n";
}

std::optional<OrbitTable> load_orbit_cache(const Field& F, const std::string& dir) {
    std::ifstream in(dir + "/" + cache_file_name(F));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        const auto& meta = j.at("meta");
        if (meta.at("p") != F.p() || meta.at("k") != F.k() || meta.at("q") != F.q() ||
            meta.at("modulus").get<std::vector<int>>() != F.modulus() ||
            meta.at("engine_version") != std::string(engine_version()))
            return std::nullopt;
        OrbitTable table;
        for (const auto& jo : j.at("orbits")) {
            OrbitInfo o;
            o.id = jo.at("id");
            o.size = jo.at("size");
            o.rep = parse_line(F, jo.at("rep"));
            std::string cell = jo.at("cell");
            for (int c = 0; c <= static_cast<int>(LineCell::O6); ++c)
                if (cell_name(static_cast<LineCell>(c)) == cell)
                    o.cell = static_cast<LineCell>(c);
            std::string lab = jo.at("label");
            o.label = lab == "O6-residual" ? 0 : std::stoi(lab.substr(1));
            auto od0 = jo.at("od0").get<std::array<int, 5>>();
            auto od2 = jo.at("od2").get<std::array<int, 5>>();
            o.od0.v = od0;
            o.od2.v = od2;
            o.stabilizer = jo.at("stab");
            table.orbits.push_back(o);
        }
        return table;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace tcubic
