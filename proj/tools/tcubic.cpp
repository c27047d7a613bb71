// Command-line front end for the twisted-cubic line-orbit engine.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcubic/orbits.hpp"
#include "tcubic/pencils.hpp"

using namespace tcubic;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
    std::string field_spec;
    std::string format = "text";
    std::string cache_dir = ".tcubic-cache";
    bool no_cache = false;
    int jobs = 1;
};

Field open_field(const std::string& spec) {
    Field F = Field::parse(spec);
    if (F.p() == 2) throw std::invalid_argument("q must be odd");
    if (F.q() % 3 == 0) throw std::invalid_argument("q divisible by 3");
    return F;
}

OrbitTable get_orbits(const Classifier& cls, const Options& opt, bool allow_cache) {
    const Field& F = cls.field();
    if (allow_cache && !opt.no_cache)
        if (auto cached = load_orbit_cache(F, opt.cache_dir)) return std::move(*cached);
    OrbitTable table = line_orbits(cls, opt.jobs);
    if (!opt.no_cache) {
        std::error_code ec;
        std::filesystem::create_directories(opt.cache_dir, ec);
        if (!ec) save_orbit_cache(F, table, opt.cache_dir);
    }
    return table;
}

json census_json(const CensusReport& c) {
    return json{{"q", c.q},
                {"q_mod6", c.q_mod6},
                {"total_orbits", c.total_orbits},
                {"orbits_per_cell", c.orbits_per_cell},
                {"predicted", c.predicted},
                {"matches_prediction", c.matches_prediction}};
}

void print_census_text(const CensusReport& c) {
    std::printf("q=%d (q mod 6 = %d): %ld line orbits, prediction %ld -> %s\n", c.q, c.q_mod6,
                c.total_orbits, c.predicted, c.matches_prediction ? "MATCH" : "MISMATCH");
    std::printf("  orbits per cell:");
    for (int i = 0; i <= static_cast<int>(LineCell::O6); ++i)
        std::printf(" %s=%ld", cell_name(static_cast<LineCell>(i)).c_str(),
                    c.orbits_per_cell[i]);
    std::printf("\n");
}

int cmd_verify(const Options& opt) {
    Field F = open_field(opt.field_spec);
    Classifier cls(F);
    OrbitTable table = get_orbits(cls, opt, /*allow_cache=*/false);

    TableReport tr = verify_table(cls, table, opt.jobs);
    L4Report l4 = l4_size_check(cls, table);
    CorollaryReport cor = corollary_scan(cls, opt.jobs);
    BasePointReport bp = check_base_point_lemma(cls);
    NoType2Report nt2 = check_notype2(cls);

    bool l4_ok = l4.per_plane_constant && l4.per_plane_count == l4.expected_per_plane &&
                 (l4.matches_a || l4.matches_b);
    bool all_ok = tr.all_pass() && l4_ok && cor.pass() && bp.pass() && nt2.pass();

    if (opt.format == "json") {
        json rows = json::array();
        for (const TableRow& r : tr.rows)
            rows.push_back({{"label", label_name(r.label)},
                            {"orbit_size", r.orbit_size},
                            {"member_count", r.member_count},
                            {"expected_od2", r.expected_od2.v},
                            {"expected_od0", r.expected_od0.v},
                            {"pass", r.pass()},
                            {"counterexample", r.counterexample}});
        json out{{"q", tr.q},
                 {"minus3_square", tr.minus3_square},
                 {"table", rows},
                 {"l4",
                  {{"size", l4.l4_size},
                   {"per_plane_count", l4.per_plane_count},
                   {"per_plane_constant", l4.per_plane_constant},
                   {"expected_per_plane", l4.expected_per_plane},
                   {"matches_q(q^2-1)", l4.matches_a},
                   {"matches_q(q^2-1)/2", l4.matches_b}}},
                 {"corollary", {{"lines", cor.lines_scanned}, {"counterexamples", cor.counterexamples}}},
                 {"base_point_lemma",
                  {{"pencils_with_base", bp.pencils_with_base},
                   {"counterexamples", bp.counterexamples}}},
                 {"notype2",
                  {{"pencils_checked", nt2.pencils_checked},
                   {"counterexamples", nt2.counterexamples}}},
                 {"pass", all_ok}};
        std::cout << out.dump(1) << "\n";
    } else {
        std::printf("verification for q=%d (-3 %s a square)\n", tr.q,
                    tr.minus3_square ? "is" : "is not");
        for (const TableRow& r : tr.rows) {
            std::printf("  %-4s orbit size %-6ld od2=%s od0=%s : %s", label_name(r.label).c_str(),
                        r.orbit_size, od_to_string(r.expected_od2).c_str(),
                        od_to_string(r.expected_od0).c_str(), r.pass() ? "pass" : "FAIL");
            if (!r.pass()) std::printf("  (%s)", r.counterexample.c_str());
            std::printf("\n");
        }
        std::printf("  |L4| = %ld; per-osculating-plane count %ld (expected %ld, %s); ",
                    l4.l4_size, l4.per_plane_count, l4.expected_per_plane,
                    l4.per_plane_constant ? "constant" : "NOT constant");
        std::printf("matches q(q^2-1)=%ld: %s, q(q^2-1)/2=%ld: %s\n", l4.total_variant_a,
                    l4.matches_a ? "yes" : "no", l4.total_variant_b, l4.matches_b ? "yes" : "no");
        std::printf("  corollary scan over %ld lines: %s\n", cor.lines_scanned,
                    cor.pass() ? "pass" : "FAIL");
        std::printf("  base-point lemma over %ld pencils with base: %s\n", bp.pencils_with_base,
                    bp.pass() ? "pass" : "FAIL");
        std::printf("  no-type-2 criterion over %ld eligible pencils: %s\n", nt2.pencils_checked,
                    nt2.pass() ? "pass" : "FAIL");
        std::printf("overall: %s\n", all_ok ? "pass" : "FAIL");
    }
    return all_ok ? kExitPass : kExitCheckFailed;
}

int cmd_census(const Options& opt) {
    Field F = open_field(opt.field_spec);
    Classifier cls(F);
    OrbitTable table = get_orbits(cls, opt, /*allow_cache=*/true);
    CensusReport c = census(F, table);
    if (opt.format == "json")
        std::cout << census_json(c).dump(1) << "\n";
    else
        print_census_text(c);
    return kExitPass;
}

int cmd_conjecture(const Options& opt, int qmin, int qmax) {
    json out = json::array();
    bool first = true;
    for (int q = qmin; q <= qmax; ++q) {
        if (q % 2 == 0 || q % 3 == 0) continue;
        std::optional<Field> F;
        try {
            F = Field::parse(std::to_string(q));
        } catch (const std::exception&) {
            continue; // not a prime power
        }
        Options o = opt;
        o.field_spec = std::to_string(q);
        Classifier cls(*F);
        OrbitTable table = get_orbits(cls, o, /*allow_cache=*/true);
        CensusReport c = census(*F, table);
        if (opt.format == "json")
            out.push_back(census_json(c));
        else
            print_census_text(c);
        first = false;
    }
    if (first && opt.format != "json") std::printf("no valid q in [%d,%d]\n", qmin, qmax);
    if (opt.format == "json") std::cout << out.dump(1) << "\n";
    return kExitPass;
}

int cmd_classify_line(const Options& opt, const std::string& line_text, bool with_stab) {
    Field F = open_field(opt.field_spec);
    Classifier cls(F);
    Line l = parse_line(F, line_text);
    LineCell cell = cls.classify_line_cell(l);
    OrbitLabel label = cls.classify_line_orbit(l);
    OD od0 = cls.od0(l), od2 = cls.od2(l);
    long stab = with_stab ? stabilizer_order(F, l) : -1;

    if (opt.format == "json") {
        json out{{"line", line_to_string(l)},   {"cell", cell_name(cell)},
                 {"label", label_name(label)},  {"od0", od0.v},
                 {"od2", od2.v}};
        if (with_stab) out["stabilizer_order"] = stab;
        std::cout << out.dump(1) << "\n";
    } else if (opt.format == "csv") {
        std::printf("%s;%s;%s;%s;%s\n", line_to_string(l).c_str(), cell_name(cell).c_str(),
                    label_name(label).c_str(), od_to_string(od0).c_str(),
                    od_to_string(od2).c_str());
    } else {
        std::printf("line %s\n  cell  %s\n  label %s\n  od0   %s\n  od2   %s\n",
                    line_to_string(l).c_str(), cell_name(cell).c_str(),
                    label_name(label).c_str(), od_to_string(od0).c_str(),
                    od_to_string(od2).c_str());
        if (with_stab) std::printf("  stabilizer order %ld\n", stab);
    }
    return kExitPass;
}

int cmd_classify_pencil(const Options& opt, const std::string& pencil_text) {
    Field F = open_field(opt.field_spec);
    Classifier cls(F);
    Pencil P = parse_pencil(F, pencil_text);
    Line l = pencil_to_line(F, P);
    LineCell cell = cls.classify_line_cell(l);
    OrbitLabel label = cls.classify_line_orbit(l);
    OD od0 = cls.od0(l), od2 = cls.od2(l);
    auto base = base_locus(F, P);
    auto types = member_type_census(F, P);

    std::string base_str;
    for (const Pt2& b : base) {
        if (!base_str.empty()) base_str += " ";
        base_str += std::to_string(b[0]) + ":" + std::to_string(b[1]);
    }
    if (opt.format == "json") {
        json out{{"pencil", pencil_to_string(P)},
                 {"line", line_to_string(l)},
                 {"cell", cell_name(cell)},
                 {"label", label_name(label)},
                 {"od0", od0.v},
                 {"od2", od2.v},
                 {"base_locus", base_str},
                 {"member_types", types}};
        std::cout << out.dump(1) << "\n";
    } else if (opt.format == "csv") {
        std::printf("%s;%s;%s;%s;%s\n", line_to_string(l).c_str(), cell_name(cell).c_str(),
                    label_name(label).c_str(), od_to_string(od0).c_str(),
                    od_to_string(od2).c_str());
    } else {
        std::printf("pencil %s -> line %s\n  cell  %s\n  label %s\n  od0   %s\n  od2   %s\n",
                    pencil_to_string(P).c_str(), line_to_string(l).c_str(),
                    cell_name(cell).c_str(), label_name(label).c_str(),
                    od_to_string(od0).c_str(), od_to_string(od2).c_str());
        std::printf("  base locus: %s\n  member types 1..5: %d %d %d %d %d\n",
                    base_str.empty() ? "(empty)" : base_str.c_str(), types[0], types[1],
                    types[2], types[3], types[4]);
    }
    return kExitPass;
}

int cmd_table(const Options& opt) {
    Field F = open_field(opt.field_spec);
    Classifier cls(F);
    OrbitTable table = get_orbits(cls, opt, /*allow_cache=*/true);

    json rows = json::array();
    bool all_match = true;
    for (int lab = 1; lab <= 10; ++lab) {
        ExpectedOD exp = expected_od(lab, F);
        const OrbitInfo* found = nullptr;
        for (const OrbitInfo& o : table.orbits)
            if (o.label == lab) {
                found = &o;
                break;
            }
        bool match = found && found->od2 == exp.od2 && found->od0 == exp.od0;
        all_match = all_match && match;
        if (opt.format == "json") {
            rows.push_back({{"label", label_name(lab)},
                            {"expected_od2", exp.od2.v},
                            {"expected_od0", exp.od0.v},
                            {"computed_od2", found ? json(found->od2.v) : json()},
                            {"computed_od0", found ? json(found->od0.v) : json()},
                            {"orbit_size", found ? found->size : 0},
                            {"match", match}});
        } else if (opt.format == "csv") {
            std::printf("%s;%s;%s;%s;%s;%s\n", label_name(lab).c_str(),
                        od_to_string(exp.od2).c_str(), od_to_string(exp.od0).c_str(),
                        found ? od_to_string(found->od2).c_str() : "-",
                        found ? od_to_string(found->od0).c_str() : "-",
                        match ? "match" : "MISMATCH");
        } else {
            std::printf("%-4s expected od2=%s od0=%s | computed od2=%s od0=%s size=%ld : %s\n",
                        label_name(lab).c_str(), od_to_string(exp.od2).c_str(),
                        od_to_string(exp.od0).c_str(),
                        found ? od_to_string(found->od2).c_str() : "-",
                        found ? od_to_string(found->od0).c_str() : "-",
                        found ? found->size : 0L, match ? "match" : "MISMATCH");
        }
    }
    if (opt.format == "json") std::cout << rows.dump(1) << "\n";
    return all_match ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact line-orbit engine for the twisted cubic in PG(3,q)"};
    app.require_subcommand(1);

    Options opt;
    std::string line_text, pencil_text;
    bool with_stab = false;
    int qmin = 5, qmax = 25;

    auto add_common = [&](CLI::App* sub, bool needs_q) {
        if (needs_q) sub->add_option("--q", opt.field_spec, "field order q or p^k")->required();
        sub->add_option("--format", opt.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_flag("--no-cache", opt.no_cache, "recompute; do not read or write the orbit cache");
        sub->add_option("--cache-dir", opt.cache_dir, "orbit cache directory");
        sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    add_common(verify, true);
    CLI::App* censusCmd = app.add_subcommand("census", "orbit census and conjecture comparison");
    add_common(censusCmd, true);
    CLI::App* conj = app.add_subcommand("conjecture", "census over a range of q");
    add_common(conj, false);
    conj->add_option("--qmin", qmin, "smallest q");
    conj->add_option("--qmax", qmax, "largest q");
    CLI::App* cline = app.add_subcommand("classify-line", "classify a single line");
    add_common(cline, true);
    cline->add_option("--line", line_text, "\"pt;pt\" or \"plane&plane\"")->required();
    cline->add_flag("--stabilizer", with_stab, "also compute the stabilizer order");
    CLI::App* cpencil = app.add_subcommand("classify-pencil", "classify a pencil of cubics");
    add_common(cpencil, true);
    cpencil->add_option("--pencil", pencil_text, "\"cubic|cubic\"")->required();
    CLI::App* tableCmd = app.add_subcommand("table", "expected vs computed orbit distributions");
    add_common(tableCmd, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(opt);
        if (censusCmd->parsed()) return cmd_census(opt);
        if (conj->parsed()) return cmd_conjecture(opt, qmin, qmax);
        if (cline->parsed()) return cmd_classify_line(opt, line_text, with_stab);
        if (cpencil->parsed()) return cmd_classify_pencil(opt, pencil_text);
        if (tableCmd->parsed()) return cmd_table(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
