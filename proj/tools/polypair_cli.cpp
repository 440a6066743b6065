#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "polypair/characterize.hpp"
#include "polypair/cyclic.hpp"
#include "polypair/error.hpp"
#include "polypair/io.hpp"
#include "polypair/seeds.hpp"
#include "polypair/witness.hpp"

using namespace polypair;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitPlan = 4;

std::string file_stem(const std::string& seed) {
    std::string out;
    for (char c : seed) {
        if (c == '*') out += "-dual";
        else if (c == '(' || c == ',') out += '-';
        else if (c != ')') out += c;
    }
    return out;
}

std::string status_line(const PairStatus& s) {
    std::string out(to_string(s.verdict));
    if (!s.reason.empty()) out += " (" + s.reason + ")";
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error(ErrorCode::SyntaxError, "cannot write " + path);
    out << text;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string region_csv(const std::vector<RegionCell>& cells, bool witnesses) {
    std::ostringstream out;
    out << "a,b,verdict,reason,recipe";
    if (witnesses) out << ",witness";
    out << "\n";
    for (const auto& c : cells) {
        out << c.a << ',' << c.b << ',' << to_string(c.status.verdict) << ',' << csv_field(c.status.reason) << ','
            << csv_field(c.recipe_id);
        if (witnesses) out << ',' << (c.witness_verified ? "PASS" : (c.recipe_id.empty() ? "" : "FAIL"));
        out << "\n";
    }
    return out.str();
}

std::string_view marker_class(Verdict v) {
    switch (v) {
    case Verdict::Polytopal: return "polytopal";
    case Verdict::Exceptional: return "exceptional";
    case Verdict::OutOfBounds: return "outofbounds";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

// Scatter in the (a, b - 4a) plane for incidence kinds, (a, b) otherwise.
std::string region_svg(const std::vector<RegionCell>& cells, PairKind kind) {
    bool sheared = kind == PairKind::F0F03 || kind == PairKind::F3F03;
    auto y_of = [&](const RegionCell& c) { return sheared ? c.b - 4 * c.a : c.b; };
    std::int64_t xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!cells.empty()) {
        xmin = xmax = cells.front().a;
        ymin = ymax = y_of(cells.front());
        for (const auto& c : cells) {
            xmin = std::min(xmin, c.a);
            xmax = std::max(xmax, c.a);
            ymin = std::min(ymin, y_of(c));
            ymax = std::max(ymax, y_of(c));
        }
    }
    const std::int64_t step = 10, margin = 30;
    std::int64_t w = (xmax - xmin) * step + 2 * margin, h = (ymax - ymin) * step + 2 * margin;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    out << "<style>.polytopal{fill:#222}.exceptional{fill:#d00}.outofbounds{fill:#ddd}.unknown{fill:#39f}</style>\n";
    out << "<text x=\"" << margin << "\" y=\"" << h - 8 << "\" font-size=\"10\">" << to_string(kind)
        << (sheared ? " (y = b - 4a)" : "") << "</text>\n";
    for (const auto& c : cells) {
        std::int64_t x = margin + (c.a - xmin) * step;
        std::int64_t y = h - margin - (y_of(c) - ymin) * step;
        out << "<circle class=\"" << marker_class(c.status.verdict) << "\" cx=\"" << x << "\" cy=\"" << y
            << "\" r=\"3\"><title>(" << c.a << "," << c.b << ")</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void print_report(std::ostream& out, const VertexFacetIncidence& p, const CheckReport& r) {
    out << "dim " << p.dim() << "\n";
    out << "f-vector (";
    for (std::size_t i = 0; i < r.f_vector.size(); ++i) out << (i ? "," : "") << r.f_vector[i];
    out << ")\n";
    out << "f0" << p.dim() - 1 << " " << p.vertex_facet_incidences() << "\n";
    out << "flag-vector";
    const auto& v = r.flags.values();
    for (unsigned mask = 1; mask < v.size(); ++mask) {
        out << " f{";
        bool first = true;
        for (int i = 0; i < p.dim(); ++i)
            if (mask & (1u << i)) {
                out << (first ? "" : ",") << i;
                first = false;
            }
        out << "}=" << v[mask];
    }
    out << "\n";
    auto line = [&](const char* name, bool ok) { out << (ok ? "PASS " : "FAIL ") << name << "\n"; };
    line("lattice", true);
    line("euler-poincare", r.euler_poincare);
    line("flag-relations", r.linear_flag_relations);
    line("incidence-identity", r.incidence_identity);
    line("facet-upper", r.facet_upper);
    line("edge-lower", r.edge_lower);
    line("f03-shortcut", r.f03_shortcut);
}

PairKind require_kind(const std::string& text, int dim = 4) {
    if (text.empty()) return dim == 4 ? PairKind::F0F03 : PairKind::F0F3;
    auto kind = parse_pair_kind(text);
    if (!kind) throw CLI::ValidationError("--kind", "unknown pair kind " + text);
    return *kind;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Face and flag vector pairs of polytopes"};
    app.require_subcommand(1);

    int dim = 4;
    std::string kind_text;
    bool refined = true;
    std::int64_t a = 0, b = 0;

    auto* check = app.add_subcommand("check", "Decide whether a pair is polytopal");
    check->add_option("--dim", dim, "Dimension")->check(CLI::Range(2, 64));
    check->add_option("--kind", kind_text, "Pair kind (default f0,f03, or f0,f3 for dim != 4)");
    check->add_flag("--refined,!--no-refined", refined, "Use refined d-large thresholds");
    check->add_option("a", a)->required();
    check->add_option("b", b)->required();

    std::string out_dir;
    auto* witness = app.add_subcommand("witness", "Construct and verify a witness polytope");
    witness->add_option("--kind", kind_text, "f0,f03 or f3,f03");
    witness->add_option("--out", out_dir, "Output directory (default: witness cache)");
    witness->add_option("a", a)->required();
    witness->add_option("b", b)->required();

    std::string file;
    auto* verify = app.add_subcommand("verify", "Verify a facet-list file");
    verify->add_option("file", file)->required();

    std::string csv_path, svg_path;
    std::int64_t max_b = 80;
    bool with_witness = false;
    auto* region = app.add_subcommand("region", "Tabulate verdicts over a grid");
    region->add_option("--kind", kind_text, "Pair kind");
    region->add_option("--max-f03,--max", max_b, "Largest second coordinate")->check(CLI::Range(1, 100000));
    region->add_option("--csv", csv_path, "CSV output path (default: stdout)");
    region->add_option("--svg", svg_path, "SVG scatter output path");
    region->add_flag("--witness", with_witness, "Execute and cache witnesses for polytopal cells");

    int n = 0;
    bool list = false, g_vector = false, spectrum = false;
    auto* cyclic = app.add_subcommand("cyclic", "Cyclic polytope counts");
    cyclic->add_option("--dim", dim, "Dimension")->check(CLI::Range(2, 64));
    cyclic->add_option("n", n)->required();
    cyclic->add_flag("--facets", list, "Print the facet list");
    cyclic->add_flag("--g-vector", g_vector, "Print the g-vector");
    cyclic->add_flag("--spectrum", spectrum, "Print achievable simplicial facet counts");

    std::string dump;
    auto* seeds = app.add_subcommand("seeds", "List or export the seed database");
    seeds->add_option("--dump", dump, "Print one seed's facet list");
    seeds->add_option("--out", out_dir, "Write every seed as <dir>/<name>.fl");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) {
            PairKind kind = require_kind(kind_text, dim);
            PairStatus s;
            if (dim == 4) {
                s = membership4(kind, a, b);
            } else {
                if (kind != PairKind::F0F3) throw CLI::ValidationError("--kind", "only f0,f3 for dim != 4");
                s = membership_high(dim, a, b, refined);
            }
            std::cout << status_line(s) << "\n";
            if (!s.witness_hint.empty()) std::cout << "witness " << s.witness_hint << "\n";
            return 0;
        }
        if (witness->parsed()) {
            PairKind kind = require_kind(kind_text);
            if (kind != PairKind::F0F03 && kind != PairKind::F3F03)
                throw CLI::ValidationError("--kind", "witnesses exist for f0,f03 and f3,f03");
            Recipe r = kind == PairKind::F0F03 ? plan(a, b) : plan_dual(a, b);
            Execution ex = execute(r);
            for (const auto& s : ex.steps)
                std::cout << (s.checks_pass ? "PASS " : "FAIL ") << to_string(s.op) << " (" << s.before.first << ","
                          << s.before.second << ") -> (" << s.after.first << "," << s.after.second << ")\n";
            std::cout << "recipe " << r.to_json() << "\n";
            if (!ex.ok()) {
                std::cout << "FAIL witness\n";
                return kExitVerify;
            }
            WitnessCache cache(out_dir);
            cache.store(kind, a, b, ex.polytope, r);
            std::string facets = cache.path(kind, a, b);
            std::string recipe_path = facets.substr(0, facets.size() - 7) + ".recipe.json";
            write_text(recipe_path, r.to_json() + "\n");
            std::cout << "facets " << facets << "\nrecipe-file " << recipe_path << "\nPASS witness\n";
            return 0;
        }
        if (verify->parsed()) {
            VertexFacetIncidence p;
            CheckReport r;
            try {
                p = read_facet_file(file);
                r = check_polytope(p);
            } catch (const Error& e) {
                std::cout << "FAIL " << e.what() << "\n";
                return kExitVerify;
            }
            print_report(std::cout, p, r);
            return r.all_pass() ? 0 : kExitVerify;
        }
        if (region->parsed()) {
            PairKind kind = require_kind(kind_text);
            WitnessCache cache;
            auto cells = region_scan(kind, default_bounds(kind, max_b), with_witness, with_witness ? &cache : nullptr);
            std::string csv = region_csv(cells, with_witness);
            if (csv_path.empty()) std::cout << csv;
            else write_text(csv_path, csv);
            if (!svg_path.empty()) write_text(svg_path, region_svg(cells, kind));
            std::map<Verdict, int> counts;
            bool failed = false;
            for (const auto& c : cells) {
                ++counts[c.status.verdict];
                bool plannable = kind == PairKind::F0F03 || kind == PairKind::F3F03;
                if (plannable && c.status.verdict == Verdict::Polytopal &&
                    (c.recipe_id.empty() || (with_witness && !c.witness_verified)))
                    failed = true;
            }
            if (!csv_path.empty())
                for (const auto& [v, count] : counts) std::cout << to_string(v) << " " << count << "\n";
            return failed ? kExitVerify : 0;
        }
        if (cyclic->parsed()) {
            std::cout << "facets " << cyclic_facet_count(dim, n) << "\n";
            if (g_vector) {
                std::cout << "g-vector";
                for (const auto& g : cyclic_g_vector(dim, n)) std::cout << " " << g;
                std::cout << "\n";
            }
            if (spectrum) {
                std::cout << "spectrum";
                for (const auto& m : simplicial_fd_spectrum(dim, n)) std::cout << " " << m;
                std::cout << "\n";
            }
            if (list) std::cout << serialize(cyclic_polytope(dim, n));
            return 0;
        }
        if (seeds->parsed()) {
            if (!dump.empty()) {
                const auto& s = load_seed(dump);
                std::cout << serialize(s.incidence, s.name + " " + s.source);
                return 0;
            }
            for (const auto& name : seed_names()) {
                const auto& s = load_seed(name);
                std::cout << name << " " << s.expected_pair.first << " " << s.expected_pair.second << " " << s.source
                          << "\n";
                if (!out_dir.empty())
                    write_facet_file((std::filesystem::path(out_dir) / (file_stem(name) + ".fl")).string(),
                                     s.incidence, s.name + " " + s.source);
            }
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == ErrorCode::PlanFailure) return kExitPlan;
        if (e.code() == ErrorCode::InvalidDimension || e.code() == ErrorCode::UnknownSeed) return kExitUsage;
        return 1;
    }
    return 0;
}
