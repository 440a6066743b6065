#include "polypair/seeds.hpp"

#include <functional>
#include <map>

#include "polypair/constructions.hpp"
#include "polypair/cyclic.hpp"
#include "polypair/error.hpp"
#include "polypair/io.hpp"

namespace polypair {

namespace {

struct ReferenceRow {
    const char* facets;
    std::int64_t f0;
    std::int64_t f03;
};

// Facet lists of the polytopes P1..P27 with 7 and 8 vertices.
const ReferenceRow kReference[] = {
    {"[654321][65430][6520][6420][5310][5210][4310][4210]", 7, 35},
    {"[65432][65431][65210][64210][5320][5310][4320][4310]", 7, 36},
    {"[65432][65431][65210][6421][5320][5310][4320][4310][4210]", 7, 39},
    {"[65432][65410][6531][6431][5420][5321][5210][4320][4310][3210]", 7, 42},
    {"[65432][6541][6531][6431][5421][5320][5310][5210][4320][4310][4210]", 7, 45},
    {"[65432][65431][6521][6420][6410][6210][5320][5310][5210][4320][4310]", 7, 46},
    {"[65432][6541][6531][6430][6410][6310][5421][5320][5310][5210][4320][4210]", 7, 49},
    {"[765432][765410][76321][75310][64210][5430][4320][3210]", 8, 39},
    {"[765432][76541][76310][75310][64210][6320][5420][5410][5320]", 8, 42},
    {"[76543][76542][76321][75310][75210][64310][64210][5430][5420]", 8, 43},
    {"[765432][76541][76310][54310][7531][6421][6320][6210][4320][4210]", 8, 45},
    {"[765432][76541][76320][75310][54310][7610][6421][6210][4320][4210]", 8, 46},
    {"[765432][76541][73210][63210][7631][7520][7510][6420][6410][5420][5410]", 8, 49},
    {"[765432][76541][76310][7531][6430][6410][5420][5410][5321][5210][4320][3210]", 8, 52},
    {"[765432][76510][7641][7541][6530][6421][6321][6310][5420][5410][5320][4210][3210]", 8, 55},
    {"[76543][76521][76420][7542][6531][6431][6410][6210][5432][5320][5310][5210][4320][4310]", 8, 59},
    {"[76543][76542][73210][63210][7632][7531][7520][7510][6431][6420][6410][5431][5420][5410]", 8, 60},
    {"[76543][76521][7642][7542][6530][6510][6432][6320][6210][5430][5421][5410][4321][4310][3210]", 8, 62},
    {"[76543][76542][73210][7631][7621][7530][7520][6431][6420][6410][6210][5431][5420][5410][5310]", 8, 63},
    {"[76543][7652][7642][7531][7521][7431][7421][6530][6521][6510][6430][6420][6210][5310][4310][4210]", 8, 65},
    {"[76543][76542][7632][7531][7521][7320][7310][7210][6431][6420][6410][6320][6310][5431][5421][4210]", 8, 66},
    {"[7654][7653][7643][7542][7532][7431][7421][7321][6540][6530][6431][6410][6310][5420][5320][4210][3210]", 8, 68},
    {"[76543][7652][7642][7531][7521][7431][7421][6530][6521][6510][6430][6420][6210][5310][4321][4320][3210]", 8, 69},
    {"[76543][76542][7631][7621][7531][7520][7510][7210][6430][6420][6321][6320][5431][5420][5410][4310][3210]", 8, 70},
    {"[7654][7653][7643][7542][7532][7431][7421][7321][6542][6530][6520][6430][6420][5321][5310][5210][4310][4210]", 8, 72},
    {"[76543][7652][7642][7541][7521][7420][7410][7210][6530][6521][6510][6432][6320][6210][5431][5310][4320][4310]", 8, 73},
    {"[7654][7653][7643][7542][7532][7431][7421][7321][6542][6530][6520][6431][6420][6410][6310][5321][5310][5210][4210]", 8, 76},
};

// Dual pairs listed in the small-pair table, keyed by reference index.
const std::map<int, std::pair<std::int64_t, std::int64_t>> kListedDuals = {
    {1, {8, 35}},   {2, {8, 36}},   {3, {9, 39}},   {4, {10, 42}},  {5, {11, 45}},
    {6, {11, 46}},  {7, {12, 49}},  {9, {9, 42}},   {10, {9, 43}},  {11, {10, 45}},
    {12, {10, 46}}, {13, {11, 49}}, {14, {12, 52}}, {15, {13, 55}},
};

using Builder = std::function<VertexFacetIncidence()>;

VertexFacetIncidence split_first_bipyramid(const VertexFacetIncidence& p, const std::string& what) {
    auto local = classify_local(p);
    const auto* b = local.splittable_bipyramid();
    if (!b) throw Error(ErrorCode::StepPreconditionFailure, what + " has no bipyramid facet with a simple apex");
    return split_bipyramid_facet(p, b->facet);
}

VertexFacetIncidence stack_first_square_pyramid(const VertexFacetIncidence& p, const std::string& what) {
    auto local = classify_local(p);
    if (local.square_pyramid_facets.empty())
        throw Error(ErrorCode::StepPreconditionFailure, what + " has no square-pyramid facet");
    return stack_beyond_facet(p, local.square_pyramid_facets.front());
}

class SeedDatabase {
public:
    SeedDatabase() {
        add("simplex", {5, 20}, "4-simplex", [] { return simplex(4); });
        add("pyr2-quadrangle", {6, 26}, "2-fold pyramid over a quadrangle", [] { return pyramid_over_polygon(4, 2); });
        add("pyr-bipyramid3", {6, 29}, "pyramid over a triangular bipyramid",
            [] { return pyramid_over(polygon_bipyramid(3), 4); });
        add("pyr-prism3", {7, 29}, "pyramid over a triangular prism", [] { return pyramid_over(polygon_prism(3), 4); });
        add("pyr2-pentagon", {7, 32}, "2-fold pyramid over a pentagon", [] { return pyramid_over_polygon(5, 2); });
        add("pyr2-hexagon", {8, 38}, "2-fold pyramid over a hexagon", [] { return pyramid_over_polygon(6, 2); });

        for (int i = 0; i < 27; ++i) {
            const auto& row = kReference[i];
            const std::string name = "P" + std::to_string(i + 1);
            add(name, {row.f0, row.f03}, "reference facet list", [&row] { return parse_bracket_format(row.facets); });
            std::pair<std::int64_t, std::int64_t> dual_pair;
            if (auto it = kListedDuals.find(i + 1); it != kListedDuals.end()) {
                dual_pair = it->second;
            } else {
                // Not listed in the table: facet count of the list itself.
                dual_pair = {parse_bracket_format(row.facets).num_facets(), row.f03};
            }
            add(name + "*", dual_pair, "dual of " + name, [this, name] { return dualize(get(name).incidence); });
        }

        add("C4(6)", {6, 36}, "cyclic polytope", [] { return cyclic_polytope(4, 6); });
        add("C4(7)", {7, 56}, "cyclic polytope", [] { return cyclic_polytope(4, 7); });
        add("C4(8)", {8, 80}, "cyclic polytope", [] { return cyclic_polytope(4, 8); });
        add("C4(6)*", {9, 36}, "dual of C4(6)", [this] { return dualize(get("C4(6)").incidence); });
        add("R2(6)", {7, 52}, "C4(6) stacked beyond two facets at a universal edge", [] { return generalized_stack(2, 6); });
        add("R2(6)*", {13, 52}, "dual of R2(6)", [this] { return dualize(get("R2(6)").incidence); });

        add("row-9-45", {9, 45}, "split bipyramid in P9*",
            [this] { return split_first_bipyramid(get("P9*").incidence, "P9*"); });
        add("row-9-46", {9, 46}, "split bipyramid in P10*",
            [this] { return split_first_bipyramid(get("P10*").incidence, "P10*"); });
        add("row-9-49", {9, 49}, "split bipyramid in row-9-46",
            [this] { return split_first_bipyramid(get("row-9-46").incidence, "row-9-46"); });
        add("row-9-52", {9, 52}, "stack onto square pyramid in P2*",
            [this] { return stack_first_square_pyramid(get("P2*").incidence, "P2*"); });
        add("row-10-49", {10, 49}, "dual of row-9-49", [this] { return dualize(get("row-9-49").incidence); });
        add("row-10-52", {10, 52}, "split bipyramid in row-10-49",
            [this] { return split_first_bipyramid(get("row-10-49").incidence, "row-10-49"); });
        add("row-10-55", {10, 55}, "stack onto square pyramid in P3*",
            [this] { return stack_first_square_pyramid(get("P3*").incidence, "P3*"); });
        add("row-11-52", {11, 52}, "dual of row-9-52", [this] { return dualize(get("row-9-52").incidence); });
        add("row-11-55", {11, 55}, "dual of row-10-55", [this] { return dualize(get("row-10-55").incidence); });
        add("row-9-79", {9, 79}, "stack onto square pyramid in P19",
            [this] { return stack_first_square_pyramid(get("P19").incidence, "P19"); });
    }

    const SeedEntry& get(const std::string& name) const {
        auto it = entries_.find(name);
        if (it == entries_.end()) throw Error(ErrorCode::UnknownSeed, "no seed named '" + name + "'");
        return it->second;
    }

    const std::vector<std::string>& names() const { return order_; }

private:
    void add(const std::string& name, std::pair<std::int64_t, std::int64_t> pair, const std::string& source,
             const Builder& build) {
        entries_.emplace(name, SeedEntry{name, build(), pair, source});
        order_.push_back(name);
    }

    std::map<std::string, SeedEntry> entries_;
    std::vector<std::string> order_;
};

const SeedDatabase& database() {
    static const SeedDatabase db;
    return db;
}

} // namespace

const SeedEntry& load_seed(const std::string& name) { return database().get(name); }

std::vector<std::string> seed_names() { return database().names(); }

const std::vector<std::string>& reference_facet_lists() {
    static const std::vector<std::string> lists = [] {
        std::vector<std::string> out;
        for (const auto& row : kReference) out.emplace_back(row.facets);
        return out;
    }();
    return lists;
}

const std::vector<TableRow>& small_pair_rows() {
    static const std::vector<TableRow> rows = {
        // Simplex facet and simple vertex.
        {5, 20, "simplex", true, true},
        {6, 26, "pyr2-quadrangle", true, true},
        {6, 29, "pyr-bipyramid3", true, true},
        {7, 29, "pyr-prism3", true, true},
        {7, 32, "pyr2-pentagon", true, true},
        {7, 35, "P1", true, true},
        {7, 36, "P2", true, true},
        {7, 39, "P3", true, true},
        {7, 45, "P5", true, true},
        {8, 35, "P1*", true, true},
        {8, 36, "P2*", true, true},
        {8, 38, "pyr2-hexagon", true, true},
        {8, 39, "P8", true, true},
        {8, 42, "P9", true, true},
        {8, 45, "P11", true, true},
        {8, 46, "P12", true, true},
        {8, 49, "P13", true, true},
        {8, 52, "P14", true, true},
        {8, 55, "P15", true, true},
        {8, 59, "P16", true, true},
        {8, 62, "P18", true, true},
        {9, 39, "P3*", true, true},
        {9, 42, "P9*", true, true},
        {9, 45, "row-9-45", true, true},
        {9, 46, "row-9-46", true, true},
        {9, 49, "row-9-49", true, true},
        {9, 52, "row-9-52", true, true},
        {10, 45, "P11*", true, true},
        {10, 46, "P12*", true, true},
        {10, 49, "row-10-49", true, true},
        {10, 52, "row-10-52", true, true},
        {10, 55, "row-10-55", true, true},
        {11, 45, "P5*", true, true},
        {11, 49, "P13*", true, true},
        {11, 52, "row-11-52", true, true},
        {11, 55, "row-11-55", true, true},
        {12, 52, "P14*", true, true},
        {13, 55, "P15*", true, true},
        // Simplex facet.
        {6, 36, "C4(6)", true, false},
        {7, 42, "P4", true, false},
        {7, 46, "P6", true, false},
        {7, 49, "P7", true, false},
        {7, 52, "R2(6)", true, false},
        {7, 56, "C4(7)", true, false},
        {8, 43, "P10", true, false},
        {8, 60, "P17", true, false},
        {8, 63, "P19", true, false},
        {8, 65, "P20", true, false},
        {8, 66, "P21", true, false},
        {8, 68, "P22", true, false},
        {8, 69, "P23", true, false},
        {8, 70, "P24", true, false},
        {8, 72, "P25", true, false},
        {8, 73, "P26", true, false},
        {8, 76, "P27", true, false},
        {8, 80, "C4(8)", true, false},
        {9, 79, "row-9-79", true, false},
        // Simple vertex.
        {9, 36, "C4(6)*", false, true},
        {9, 43, "P10*", false, true},
        {10, 42, "P4*", false, true},
        {11, 46, "P6*", false, true},
        {12, 49, "P7*", false, true},
        {13, 52, "R2(6)*", false, true},
    };
    return rows;
}

} // namespace polypair
