#include "ifr/tables.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include <json.hpp>

#include "ifr/indices.hpp"
#include "ifr/lp_metric.hpp"

namespace ifr {
namespace {

constexpr double kIndexTol = 2e-3;
constexpr double kComparisonTol = 1e-2;

const char* const kSetNames[3] = {"I", "II", "III"};
const char* const kIdNames[3] = {"a", "b", "c"};

std::vector<RankItem> label(const std::vector<Trifn>& numbers) {
    std::vector<RankItem> items;
    for (std::size_t i = 0; i < numbers.size(); ++i) {
        items.push_back({std::string(kSetNames[i / 3]) + "." + kIdNames[i % 3], numbers[i]});
    }
    return items;
}

// Index-table inputs, set-major.
const std::vector<Trifn>& index_trifns() {
    static const std::vector<Trifn> v = {
        Trifn::triangular(0.5, 0.7, 0.9, 0.7, 0.2),
        Trifn::triangular(0.2, 0.3, 0.4, 0.6, 0.4),
        Trifn::triangular(0.4, 0.7, 0.9, 0.6, 0.3),
        Trifn(0.10, 0.19, 0.25, 0.30, 0.7, 0.2),
        Trifn(0.12, 0.20, 0.23, 0.28, 0.8, 0.1),
        Trifn(0.21, 0.27, 0.32, 0.35, 0.6, 0.3),
        Trifn::triangular(0.2, 0.5, 0.7, 0.7, 0.2),
        Trifn::triangular(0.2, 0.3, 0.9, 0.6, 0.4),
        Trifn(0.2, 0.4, 0.5, 0.9, 0.5, 0.3),
    };
    return v;
}

// Printed index-table cells (V, A, rho p=2, rho p=3), set-major.
const IndexCells kIndexReference[9] = {
    {0.5250, 0.0990, 0.3353, 0.3544},
    {0.1800, 0.0400, 0.1171, 0.1232},
    {0.4441, 0.1083, 0.2927, 0.3067},
    {0.1599, 0.0799, 0.1221, 0.1241},
    {0.1785, 0.0623, 0.1249, 0.1291},
    {0.1885, 0.0520, 0.1265, 0.1319},
    {0.3624, 0.1249, 0.2531, 0.2615},
    {0.2300, 0.1400, 0.1868, 0.1885},
    {0.1933, 0.1800, 0.1866, 0.1883},
};

const char* const kIndexResults[3] = {
    "b ≺ c ≺ a",
    "a ≺ b ≺ c",
    "c ≺ b ≺ a",
};

// Comparison-table inputs, set-major.  Set I c is embedded with the degrees
// as printed alongside the numbers (w=0.2, u=0.6); the table's own cells
// for that column correspond to a w=0.2, u=0.4 variant, which is one of the
// reported discrepancies.
const std::vector<Trifn>& comparison_trifns() {
    static const std::vector<Trifn> v = {
        Trifn(0.3, 0.4, 0.5, 0.6, 0.2, 0.4),
        Trifn(0.1, 0.2, 0.3, 0.4, 0.3, 0.5),
        Trifn(0.5, 0.6, 0.7, 0.8, 0.2, 0.6),
        Trifn(0.7, 0.8, 0.9, 1.0, 0.2, 0.5),
        Trifn(0.3, 0.4, 0.5, 0.6, 0.7, 0.1),
        Trifn(0.5, 0.6, 0.7, 0.8, 0.8, 0.2),
        Trifn(0.3, 0.4, 0.5, 0.6, 0.5, 0.3),
        Trifn(0.7, 0.8, 0.9, 1.0, 0.5, 0.3),
        Trifn(0.2, 0.4, 0.6, 0.8, 0.5, 0.3),
    };
    return v;
}

// Printed comparison-table blocks; cells are [id a,b,c][set I,II,III].
std::vector<ComparisonBlock> comparison_fixture() {
    return {
        {"Xu and Yager",
         {{{0.6, -0.3, 0.2}, {0.8, 0.8, 0.2}, {0.8, 0.6, 0.2}}},
         {"c ≺ a ≺ b", "a ≺ c ≺ b", "a ∼ b ∼ c"},
         true},
        {"Ye",
         {{{-0.2, -0.1, 0.3}, {0.1, 0.5, 0.3}, {0.0, 0.8, 0.3}}},
         {"a ≺ c ≺ b", "a ≺ b ≺ c", "a ∼ b ∼ c"},
         true},
        {"Wei",
         {{{0.82, 0.70, 0.73}, {0.90, 0.64, 0.41}, {0.80, 0.48, 0.70}}},
         {"b ≺ a ≺ c", "a ≺ b ≺ c", "a ≺ c ≺ b"},
         true},
        {"D. F. Li",
         {{{0.18, 0.29, 0.27}, {0.10, 0.36, 0.51}, {0.26, 0.52, 0.30}}},
         {"b ≺ a ≺ c", "a ≺ b ≺ c", "a ≺ c ≺ b"},
         true},
        {"Li, lambda = 1/2",
         {{{0.16, 0.28, 0.26}, {0.09, 0.31, 0.48}, {0.24, 0.45, 0.25}}},
         {"b ≺ a ≺ c", "a ≺ b ≺ c", "c ≺ a ≺ b"},
         true},
        {"Proposed method, p = 2",
         {{{0.12, 0.18, 0.17}, {0.08, 0.25, 0.30}, {0.17, 0.34, 0.28}}},
         {"b ≺ a ≺ c", "a ≺ b ≺ c", "a ≺ c ≺ b"},
         false},
        {"Proposed method, p = 3",
         {{{0.04, 0.08, 0.07}, {0.02, 0.13, 0.19}, {0.07, 0.21, 0.12}}},
         {"b ≺ a ≺ c", "a ≺ b ≺ c", "a ≺ c ≺ b"},
         true},
    };
}

// Worst-first rendering of a ranking, matching the result-column format.
std::string ascending_order(PNorm p, const std::vector<RankItem>& items) {
    RankOutcome out = rank(p, items);
    std::string s;
    for (std::size_t k = out.entries.size(); k-- > 0;) {
        s += out.entries[k].id;
        if (k > 0) {
            s += out.tie_groups[k] == out.tie_groups[k - 1] ? " ∼ " : " ≺ ";
        }
    }
    return s;
}

std::vector<RankItem> set_slice(const std::vector<Trifn>& numbers, std::size_t set) {
    std::vector<RankItem> items;
    for (std::size_t i = 0; i < 3; ++i) {
        items.push_back({kIdNames[i], numbers[set * 3 + i]});
    }
    return items;
}

std::string fmt(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    while (s.size() < width) s += ' ';
    return s;
}

std::string lead(std::string s, std::size_t width) {
    while (s.size() < width) s.insert(s.begin(), ' ');
    return s;
}

const char* const kQuantities[4] = {"V", "A", "rho(p=2)", "rho(p=3)"};

double cell(const IndexCells& c, int q) {
    switch (q) {
        case 0: return c.value;
        case 1: return c.ambiguity;
        case 2: return c.rho2;
        default: return c.rho3;
    }
}

}  // namespace

double index_tolerance() { return kIndexTol; }
double comparison_tolerance() { return kComparisonTol; }

const std::vector<RankItem>& index_numbers() {
    static const std::vector<RankItem> items = label(index_trifns());
    return items;
}

const std::vector<RankItem>& comparison_numbers() {
    static const std::vector<RankItem> items = label(comparison_trifns());
    return items;
}

TablesReport build_tables_report() {
    TablesReport report;
    PNorm p2(2.0);
    PNorm p3(3.0);

    const std::vector<Trifn>& index_in = index_trifns();
    for (std::size_t i = 0; i < index_in.size(); ++i) {
        const Trifn& n = index_in[i];
        VaIndex ix = va_index(n);
        IndexCells computed{ix.value, ix.ambiguity, rank_score(p2, n), rank_score(p3, n)};
        IndexRow row{kSetNames[i / 3], kIdNames[i % 3], n, computed, kIndexReference[i], {}};
        for (int q = 0; q < 4; ++q) {
            row.cell_ok[q] = std::abs(cell(computed, q) - cell(row.reference, q)) <= kIndexTol;
        }
        report.index_rows.push_back(std::move(row));
    }
    for (std::size_t s = 0; s < 3; ++s) {
        std::vector<RankItem> items = set_slice(index_in, s);
        OrderLine line{kSetNames[s], ascending_order(p2, items), ascending_order(p3, items),
                       kIndexResults[s], false, false};
        line.matches_p2 = line.computed_p2 == line.reference;
        line.matches_p3 = line.computed_p3 == line.reference;
        report.index_orders.push_back(std::move(line));
    }

    report.comparison = comparison_fixture();
    const ComparisonBlock& printed_p2 = report.comparison[5];
    const ComparisonBlock& printed_p3 = report.comparison[6];
    const std::vector<Trifn>& comp_in = comparison_trifns();
    for (std::size_t s = 0; s < 3; ++s) {
        for (std::size_t i = 0; i < 3; ++i) {
            const Trifn& n = comp_in[s * 3 + i];
            double c2 = rank_score(p2, n);
            double c3 = rank_score(p3, n);
            double r2 = printed_p2.cells[i][s];
            double r3 = printed_p3.cells[i][s];
            report.proposed_p2.push_back({kSetNames[s], kIdNames[i], c2, r2,
                                          std::abs(c2 - r2) <= kComparisonTol});
            report.proposed_p3.push_back({kSetNames[s], kIdNames[i], c3, r3,
                                          std::abs(c3 - r3) <= kComparisonTol});
        }
    }
    for (std::size_t s = 0; s < 3; ++s) {
        std::vector<RankItem> items = set_slice(comp_in, s);
        OrderLine line{kSetNames[s], ascending_order(p2, items), ascending_order(p3, items),
                       printed_p2.results[s], false, false};
        line.matches_p2 = line.computed_p2 == line.reference;
        line.matches_p3 = line.computed_p3 == printed_p3.results[s];
        report.comparison_orders.push_back(std::move(line));
    }

    for (const IndexRow& row : report.index_rows) {
        for (int q = 0; q < 4; ++q) {
            if (row.cell_ok[q]) continue;
            report.discrepancies.push_back(
                "index table, Set " + row.set + " " + row.id + ": " + kQuantities[q] +
                " computed " + fmt(cell(row.computed, q), 4) + " vs reference " +
                fmt(cell(row.reference, q), 4) + " (gap above " + fmt(kIndexTol, 3) + ")");
        }
    }
    for (const OrderLine& line : report.index_orders) {
        if (line.matches_p2 && line.matches_p3) continue;
        report.discrepancies.push_back("index table, Set " + line.set +
                                       " result order: computed " + line.computed_p2 +
                                       " vs reference " + line.reference);
    }
    for (const ComparisonCheck& check : report.proposed_p2) {
        if (check.ok) continue;
        report.discrepancies.push_back(
            "comparison table p=2, Set " + check.set + " " + check.id + ": computed " +
            fmt(check.computed, 4) + " vs reference " + fmt(check.reference, 2) +
            " (gap above " + fmt(kComparisonTol, 2) + ")");
    }
    report.discrepancies.push_back(
        "comparison table p=3 reference row is not reproducible from the definitions; "
        "computed scores are shown alongside it, orders still agree");
    return report;
}

std::string render_tables_report(const TablesReport& report, int precision) {
    std::string out;
    std::size_t vw = static_cast<std::size_t>(precision) + 4;

    out += "Index table, lambda = 1/2 (cell tolerance " + fmt(kIndexTol, 3) + ")\n\n";
    out += "  set  id  quantity  " + lead("computed", vw) + "  " + lead("reference", vw) + "  " +
           lead("|gap|", vw) + "\n";
    for (const IndexRow& row : report.index_rows) {
        for (int q = 0; q < 4; ++q) {
            double c = cell(row.computed, q);
            double r = cell(row.reference, q);
            out += "  " + pad(row.set, 3) + "  " + pad(row.id, 2) + "  " +
                   pad(kQuantities[q], 8) + "  " + lead(fmt(c, precision), vw) + "  " +
                   lead(fmt(r, precision), vw) + "  " + lead(fmt(std::abs(c - r), precision), vw) +
                   (row.cell_ok[q] ? "" : "  !") + "\n";
        }
    }
    out += "\n  result orders (worst first)\n";
    for (const OrderLine& line : report.index_orders) {
        out += "  Set " + pad(line.set, 3) + "  p=2: " + pad(line.computed_p2, 13) + "  p=3: " +
               pad(line.computed_p3, 13) + "  reference: " + pad(line.reference, 13) +
               (line.matches_p2 && line.matches_p3 ? "" : "  !") + "\n";
    }

    out += "\nComparison table (reference scores by set; external methods shown as published)\n";
    for (const ComparisonBlock& block : report.comparison) {
        out += "\n  " + block.method + "\n";
        out += "    id  " + lead("I", 6) + "  " + lead("II", 6) + "  " + lead("III", 6) + "\n";
        for (std::size_t i = 0; i < 3; ++i) {
            out += "    " + pad(kIdNames[i], 2);
            for (std::size_t s = 0; s < 3; ++s) {
                out += "  " + lead(fmt(block.cells[i][s], 2), 6);
            }
            out += "\n";
        }
        out += "    results  I: " + pad(block.results[0], 13) + "  II: " +
               pad(block.results[1], 13) + "  III: " + pad(block.results[2], 13) + "\n";
    }

    out += "\n  proposed method, p = 2, recomputed (cell tolerance " + fmt(kComparisonTol, 2) +
           ")\n";
    out += "    set  id  " + lead("computed", vw) + "  " + lead("reference", 9) + "  " +
           lead("|gap|", vw) + "\n";
    for (const ComparisonCheck& check : report.proposed_p2) {
        out += "    " + pad(check.set, 3) + "  " + pad(check.id, 2) + "  " +
               lead(fmt(check.computed, precision), vw) + "  " + lead(fmt(check.reference, 2), 9) +
               "  " + lead(fmt(std::abs(check.computed - check.reference), precision), vw) +
               (check.ok ? "" : "  !") + "\n";
    }
    out += "\n  proposed method, p = 3, recomputed (known deviation, shown for information)\n";
    out += "    set  id  " + lead("computed", vw) + "  " + lead("reference", 9) + "\n";
    for (const ComparisonCheck& check : report.proposed_p3) {
        out += "    " + pad(check.set, 3) + "  " + pad(check.id, 2) + "  " +
               lead(fmt(check.computed, precision), vw) + "  " + lead(fmt(check.reference, 2), 9) +
               "\n";
    }
    out += "\n  proposed method orders (worst first)\n";
    for (const OrderLine& line : report.comparison_orders) {
        out += "  Set " + pad(line.set, 3) + "  p=2: " + pad(line.computed_p2, 13) + "  p=3: " +
               pad(line.computed_p3, 13) + "  reference: " + pad(line.reference, 13) +
               (line.matches_p2 && line.matches_p3 ? "" : "  !") + "\n";
    }

    out += "\nDiscrepancies\n";
    for (const std::string& line : report.discrepancies) {
        out += "  - " + line + "\n";
    }
    return out;
}

std::string render_tables_report_json(const TablesReport& report) {
    nlohmann::json doc;
    doc["index_tolerance"] = kIndexTol;
    doc["comparison_tolerance"] = kComparisonTol;

    nlohmann::json rows = nlohmann::json::array();
    for (const IndexRow& row : report.index_rows) {
        nlohmann::json r;
        r["set"] = row.set;
        r["id"] = row.id;
        r["computed"] = {{"value", row.computed.value},
                         {"ambiguity", row.computed.ambiguity},
                         {"rho2", row.computed.rho2},
                         {"rho3", row.computed.rho3}};
        r["reference"] = {{"value", row.reference.value},
                          {"ambiguity", row.reference.ambiguity},
                          {"rho2", row.reference.rho2},
                          {"rho3", row.reference.rho3}};
        r["cell_ok"] = row.cell_ok;
        rows.push_back(std::move(r));
    }
    doc["index_rows"] = std::move(rows);

    auto order_json = [](const OrderLine& line) {
        return nlohmann::json{{"set", line.set},
                              {"computed_p2", line.computed_p2},
                              {"computed_p3", line.computed_p3},
                              {"reference", line.reference},
                              {"matches_p2", line.matches_p2},
                              {"matches_p3", line.matches_p3}};
    };
    doc["index_orders"] = nlohmann::json::array();
    for (const OrderLine& line : report.index_orders) doc["index_orders"].push_back(order_json(line));

    doc["comparison"] = nlohmann::json::array();
    for (const ComparisonBlock& block : report.comparison) {
        doc["comparison"].push_back({{"method", block.method},
                                     {"cells", block.cells},
                                     {"results", block.results},
                                     {"verbatim", block.verbatim}});
    }
    auto check_json = [](const ComparisonCheck& check) {
        return nlohmann::json{{"set", check.set},
                              {"id", check.id},
                              {"computed", check.computed},
                              {"reference", check.reference},
                              {"ok", check.ok}};
    };
    doc["proposed_p2"] = nlohmann::json::array();
    for (const ComparisonCheck& check : report.proposed_p2) doc["proposed_p2"].push_back(check_json(check));
    doc["proposed_p3"] = nlohmann::json::array();
    for (const ComparisonCheck& check : report.proposed_p3) doc["proposed_p3"].push_back(check_json(check));
    doc["comparison_orders"] = nlohmann::json::array();
    for (const OrderLine& line : report.comparison_orders) doc["comparison_orders"].push_back(order_json(line));
    doc["discrepancies"] = report.discrepancies;
    return doc.dump(2) + "\n";
}

}  // namespace ifr
