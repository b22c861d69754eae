#pragma once

#include <array>
#include <string>
#include <vector>

#include "ifr/ranking.hpp"
#include "ifr/trifn.hpp"

namespace ifr {

// Reference tables embedded as fixtures: an index table (three sets of
// three numbers with V, A, rho at p=2 and p=3, and a result order per set)
// and a method-comparison table over three further sets of numbers.  The
// report recomputes every cell this library is responsible for and shows it
// side by side with the reference cell and the absolute gap.

struct IndexCells {
    double value = 0.0;
    double ambiguity = 0.0;
    double rho2 = 0.0;
    double rho3 = 0.0;
};

struct IndexRow {
    std::string set;  // "I", "II", "III"
    std::string id;   // "a", "b", "c"
    Trifn number;
    IndexCells computed;   // lambda = 1/2 throughout
    IndexCells reference;
    std::array<bool, 4> cell_ok;  // |computed - reference| <= index_tolerance()
};

struct OrderLine {
    std::string set;
    std::string computed_p2;  // worst first, " ≺ " separated
    std::string computed_p3;
    std::string reference;
    bool matches_p2 = false;
    bool matches_p3 = false;
};

// One method block of the comparison table: author label, score per
// (id, set) cell, and a printed result order per set.  Verbatim blocks are
// external methods' scores, displayed as published and never recomputed.
struct ComparisonBlock {
    std::string method;
    std::array<std::array<double, 3>, 3> cells;  // [id a,b,c][set I,II,III]
    std::array<std::string, 3> results;
    bool verbatim = true;
};

struct ComparisonCheck {
    std::string set;
    std::string id;
    double computed = 0.0;
    double reference = 0.0;
    bool ok = false;  // |computed - reference| <= comparison_tolerance()
};

struct TablesReport {
    std::vector<IndexRow> index_rows;          // 9, set-major
    std::vector<OrderLine> index_orders;       // 3
    std::vector<ComparisonBlock> comparison;   // all method blocks in table order
    std::vector<ComparisonCheck> proposed_p2;  // 9, set-major: recomputed scores
    std::vector<ComparisonCheck> proposed_p3;  // 9, informational (known deviation)
    std::vector<OrderLine> comparison_orders;  // 3, proposed orders vs printed results
    std::vector<std::string> discrepancies;    // known deviations, one line each
};

// Cell acceptance windows for the two tables.
double index_tolerance();       // 2e-3
double comparison_tolerance();  // 1e-2

// The numbers behind the tables, ids "I.a" .. "III.c", set-major.
const std::vector<RankItem>& index_numbers();
const std::vector<RankItem>& comparison_numbers();

TablesReport build_tables_report();

// Text rendering: index cells and gaps at `precision` decimals, comparison
// cells at the 2 decimals of the reference table.
std::string render_tables_report(const TablesReport& report, int precision = 4);

// Same content as a json document (full-precision numbers).
std::string render_tables_report_json(const TablesReport& report);

}  // namespace ifr
