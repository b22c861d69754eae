#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifr/dataset.hpp"
#include "ifr/indices.hpp"
#include "ifr/lp_metric.hpp"
#include "ifr/quadrature.hpp"
#include "ifr/ranking.hpp"
#include "ifr/tables.hpp"
#include "ifr/trifn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;

struct RunConfig {
    double p = 2.0;
    double lambda = 0.5;
    double tie_eps = 1e-9;
    std::string format = "tsv";
    int precision = 4;
};

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

// Shortest round-trip rendering, for full-precision text output.
std::string full(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

nlohmann::json config_json(const RunConfig& cfg) {
    return {{"p", cfg.p},
            {"lambda", cfg.lambda},
            {"tie_epsilon", cfg.tie_eps},
            {"precision", cfg.precision}};
}

std::vector<ifr::DatasetRecord> load_dataset(const std::string& path) {
    if (path == "-") return ifr::parse_dataset(std::cin);
    std::ifstream in(path);
    if (!in) throw ifr::ParseError("could not open '" + path + "'", 0);
    return ifr::parse_dataset(in);
}

int cmd_eval(const std::string& path, const RunConfig& cfg) {
    std::vector<ifr::DatasetRecord> records = load_dataset(path);
    if (records.empty()) throw ifr::ParseError("dataset holds no records", 0);
    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["config"] = config_json(cfg);
        doc["records"] = nlohmann::json::array();
        for (const ifr::DatasetRecord& r : records) {
            ifr::VaComponents c = ifr::components(r.number);
            ifr::VaIndex ix = ifr::va_index(r.number, cfg.lambda);
            doc["records"].push_back({{"id", r.id},
                                      {"v_mu", c.v_mu},
                                      {"v_nu", c.v_nu},
                                      {"a_mu", c.a_mu},
                                      {"a_nu", c.a_nu},
                                      {"value", ix.value},
                                      {"ambiguity", ix.ambiguity}});
        }
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "id\tv_mu\tv_nu\ta_mu\ta_nu\tvalue\tambiguity\n";
    for (const ifr::DatasetRecord& r : records) {
        ifr::VaComponents c = ifr::components(r.number);
        ifr::VaIndex ix = ifr::va_index(r.number, cfg.lambda);
        std::cout << r.id << '\t' << fixed(c.v_mu, cfg.precision) << '\t'
                  << fixed(c.v_nu, cfg.precision) << '\t' << fixed(c.a_mu, cfg.precision) << '\t'
                  << fixed(c.a_nu, cfg.precision) << '\t' << fixed(ix.value, cfg.precision) << '\t'
                  << fixed(ix.ambiguity, cfg.precision) << "\n";
    }
    return kExitOk;
}

int cmd_rank(const std::string& path, const RunConfig& cfg) {
    std::vector<ifr::DatasetRecord> records = load_dataset(path);
    std::vector<ifr::RankItem> items;
    for (const ifr::DatasetRecord& r : records) items.push_back({r.id, r.number});
    ifr::RankOutcome outcome = ifr::rank(ifr::PNorm(cfg.p), items, cfg.lambda, cfg.tie_eps);
    std::string order = ifr::order_string(outcome);
    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["config"] = config_json(cfg);
        doc["order"] = order;
        doc["entries"] = nlohmann::json::array();
        for (std::size_t i = 0; i < outcome.entries.size(); ++i) {
            doc["entries"].push_back({{"position", i + 1},
                                      {"id", outcome.entries[i].id},
                                      {"rho", outcome.entries[i].score},
                                      {"group", outcome.tie_groups[i]}});
        }
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "# order: " << order << "\n";
    std::cout << "position\tid\trho\tgroup\n";
    for (std::size_t i = 0; i < outcome.entries.size(); ++i) {
        std::cout << i + 1 << '\t' << outcome.entries[i].id << '\t'
                  << fixed(outcome.entries[i].score, cfg.precision) << '\t'
                  << outcome.tie_groups[i] << "\n";
    }
    return kExitOk;
}

int cmd_dist(const std::string& path, const RunConfig& cfg) {
    std::vector<ifr::DatasetRecord> records = load_dataset(path);
    if (records.empty()) throw ifr::ParseError("dataset holds no records", 0);
    ifr::PNorm p(cfg.p);
    std::size_t n = records.size();
    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            matrix[i][j] =
                ifr::trifn_distance(p, records[i].number, records[j].number, cfg.lambda);
        }
    }
    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["config"] = config_json(cfg);
        doc["ids"] = nlohmann::json::array();
        for (const ifr::DatasetRecord& r : records) doc["ids"].push_back(r.id);
        doc["matrix"] = matrix;
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "id";
    for (const ifr::DatasetRecord& r : records) std::cout << '\t' << r.id;
    std::cout << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        std::cout << records[i].id;
        for (std::size_t j = 0; j < n; ++j) std::cout << '\t' << fixed(matrix[i][j], cfg.precision);
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_tables(const RunConfig& cfg) {
    ifr::TablesReport report = ifr::build_tables_report();
    if (cfg.format == "json") {
        std::cout << ifr::render_tables_report_json(report);
    } else {
        std::cout << ifr::render_tables_report(report, cfg.precision);
    }
    return kExitOk;
}

// Random valid numbers for the oracle sweep, with the degenerate corners
// (w=0, u=1, point support, triangular) mixed in.
class SweepGen {
public:
    explicit SweepGen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    ifr::Trifn number() {
        double a[4];
        for (double& x : a) x = uniform(-2.0, 2.0);
        std::sort(std::begin(a), std::end(a));
        double roll = uniform(0.0, 1.0);
        if (roll < 0.05) a[1] = a[2] = a[3] = a[0];       // point support
        else if (roll < 0.15) a[2] = a[1];                // triangular
        double w = uniform(0.0, 1.0);
        double u = uniform(0.0, 1.0 - w);
        double droll = uniform(0.0, 1.0);
        if (droll < 0.05) w = 0.0;
        else if (droll < 0.10) { w = 0.0; u = 1.0; }
        return ifr::Trifn(a[0], a[1], a[2], a[3], w, u);
    }

private:
    std::mt19937_64 rng_;
};

int cmd_check(const RunConfig& cfg, int trials) {
    SweepGen gen(20240915u);
    const double tol = 1e-8;
    const double p_grid[4] = {2.0, 2.5, 3.0, 4.0};
    double max_dev = 0.0;
    auto note = [&](double closed, double quad) {
        max_dev = std::max(max_dev, std::abs(closed - quad));
    };
    ifr::Trifn prev = gen.number();
    for (int t = 0; t < trials; ++t) {
        ifr::Trifn n = gen.number();
        ifr::VaComponents c = ifr::components(n);
        note(c.v_mu, ifr::value_by_quadrature(n, ifr::Side::membership));
        note(c.v_nu, ifr::value_by_quadrature(n, ifr::Side::nonmembership));
        note(c.a_mu, ifr::ambiguity_by_quadrature(n, ifr::Side::membership));
        note(c.a_nu, ifr::ambiguity_by_quadrature(n, ifr::Side::nonmembership));

        ifr::PNorm p(p_grid[t % 4]);
        double e0 = gen.uniform(-2.0, 2.0);
        double e1 = gen.uniform(-2.0, 2.0);
        if (t % 7 == 0) e1 = e0;                     // constant difference
        if (t % 11 == 0) e1 = e0 + 1e-9;             // nearly constant
        note(ifr::interval_distance(p, {e1, e0}, {0.0, 0.0}), ifr::lp_by_quadrature(p, e0, e1));

        ifr::VaIndex ix = ifr::va_index(n, cfg.lambda);
        ifr::VaIndex iy = ifr::va_index(prev, cfg.lambda);
        double closed = ifr::trifn_distance(p, n, prev, cfg.lambda);
        double quad = ix.value >= 0.0
                          ? ifr::lp_by_quadrature(p, ix.value - iy.value, ix.ambiguity - iy.ambiguity)
                          : ifr::lp_by_quadrature(p, ix.ambiguity - iy.ambiguity, ix.value - iy.value);
        note(closed, quad);
        prev = n;
    }
    bool ok = max_dev <= tol;
    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["config"] = config_json(cfg);
        doc["trials"] = trials;
        doc["max_deviation"] = max_dev;
        doc["tolerance"] = tol;
        doc["ok"] = ok;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "trials\t" << trials << "\n";
        std::cout << "max_deviation\t" << full(max_dev) << "\n";
        std::cout << "tolerance\t" << full(tol) << "\n";
        std::cout << "status\t" << (ok ? "ok" : "FAIL") << "\n";
    }
    if (!ok) {
        std::cerr << "error: closed forms deviate from quadrature by " << full(max_dev)
                  << " (tolerance " << full(tol) << ")\n";
        return kExitNumeric;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank trapezoidal/triangular intuitionistic fuzzy numbers by value, ambiguity, "
                 "and distance to zero"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--p", cfg.p, "Norm exponent, must be greater than 1")->capture_default_str();
    app.add_option("--lambda", cfg.lambda, "Index blend weight in [0, 1]")->capture_default_str();
    app.add_option("--tie-eps", cfg.tie_eps, "Score gap treated as a tie")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", cfg.precision, "Decimal places for tsv output")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();

    std::string eval_path;
    std::string rank_path;
    std::string dist_path;
    int trials = 1000;

    CLI::App* sub_eval =
        app.add_subcommand("eval", "Per-record value/ambiguity components and indices");
    sub_eval->add_option("dataset", eval_path, "Dataset file, or - for standard input")->required();
    CLI::App* sub_rank = app.add_subcommand("rank", "Order records by signed distance to zero");
    sub_rank->add_option("dataset", rank_path, "Dataset file, or - for standard input")->required();
    CLI::App* sub_dist = app.add_subcommand("dist", "Pairwise distance matrix");
    sub_dist->add_option("dataset", dist_path, "Dataset file, or - for standard input")->required();
    CLI::App* sub_tables =
        app.add_subcommand("tables", "Recompute the reference tables with a discrepancy report");
    CLI::App* sub_check =
        app.add_subcommand("check", "Sweep closed forms against the quadrature oracle");
    sub_check->add_option("--trials", trials, "Random numbers to sweep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    for (CLI::App* sub : {sub_eval, sub_rank, sub_dist, sub_tables, sub_check}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (!(cfg.p > 1.0)) {
        std::cerr << "error: --p must be greater than 1\n";
        return kExitInput;
    }
    if (!(cfg.lambda >= 0.0 && cfg.lambda <= 1.0)) {
        std::cerr << "error: --lambda must lie in [0, 1]\n";
        return kExitInput;
    }
    if (!(cfg.tie_eps >= 0.0)) {
        std::cerr << "error: --tie-eps must be non-negative\n";
        return kExitInput;
    }

    try {
        if (sub_eval->parsed()) return cmd_eval(eval_path, cfg);
        if (sub_rank->parsed()) return cmd_rank(rank_path, cfg);
        if (sub_dist->parsed()) return cmd_dist(dist_path, cfg);
        if (sub_tables->parsed()) return cmd_tables(cfg);
        return cmd_check(cfg, trials);
    } catch (const ifr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
