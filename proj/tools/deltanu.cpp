// deltanu: factorization-length invariants of numerical semigroups.
#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "deltanu/scan.hpp"

namespace {

using namespace deltanu;

constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

std::string join_pipe(const SortedSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += "|";
        out += std::to_string(s[i]);
    }
    return out;
}

int cmd_bounds(const std::string& gens) {
    const auto S = parse_semigroup(gens);
    std::cout << to_json(compute_bounds(S)).dump() << "\n";
    return 0;
}

int cmd_dnu(const std::string& gens, Value n, bool naive, bool fast, bool check) {
    const auto S = parse_semigroup(gens);
    if (check) {
        const auto slow = delta_nu_naive_counted(S, n);
        const auto quick = delta_nu_auto(S, n);
        if (slow.delta_nu != quick.delta_nu) {
            std::cerr << "mismatch at n=" << n << ": naive=" << nlohmann::json(slow.delta_nu)
                      << " fast=" << nlohmann::json(quick.delta_nu) << "\n";
            return kExitMismatch;
        }
        std::cout << to_json(quick).dump() << "\n";
        return 0;
    }
    DeltaNuRecord rec;
    if (naive) {
        const auto res = delta_nu_naive_counted(S, n);
        rec.n = n;
        rec.method = DeltaNuRecord::Method::Naive;
        rec.delta_nu = res.delta_nu;
        rec.evaluated_elements = res.w_count;
    } else if (fast) {
        const auto B = compute_bounds(S);
        rec = delta_nu_fast(S, n, B);
    } else {
        rec = delta_nu_auto(S, n);
    }
    std::cout << to_json(rec).dump() << "\n";
    return 0;
}

int cmd_table(const std::string& gens, Value to, int jobs, const std::string& format) {
    const auto S = parse_semigroup(gens);
    std::optional<BoundsProfile> B;
    if (S.embedding_dimension() >= 3) B = compute_bounds(S);

    std::vector<DeltaNuRecord> records(static_cast<std::size_t>(to) + 1);
    std::atomic<Value> cursor{0};
    auto work = [&] {
        for (;;) {
            const Value n = cursor.fetch_add(1);
            if (n > to) return;
            records[static_cast<std::size_t>(n)] = delta_nu_auto(S, n, B ? &*B : nullptr);
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (format == "csv") {
        std::cout << "n,delta_nu,method,evaluated_elements\n";
        for (const auto& rec : records)
            std::cout << rec.n << "," << join_pipe(rec.delta_nu) << ","
                      << (rec.method == DeltaNuRecord::Method::Fast ? "fast" : "naive") << ","
                      << rec.evaluated_elements << "\n";
    } else {
        for (const auto& rec : records) std::cout << to_json(rec).dump() << "\n";
    }
    return 0;
}

int cmd_period(const std::string& gens, Value to) {
    const auto S = parse_semigroup(gens);
    std::cout << to_json(minimal_period_report(S, to)).dump() << "\n";
    return 0;
}

int cmd_zset(const std::string& gens, Value element) {
    const auto S = parse_semigroup(gens);
    nlohmann::json j;
    j["element"] = element;
    j["factorizations"] = nlohmann::json::array();
    for (const auto& f : factorizations(S, element)) j["factorizations"].push_back(f.coordinates);
    j["lengths"] = length_set(S, element).lengths;
    j["delta"] = delta_of_element(S, element);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_wset(const std::string& gens, Value n, bool count_only) {
    const auto S = parse_semigroup(gens);
    nlohmann::json j;
    j["n"] = n;
    if (count_only) {
        j["count"] = w_count(S, n);
    } else {
        const auto w = w_set(S, n);
        j["count"] = w.size();
        j["elements"] = w;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_scan(int max_genus, bool keep_arithmetic, bool nonconstant_only, int jobs) {
    ScanFilter filter;
    filter.max_genus = max_genus;
    filter.skip_generalized_arithmetic = !keep_arithmetic;
    filter.require_nonconstant = nonconstant_only;
    const auto items = genus_tree_scan(filter, 0, jobs);
    bool over_budget = false;
    for (const auto& item : items) {
        std::cout << to_json(item).dump() << "\n";
        if (!item.error.empty() || (item.report && item.report->truncated)) over_budget = true;
    }
    return over_budget ? kExitBudget : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorization-length invariants of numerical semigroups"};
    app.require_subcommand(1);

    std::string gens;
    Value n = 0, to = 0, element = 0;
    int jobs = 1, max_genus = 8;
    bool naive = false, fast = false, check = false;
    bool count_only = false, keep_arithmetic = false, nonconstant_only = false;
    std::string format = "json";

    auto* bounds_cmd = app.add_subcommand("bounds", "bound profile of a semigroup");
    bounds_cmd->add_option("-s,--semigroup", gens, "generators, e.g. 4,9,10,15")->required();

    auto* dnu_cmd = app.add_subcommand("dnu", "gap set of nu(n)");
    dnu_cmd->add_option("-s,--semigroup", gens)->required();
    dnu_cmd->add_option("-n", n, "length to evaluate")->required();
    dnu_cmd->add_flag("--naive", naive, "force the reference path");
    dnu_cmd->add_flag("--fast", fast, "force the windowed path");
    dnu_cmd->add_flag("--check", check, "run both, exit 3 on mismatch");

    auto* table_cmd = app.add_subcommand("table", "dnu records for n = 0..N");
    table_cmd->add_option("-s,--semigroup", gens)->required();
    table_cmd->add_option("--to", to, "largest n")->required();
    table_cmd->add_option("--jobs", jobs, "worker threads");
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* period_cmd = app.add_subcommand("period", "periodicity report");
    period_cmd->add_option("-s,--semigroup", gens)->required();
    period_cmd->add_option("--to", to, "largest n")->required();

    auto* zset_cmd = app.add_subcommand("zset", "factorizations of an element");
    zset_cmd->add_option("-s,--semigroup", gens)->required();
    zset_cmd->add_option("--element", element)->required();

    auto* wset_cmd = app.add_subcommand("wset", "elements with a length-n factorization");
    wset_cmd->add_option("-s,--semigroup", gens)->required();
    wset_cmd->add_option("-n", n)->required();
    wset_cmd->add_flag("--count-only", count_only);

    auto* scan_cmd = app.add_subcommand("scan", "walk the genus tree, one report per semigroup");
    scan_cmd->add_option("--max-genus", max_genus)->required();
    scan_cmd->add_flag("--keep-arithmetic", keep_arithmetic,
                       "also report generalized arithmetic progressions");
    scan_cmd->add_flag("--nonconstant-only", nonconstant_only,
                       "only non-constant periodic parts");
    scan_cmd->add_option("--jobs", jobs, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds_cmd->parsed()) return cmd_bounds(gens);
        if (dnu_cmd->parsed()) return cmd_dnu(gens, n, naive, fast, check);
        if (table_cmd->parsed()) return cmd_table(gens, to, jobs, format);
        if (period_cmd->parsed()) return cmd_period(gens, to);
        if (zset_cmd->parsed()) return cmd_zset(gens, element);
        if (wset_cmd->parsed()) return cmd_wset(gens, n, count_only);
        if (scan_cmd->parsed()) return cmd_scan(max_genus, keep_arithmetic, nonconstant_only, jobs);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
