#include "deltanu/scan.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace deltanu {

bool is_generalized_arithmetic(const NumericalSemigroup& S) {
    const auto& a = S.generators();
    const Value k = a[1] - a[0];
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (a[i + 1] - a[i] != k) return false;
    return true;
}

namespace {

constexpr int kGenusCeiling = 30;  // safety ceiling for the tree walk

// Semigroup in the genus tree, carried as an explicit membership table
// over [0, bound). The bound is large enough that every minimal
// generator (<= frobenius + multiplicity) stays in range.
struct Node {
    std::vector<char> member;
    Value frobenius = -1;
    std::vector<Value> min_gens;
};

Node derive(std::vector<char> member) {
    Node nd;
    nd.member = std::move(member);
    const Value bound = static_cast<Value>(nd.member.size());
    for (Value v = 1; v < bound; ++v)
        if (!nd.member[static_cast<std::size_t>(v)]) nd.frobenius = v;
    for (Value v = 1; v < bound; ++v) {
        if (!nd.member[static_cast<std::size_t>(v)]) continue;
        bool decomposable = false;
        for (Value t = 1; t + t <= v && !decomposable; ++t)
            decomposable = nd.member[static_cast<std::size_t>(t)] &&
                           nd.member[static_cast<std::size_t>(v - t)];
        if (!decomposable) nd.min_gens.push_back(v);
    }
    return nd;
}

}  // namespace

std::vector<std::pair<int, std::vector<Value>>> semigroups_by_genus(int max_genus) {
    if (max_genus < 1 || max_genus > kGenusCeiling)
        throw ValidationError("max_genus must be in [1, " + std::to_string(kGenusCeiling) + "]");
    const std::size_t bound = 3 * static_cast<std::size_t>(max_genus) + 8;

    std::vector<std::pair<int, std::vector<Value>>> out;
    std::vector<Node> frontier;
    frontier.push_back(derive(std::vector<char>(bound, 1)));  // the full monoid N
    for (int genus = 0; genus < max_genus; ++genus) {
        std::vector<Node> next;
        for (const Node& nd : frontier) {
            for (Value g : nd.min_gens) {
                if (g <= nd.frobenius) continue;  // not an effective generator
                std::vector<char> child = nd.member;
                child[static_cast<std::size_t>(g)] = 0;
                next.push_back(derive(std::move(child)));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const Node& a, const Node& b) { return a.min_gens < b.min_gens; });
        for (const Node& nd : next) out.emplace_back(genus + 1, nd.min_gens);
        frontier = std::move(next);
    }
    return out;
}

namespace {

ScanItem scan_one(int genus, const std::vector<Value>& gens, Value n_max,
                  std::int64_t budget_ms) {
    ScanItem item;
    item.genus = genus;
    item.generators = gens;
    try {
        const NumericalSemigroup S = new_semigroup(gens);
        const Value delta = lcm_period(S);
        Value upto = n_max;
        if (upto == 0) {
            if (S.embedding_dimension() >= 3)
                upto = compute_bounds(S).N0 + 3 * delta;
            else
                upto = 3 * delta;
        }
        Deadline deadline;
        if (budget_ms > 0)
            deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
        item.report = minimal_period_report(S, upto, deadline);
    } catch (const std::exception& e) {
        item.error = e.what();
    }
    return item;
}

}  // namespace

std::vector<ScanItem> genus_tree_scan(const ScanFilter& filter, Value n_max, int jobs) {
    const auto all = semigroups_by_genus(filter.max_genus);

    std::vector<std::pair<int, std::vector<Value>>> kept;
    for (const auto& [genus, gens] : all) {
        if (gens.size() < 2) continue;
        if (filter.skip_generalized_arithmetic) {
            const NumericalSemigroup S = new_semigroup(gens);
            if (is_generalized_arithmetic(S)) continue;
        }
        kept.emplace_back(genus, gens);
    }

    std::int64_t budget_ms = 0;
    if (const char* env = std::getenv("DELTANU_BUDGET_MS")) budget_ms = std::atoll(env);

    std::vector<ScanItem> items(kept.size());
    const int workers = std::max(1, jobs);
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= kept.size()) return;
            items[i] = scan_one(kept[i].first, kept[i].second, n_max, budget_ms);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (filter.require_nonconstant) {
        std::vector<ScanItem> filtered;
        for (auto& item : items)
            if (!item.report || !item.report->periodic_part_constant)
                filtered.push_back(std::move(item));
        items = std::move(filtered);
    }
    return items;
}

nlohmann::json to_json(const ScanItem& item) {
    nlohmann::json j;
    if (item.report) {
        j = to_json(*item.report);
    } else {
        j["generators"] = item.generators;
        j["error"] = item.error;
    }
    j["genus"] = item.genus;
    return j;
}

}  // namespace deltanu
