#include "syncteam/sync.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syncteam {

namespace {

// Directed count over sorted time arrays. A two-pointer sweep: for each x
// event the y events with 0 <= t_x - t_y < tau form a contiguous window.
// The per-pair contribution uses the exact difference predicate so results
// match a full pair enumeration bit for bit.
double directed_count_sorted(const std::vector<double>& xs, const std::vector<double>& ys,
                             double tau) {
    double total = 0.0;
    std::size_t lo = 0;
    for (double tx : xs) {
        while (lo < ys.size() && tx - ys[lo] >= tau) ++lo;
        for (std::size_t j = lo; j < ys.size() && ys[j] <= tx; ++j) {
            double d = tx - ys[j];
            if (d == 0.0) {
                total += 0.5;
            } else if (d > 0.0 && d < tau) {
                total += 1.0;
            }
        }
    }
    return total;
}

// Raw per-kind index plus a clamp flag. Assumes both counts are nonzero.
std::pair<double, bool> kind_sync(const std::vector<double>& xs, const std::vector<double>& ys,
                                  double tau) {
    double c = directed_count_sorted(xs, ys, tau) + directed_count_sorted(ys, xs, tau);
    double q = c / std::sqrt(static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
    if (q > 1.0) return {1.0, true};
    return {q, false};
}

}  // namespace

const IndexReport::Entry* IndexReport::find(AgentId a) const {
    for (const auto& e : agents) {
        if (e.agent == a) return &e;
    }
    return nullptr;
}

double directed_count(const EventSeries& x, const EventSeries& y, EventType e, double tau) {
    if (is_early(e)) {
        throw EmptyEventType("directed_count: early event types carry no synchrony: " +
                             std::string(event_token(e)));
    }
    return directed_count_sorted(x.times_of_kind(kind_key(e)), y.times_of_kind(kind_key(e)),
                                 tau);
}

double event_sync(const EventSeries& x, const EventSeries& y, EventType e, double tau) {
    if (is_early(e)) {
        throw EmptyEventType("event_sync: early event types carry no synchrony: " +
                             std::string(event_token(e)));
    }
    auto xs = x.times_of_kind(kind_key(e));
    auto ys = y.times_of_kind(kind_key(e));
    if (xs.empty() || ys.empty()) {
        throw EmptyEventType("event_sync: no events of kind " + std::string(event_token(e)) +
                             " in one of the series");
    }
    return kind_sync(xs, ys, tau).first;
}

PairIndex pair_sync_index(const EventSeries& x, const EventSeries& y, const SyncParams& p) {
    PairIndex out;
    out.a = x.agent;
    out.b = y.agent;

    double weighted = 0.0;
    double weight = 0.0;
    for (int kind = 0; kind < 5; ++kind) {  // regular kind classes only
        auto xs = x.times_of_kind(kind);
        auto ys = y.times_of_kind(kind);
        double w = static_cast<double>(xs.size() + ys.size());
        if (w == 0.0) continue;
        if (!xs.empty() && !ys.empty()) {
            auto [q, clamped] = kind_sync(xs, ys, p.tau);
            weighted += q * w;
            if (clamped) ++out.clamped_kinds;
        }
        // A kind one side never performs is maximal asynchrony: q = 0, full weight.
        weight += w;
    }
    if (weight == 0.0) {
        throw NoCommonBasis("pair_sync_index: both series are empty of regular events");
    }
    out.q = weighted / weight;
    return out;
}

GroupTopologyGraph build_gtg(const SessionRecording& rec, int iteration,
                             const EdgePolicy& policy, const SyncParams& p) {
    if (policy.kind == EdgePolicy::Kind::RobotFollows && !rec.find_series(policy.msp)) {
        throw UnknownAgent("build_gtg: policy names unknown agent id " +
                           std::to_string(policy.msp.id));
    }
    auto pairs = pair_indices_for_iteration(rec, iteration, p);
    return assemble_gtg(rec.agents(), pairs, policy);
}

GroupTopologyGraph assemble_gtg(const std::vector<AgentId>& vertices,
                                const std::vector<PairIndex>& pairs, const EdgePolicy& policy) {
    GroupTopologyGraph g;
    g.vertices = vertices;
    std::sort(g.vertices.begin(), g.vertices.end());

    auto weight_of = [&pairs](AgentId a, AgentId b) {
        for (const auto& pi : pairs) {
            if ((pi.a == a && pi.b == b) || (pi.a == b && pi.b == a)) return pi.q;
        }
        return 0.0;
    };

    for (const auto& from : g.vertices) {
        for (const auto& to : g.vertices) {
            if (from == to) continue;
            if (policy.kind == EdgePolicy::Kind::RobotFollows &&
                from.kind == AgentKind::Robot && !(to == policy.msp)) {
                continue;  // the SIA robot keeps one outgoing edge
            }
            g.edges.push_back({from, to, weight_of(from, to)});
        }
    }
    return g;
}

double individual_index(const GroupTopologyGraph& g, AgentId a) {
    if (!g.has_vertex(a)) {
        throw UnknownAgent("individual_index: agent id " + std::to_string(a.id) +
                           " not in graph");
    }
    double sum = 0.0;
    int n = 0;
    for (const auto& e : g.edges) {
        if (e.from == a) {
            sum += e.weight;
            ++n;
        }
    }
    if (n == 0) {
        throw IsolatedVertex("individual_index: agent id " + std::to_string(a.id) +
                             " has no outgoing edges");
    }
    return sum / static_cast<double>(n);
}

double connectivity(const GroupTopologyGraph& g, AgentId a) {
    if (!g.has_vertex(a)) {
        throw UnknownAgent("connectivity: agent id " + std::to_string(a.id) + " not in graph");
    }
    if (g.vertices.size() < 2) {
        throw DegenerateGroup("connectivity: group needs at least two agents");
    }
    int n = 0;
    for (const auto& e : g.edges) {
        if (e.from == a) ++n;
    }
    return static_cast<double>(n) / static_cast<double>(g.vertices.size() - 1);
}

IndexReport group_index(const GroupTopologyGraph& g) {
    if (g.vertices.size() < 2) {
        throw DegenerateGroup("group_index: group needs at least two agents");
    }
    IndexReport report;
    double sum = 0.0;
    for (const auto& a : g.vertices) {
        IndexReport::Entry entry;
        entry.agent = a;
        entry.individual = individual_index(g, a);
        entry.connectivity = connectivity(g, a);
        sum += entry.individual * entry.connectivity;
        report.agents.push_back(entry);
    }
    report.group = sum / static_cast<double>(g.vertices.size());
    return report;
}

std::vector<PairIndex> pair_indices_for_iteration(const SessionRecording& rec, int iteration,
                                                  const SyncParams& p) {
    auto slice = slice_by_iteration(rec, iteration);
    std::vector<PairIndex> out;
    const auto n = slice.series.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& x = slice.series[i];
            const auto& y = slice.series[j];
            PairIndex pi;
            pi.a = x.agent;
            pi.b = y.agent;
            try {
                pi = pair_sync_index(x, y, p);
            } catch (const NoCommonBasis&) {
                pi.q = 0.0;  // a pair with no events at all stays in the table as fully async
            }
            out.push_back(pi);
        }
    }
    return out;
}

std::vector<std::vector<PairIndex>> pair_indices_all_iterations(const SessionRecording& rec,
                                                                const SyncParams& p,
                                                                bool parallel) {
    const int n_iter = static_cast<int>(rec.iterations.size());
    std::vector<std::vector<PairIndex>> out(static_cast<std::size_t>(n_iter));
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n_iter; ++i) {
            out[static_cast<std::size_t>(i)] = pair_indices_for_iteration(rec, i, p);
        }
        return out;
#endif
    }
    for (int i = 0; i < n_iter; ++i) {
        out[static_cast<std::size_t>(i)] = pair_indices_for_iteration(rec, i, p);
    }
    return out;
}

}  // namespace syncteam
