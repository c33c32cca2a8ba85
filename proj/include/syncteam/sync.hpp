#pragma once

#include <optional>
#include <vector>

#include "syncteam/model.hpp"

namespace syncteam {

class EmptyEventType : public Error {
public:
    using Error::Error;
};
class NoCommonBasis : public Error {
public:
    using Error::Error;
};
class IsolatedVertex : public Error {
public:
    using Error::Error;
};
class DegenerateGroup : public Error {
public:
    using Error::Error;
};
class UnknownAgent : public Error {
public:
    using Error::Error;
};

/// Multi-type synchronization index of one agent pair.
struct PairIndex {
    AgentId a;
    AgentId b;
    double q = 0.0;           // in [0,1], symmetric in (a,b)
    int clamped_kinds = 0;    // per-type indices that had to be clamped to 1
};

/// Per-agent individual index and connectivity, plus the group index they
/// combine into.
struct IndexReport {
    struct Entry {
        AgentId agent;
        double individual = 0.0;    // mean outgoing edge weight
        double connectivity = 0.0;  // out-degree / (H-1)
    };
    std::vector<Entry> agents;
    double group = 0.0;

    const Entry* find(AgentId a) const;
};

/// Count of kind-e events of x trailing kind-e events of y within tau:
/// a pair contributes 1 when 0 < t_x - t_y < tau and 1/2 when the times are
/// equal. Clap and Turn count as the same kind. Rejects early event types.
double directed_count(const EventSeries& x, const EventSeries& y, EventType e, double tau);

/// Single-type synchronization: (c(x|y) + c(y|x)) / sqrt(m_x * m_y), clamped
/// to 1 (the raw ratio can exceed 1 when events crowd within tau). Throws
/// EmptyEventType when either series has no event of the kind.
double event_sync(const EventSeries& x, const EventSeries& y, EventType e, double tau);

/// Multi-type pair index: the per-kind indices averaged with weights
/// m_x(e) + m_y(e) over every kind present in either series. A kind present
/// in only one series contributes 0 with its full weight. Throws
/// NoCommonBasis when both series have no regular events at all.
PairIndex pair_sync_index(const EventSeries& x, const EventSeries& y, const SyncParams& p);

/// Edge layout of the group topology graph. FullyConnected emits both
/// directed edges for every pair. RobotFollows keeps all human<->human and
/// human->robot edges but a single robot->msp outgoing edge, mirroring the
/// robot following one person under SIA.
struct EdgePolicy {
    enum class Kind { FullyConnected, RobotFollows } kind = Kind::FullyConnected;
    AgentId msp;  // meaningful for RobotFollows

    static EdgePolicy fully_connected() { return {Kind::FullyConnected, {}}; }
    static EdgePolicy robot_follows(AgentId msp) { return {Kind::RobotFollows, msp}; }
};

/// Pairwise indices over one iteration's slice, assembled into the GTG under
/// the given edge policy. Throws UnknownAgent if the policy names an agent
/// missing from the recording.
GroupTopologyGraph build_gtg(const SessionRecording& rec, int iteration,
                             const EdgePolicy& policy, const SyncParams& p);

/// Mean weight of the agent's outgoing edges. Throws IsolatedVertex on
/// out-degree zero and UnknownAgent if absent from the graph.
double individual_index(const GroupTopologyGraph& g, AgentId a);

/// Out-degree over H-1. Throws DegenerateGroup when the graph has fewer than
/// two vertices.
double connectivity(const GroupTopologyGraph& g, AgentId a);

/// Group synchronization index: mean over agents of individual * connectivity,
/// with the per-agent terms reported alongside.
IndexReport group_index(const GroupTopologyGraph& g);

/// All unordered pair indices of one iteration slice. Pairs where both slices
/// are empty get q = 0 rather than an error so whole-session tables stay
/// total. Results are ordered by (a.id, b.id).
std::vector<PairIndex> pair_indices_for_iteration(const SessionRecording& rec, int iteration,
                                                  const SyncParams& p);

/// Batch kernel behind the per-iteration tables: pair indices for every
/// iteration of the recording. `parallel` switches the OpenMP path on; the
/// serial path is the reference and both produce bit-identical results.
std::vector<std::vector<PairIndex>> pair_indices_all_iterations(const SessionRecording& rec,
                                                                const SyncParams& p,
                                                                bool parallel);

/// GTG assembled from precomputed pair indices instead of raw series.
GroupTopologyGraph assemble_gtg(const std::vector<AgentId>& vertices,
                                const std::vector<PairIndex>& pairs, const EdgePolicy& policy);

}  // namespace syncteam
