#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace syncteam {

/// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Task-level events observed during the dance. The four motion kinds have
/// `early` precursors (upper-body onset before the full movement); early
/// variants are anticipation triggers only and never enter any index or
/// metric. Turn is the robot-side equivalent of Clap.
enum class EventType : std::uint8_t {
    StartForward,
    StopForward,
    StartBackward,
    StopBackward,
    Clap,
    Turn,
    EarlyStartForward,
    EarlyStopForward,
    EarlyStartBackward,
    EarlyStopBackward,
};

inline constexpr int kEventTypeCount = 10;

bool is_early(EventType e);
bool is_motion(EventType e);

/// Early precursor of a regular motion event. Throws Error for non-motion kinds.
EventType early_variant_of(EventType e);

/// Regular event announced by an early variant. Throws Error for non-early kinds.
EventType regular_variant_of(EventType e);

/// Equivalence class used by every synchronization and timing computation.
/// Clap and Turn share a class; each other type is its own class.
int kind_key(EventType e);
bool same_kind(EventType a, EventType b);

/// Number of distinct kind classes (early variants included).
inline constexpr int kKindCount = 9;

const char* event_token(EventType e);
std::optional<EventType> event_from_token(std::string_view tok);

enum class AgentKind : std::uint8_t { Human, Robot };

const char* agent_kind_token(AgentKind k);
std::optional<AgentKind> agent_kind_from_token(std::string_view tok);

/// Identifies one agent of a session. Ids are unique within a session and
/// at most one agent is a Robot. Ordering and equality go by id.
struct AgentId {
    int id = 0;
    AgentKind kind = AgentKind::Human;

    friend bool operator==(const AgentId& a, const AgentId& b) { return a.id == b.id; }
    friend std::strong_ordering operator<=>(const AgentId& a, const AgentId& b) {
        return a.id <=> b.id;
    }

    static AgentId human(int id) { return {id, AgentKind::Human}; }
    static AgentId robot(int id) { return {id, AgentKind::Robot}; }
};

/// One observed event on the shared session clock (seconds, session-relative).
struct TimedEvent {
    AgentId agent;
    EventType event = EventType::StartForward;
    double t = 0.0;
    int iteration = 0;
    /// Unknown log fields carried through serialization untouched.
    std::vector<std::pair<std::string, std::string>> extras;
};

/// Time-ordered event stream of a single agent.
struct EventSeries {
    AgentId agent;
    std::vector<TimedEvent> events;  // non-decreasing t, all with this agent

    /// Sorted times of the non-early events in the given kind class.
    std::vector<double> times_of_kind(int kind) const;

    /// Count of non-early events in the given kind class.
    int count_of_kind(int kind) const;

    bool empty_regular() const;
};

/// Parameters of the synchronization and anticipation machinery.
struct SyncParams {
    double tau = 0.25;               // synchrony lag window, seconds
    double cluster_epsilon = 0.5;    // event-cluster width, seconds
    double early_window_delta = 0.5; // early-trigger window around a scheduled time
    int early_count_threshold = 1;   // early events needed to fire a command

    void check() const;  // throws Error on non-positive values
};

struct GtgEdge {
    AgentId from;
    AgentId to;
    double weight = 0.0;  // pair synchronization index, in [0,1]
};

/// Directed weighted graph of pairwise synchronization indices. Weights are
/// symmetric whenever both directions exist; edge presence may be asymmetric
/// (the SIA robot keeps a single outgoing edge).
struct GroupTopologyGraph {
    std::vector<AgentId> vertices;
    std::vector<GtgEdge> edges;

    bool has_vertex(AgentId a) const;
    std::vector<const GtgEdge*> out_edges(AgentId a) const;
};

enum class MethodLabel : std::uint8_t { SIA, ECA, HumansOnly };

const char* method_token(MethodLabel m);
std::optional<MethodLabel> method_from_token(std::string_view tok);

struct IterationWindow {
    double start_t = 0.0;
    double end_t = 0.0;
};

/// A full multi-agent session: one series per agent, iteration boundaries,
/// and the anticipation method that produced it.
struct SessionRecording {
    std::vector<EventSeries> series;  // sorted by agent id
    std::vector<IterationWindow> iterations;
    MethodLabel method = MethodLabel::HumansOnly;
    std::map<std::string, std::string> metadata;

    const EventSeries* find_series(AgentId a) const;
    std::vector<AgentId> agents() const;
    std::vector<AgentId> humans() const;
    std::optional<AgentId> robot() const;
};

/// Iteration index owning time t under half-open windows, if any.
std::optional<int> iteration_of(const std::vector<IterationWindow>& windows, double t);

/// Diagnostic raised by validate_series: two same-kind events closer than tau.
struct Violation {
    AgentId agent;
    EventType event = EventType::StartForward;
    double t_first = 0.0;
    double t_second = 0.0;
};

/// Flags every pair of same-kind non-early events in s separated by <= tau.
/// Such spacing is the condition under which the raw per-type index can
/// exceed 1; an empty result plus the index clamp keeps everything in [0,1].
std::vector<Violation> validate_series(const EventSeries& s, const SyncParams& p);

/// Events of s with the given iteration tag, as a series of the same agent.
EventSeries slice_by_iteration(const EventSeries& s, int iteration);

/// Per-agent slices of one iteration; windows/metadata are carried over.
SessionRecording slice_by_iteration(const SessionRecording& rec, int iteration);

}  // namespace syncteam
