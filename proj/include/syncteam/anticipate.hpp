#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "syncteam/model.hpp"
#include "syncteam/sync.hpp"

namespace syncteam {

class EmptyGroup : public Error {
public:
    using Error::Error;
};
class EmptyIteration : public Error {
public:
    using Error::Error;
};

enum class CommandKind : std::uint8_t { MoveForward, MoveBackward, Stop, Turn };

const char* command_token(CommandKind k);

/// Command the anticipation layer sends toward the robot.
struct RobotCommand {
    CommandKind kind = CommandKind::Stop;
    double issue_t = 0.0;  // session clock, seconds
};

/// Movement command that realizes a regular event kind. Claps become turns
/// because the robot cannot clap.
CommandKind command_for(EventType regular);

/// Same-kind events from different agents grouped within cluster_epsilon.
struct EventCluster {
    EventType event = EventType::StartForward;  // representative member type
    std::vector<double> member_times;           // ascending
    std::vector<AgentId> member_agents;         // parallel to member_times
    double mean_t = 0.0;
};

/// Greedy chronological clustering per event kind over one iteration's
/// non-early events: an event joins the open cluster when it lies within
/// epsilon of the cluster's earliest member and the agent is not already
/// represented; otherwise it opens a new cluster. Returns clusters of all
/// kinds ordered by mean time.
std::vector<EventCluster> cluster_events(std::span<const EventSeries> series, int iteration,
                                         double epsilon);

/// The human with the highest individual index; ties break toward the lowest
/// agent id. Throws EmptyGroup when `humans` is empty or none is covered by
/// the report.
AgentId most_synchronous_person(const IndexReport& report, std::span<const AgentId> humans);

/// One entry of the schedule the robot mirrors during the next iteration.
struct ScheduleEntry {
    EventType event = EventType::StartForward;  // regular kind
    double rel_t = 0.0;                         // seconds from iteration start
};

/// SIA controller state for one iteration: who the most synchronous person
/// is, the timings they produced last iteration, and the early events
/// recently received from them.
struct SiaState {
    AgentId current_msp;
    std::vector<ScheduleEntry> msp_schedule;  // sorted by rel_t
    std::vector<bool> consumed;               // parallel to msp_schedule

    struct PendingEarly {
        EventType event = EventType::StartForward;  // early variant
        double rel_t = 0.0;
    };
    std::vector<PendingEarly> pending_early;
};

/// Closes out `finished_iter`: builds the GTG over that iteration (robot
/// edges follow prev_msp when given, mirroring the analysis convention),
/// selects the MSP among the humans, and freezes their iteration-relative
/// event timings as the schedule for the iteration about to start.
SiaState sia_begin_iteration(const SessionRecording& rec, int finished_iter,
                             const SyncParams& p,
                             std::optional<AgentId> prev_msp = std::nullopt);

/// Feeds one live event into the SIA state. `rel_now` is seconds from the
/// start of the running iteration. Emits the mapped command when the event
/// is an early variant from the MSP, the matching schedule entry lies within
/// early_window_delta, and enough early events have accumulated; otherwise
/// it only updates the pending buffer. The command's issue_t is rel_now.
std::optional<RobotCommand> sia_on_event(SiaState& st, const TimedEvent& ev, double rel_now,
                                         const SyncParams& p);

/// ECA controller state: the command schedule predicted for an iteration.
struct EcaState {
    std::vector<std::pair<CommandKind, double>> schedule;  // (kind, rel seconds), sorted
    std::vector<bool> emitted;                             // parallel to schedule
};

/// Schedules next-iteration commands at the mean times of the previous
/// iteration's clusters. Cluster times are absolute; iteration_start rebases
/// them. Throws EmptyIteration when there are no clusters.
EcaState eca_predict(std::span<const EventCluster> clusters, double iteration_start);

/// Emits every not-yet-emitted command whose time has arrived, in schedule
/// order, stamped with rel_now.
std::vector<RobotCommand> eca_tick(EcaState& st, double rel_now);

/// Driver-facing wrapper shared by both anticipation methods. The simulator
/// (or a live server) owns one instance and serializes all calls. Commands
/// carry absolute session times. Drivers must call advance(t) at every time
/// returned by next_due() no later than t, which the simulator guarantees by
/// folding due times into its event agenda.
class Controller {
public:
    virtual ~Controller() = default;

    /// Announce that `iteration` is starting. `history` holds everything
    /// recorded so far, including the finished iterations' robot events.
    virtual void begin_iteration(int iteration, const SessionRecording& history,
                                 const SyncParams& p) = 0;

    virtual std::optional<RobotCommand> on_event(const TimedEvent& ev) = 0;

    virtual std::optional<double> next_due() const = 0;

    /// Emit every time-driven command due at or before `now`.
    virtual std::vector<RobotCommand> advance(double now) = 0;

    virtual const char* name() const = 0;

    /// MSP chosen when each iteration began (SIA only; empty otherwise).
    virtual std::vector<std::optional<AgentId>> msp_trace() const { return {}; }
};

std::unique_ptr<Controller> make_sia_controller();
std::unique_ptr<Controller> make_eca_controller();

}  // namespace syncteam
