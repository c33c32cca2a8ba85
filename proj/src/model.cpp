#include "syncteam/model.hpp"

#include <algorithm>

namespace syncteam {

bool is_early(EventType e) {
    switch (e) {
        case EventType::EarlyStartForward:
        case EventType::EarlyStopForward:
        case EventType::EarlyStartBackward:
        case EventType::EarlyStopBackward:
            return true;
        default:
            return false;
    }
}

bool is_motion(EventType e) {
    switch (e) {
        case EventType::StartForward:
        case EventType::StopForward:
        case EventType::StartBackward:
        case EventType::StopBackward:
            return true;
        default:
            return false;
    }
}

EventType early_variant_of(EventType e) {
    switch (e) {
        case EventType::StartForward: return EventType::EarlyStartForward;
        case EventType::StopForward: return EventType::EarlyStopForward;
        case EventType::StartBackward: return EventType::EarlyStartBackward;
        case EventType::StopBackward: return EventType::EarlyStopBackward;
        default:
            throw Error("early_variant_of: no early variant for " +
                        std::string(event_token(e)));
    }
}

EventType regular_variant_of(EventType e) {
    switch (e) {
        case EventType::EarlyStartForward: return EventType::StartForward;
        case EventType::EarlyStopForward: return EventType::StopForward;
        case EventType::EarlyStartBackward: return EventType::StartBackward;
        case EventType::EarlyStopBackward: return EventType::StopBackward;
        default:
            throw Error("regular_variant_of: not an early event: " +
                        std::string(event_token(e)));
    }
}

int kind_key(EventType e) {
    switch (e) {
        case EventType::StartForward: return 0;
        case EventType::StopForward: return 1;
        case EventType::StartBackward: return 2;
        case EventType::StopBackward: return 3;
        case EventType::Clap:
        case EventType::Turn:
            return 4;  // a robot turn counts as the humans' clap
        case EventType::EarlyStartForward: return 5;
        case EventType::EarlyStopForward: return 6;
        case EventType::EarlyStartBackward: return 7;
        case EventType::EarlyStopBackward: return 8;
    }
    return -1;
}

bool same_kind(EventType a, EventType b) { return kind_key(a) == kind_key(b); }

const char* event_token(EventType e) {
    switch (e) {
        case EventType::StartForward: return "start_forward";
        case EventType::StopForward: return "stop_forward";
        case EventType::StartBackward: return "start_backward";
        case EventType::StopBackward: return "stop_backward";
        case EventType::Clap: return "clap";
        case EventType::Turn: return "turn";
        case EventType::EarlyStartForward: return "early_start_forward";
        case EventType::EarlyStopForward: return "early_stop_forward";
        case EventType::EarlyStartBackward: return "early_start_backward";
        case EventType::EarlyStopBackward: return "early_stop_backward";
    }
    return "?";
}

std::optional<EventType> event_from_token(std::string_view tok) {
    static const std::pair<std::string_view, EventType> table[] = {
        {"start_forward", EventType::StartForward},
        {"stop_forward", EventType::StopForward},
        {"start_backward", EventType::StartBackward},
        {"stop_backward", EventType::StopBackward},
        {"clap", EventType::Clap},
        {"turn", EventType::Turn},
        {"early_start_forward", EventType::EarlyStartForward},
        {"early_stop_forward", EventType::EarlyStopForward},
        {"early_start_backward", EventType::EarlyStartBackward},
        {"early_stop_backward", EventType::EarlyStopBackward},
    };
    for (const auto& [name, value] : table) {
        if (name == tok) return value;
    }
    return std::nullopt;
}

const char* agent_kind_token(AgentKind k) {
    return k == AgentKind::Robot ? "robot" : "human";
}

std::optional<AgentKind> agent_kind_from_token(std::string_view tok) {
    if (tok == "human") return AgentKind::Human;
    if (tok == "robot") return AgentKind::Robot;
    return std::nullopt;
}

const char* method_token(MethodLabel m) {
    switch (m) {
        case MethodLabel::SIA: return "sia";
        case MethodLabel::ECA: return "eca";
        case MethodLabel::HumansOnly: return "humans_only";
    }
    return "?";
}

std::optional<MethodLabel> method_from_token(std::string_view tok) {
    if (tok == "sia") return MethodLabel::SIA;
    if (tok == "eca") return MethodLabel::ECA;
    if (tok == "humans_only") return MethodLabel::HumansOnly;
    return std::nullopt;
}

std::vector<double> EventSeries::times_of_kind(int kind) const {
    std::vector<double> out;
    for (const auto& ev : events) {
        if (!is_early(ev.event) && kind_key(ev.event) == kind) out.push_back(ev.t);
    }
    return out;  // already sorted: events are time-ordered
}

int EventSeries::count_of_kind(int kind) const {
    int n = 0;
    for (const auto& ev : events) {
        if (!is_early(ev.event) && kind_key(ev.event) == kind) ++n;
    }
    return n;
}

bool EventSeries::empty_regular() const {
    return std::none_of(events.begin(), events.end(),
                        [](const TimedEvent& ev) { return !is_early(ev.event); });
}

void SyncParams::check() const {
    if (!(tau > 0.0)) throw Error("SyncParams: tau must be positive");
    if (!(cluster_epsilon > 0.0)) throw Error("SyncParams: cluster_epsilon must be positive");
    if (!(early_window_delta > 0.0))
        throw Error("SyncParams: early_window_delta must be positive");
    if (early_count_threshold < 1)
        throw Error("SyncParams: early_count_threshold must be >= 1");
}

bool GroupTopologyGraph::has_vertex(AgentId a) const {
    return std::find(vertices.begin(), vertices.end(), a) != vertices.end();
}

std::vector<const GtgEdge*> GroupTopologyGraph::out_edges(AgentId a) const {
    std::vector<const GtgEdge*> out;
    for (const auto& e : edges) {
        if (e.from == a) out.push_back(&e);
    }
    return out;
}

const EventSeries* SessionRecording::find_series(AgentId a) const {
    for (const auto& s : series) {
        if (s.agent == a) return &s;
    }
    return nullptr;
}

std::vector<AgentId> SessionRecording::agents() const {
    std::vector<AgentId> out;
    out.reserve(series.size());
    for (const auto& s : series) out.push_back(s.agent);
    return out;
}

std::vector<AgentId> SessionRecording::humans() const {
    std::vector<AgentId> out;
    for (const auto& s : series) {
        if (s.agent.kind == AgentKind::Human) out.push_back(s.agent);
    }
    return out;
}

std::optional<AgentId> SessionRecording::robot() const {
    for (const auto& s : series) {
        if (s.agent.kind == AgentKind::Robot) return s.agent;
    }
    return std::nullopt;
}

std::optional<int> iteration_of(const std::vector<IterationWindow>& windows, double t) {
    for (std::size_t i = 0; i < windows.size(); ++i) {
        if (t >= windows[i].start_t && t < windows[i].end_t) return static_cast<int>(i);
    }
    return std::nullopt;
}

std::vector<Violation> validate_series(const EventSeries& s, const SyncParams& p) {
    std::vector<Violation> out;
    // Collect sorted times per kind, then flag every pair with gap <= tau.
    for (int kind = 0; kind < kKindCount; ++kind) {
        std::vector<std::pair<double, EventType>> ts;
        for (const auto& ev : s.events) {
            if (!is_early(ev.event) && kind_key(ev.event) == kind)
                ts.emplace_back(ev.t, ev.event);
        }
        for (std::size_t i = 0; i < ts.size(); ++i) {
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                if (ts[j].first - ts[i].first <= p.tau) {
                    out.push_back({s.agent, ts[i].second, ts[i].first, ts[j].first});
                } else {
                    break;  // sorted: later events are farther away
                }
            }
        }
    }
    return out;
}

EventSeries slice_by_iteration(const EventSeries& s, int iteration) {
    EventSeries out;
    out.agent = s.agent;
    for (const auto& ev : s.events) {
        if (ev.iteration == iteration) out.events.push_back(ev);
    }
    return out;
}

SessionRecording slice_by_iteration(const SessionRecording& rec, int iteration) {
    SessionRecording out;
    out.iterations = rec.iterations;
    out.method = rec.method;
    out.metadata = rec.metadata;
    out.series.reserve(rec.series.size());
    for (const auto& s : rec.series) out.series.push_back(slice_by_iteration(s, iteration));
    return out;
}

}  // namespace syncteam
