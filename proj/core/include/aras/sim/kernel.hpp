#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aras/sim/time.hpp"

namespace aras::sim {

enum class EventKind { PacketArrival, Timer, Probe, TrafficEmit };

std::string_view to_string(EventKind k);

// One scheduled occurrence. `data` is the loggable payload; handlers may
// append outcome fields to it before the event is observed.
struct Event {
    std::uint64_t id = 0;
    SimTime time;
    std::string target;  // node id, empty for kernel-level events
    EventKind kind = EventKind::Timer;
    nlohmann::json data;
};

struct KernelStats {
    std::uint64_t events_executed = 0;
    SimTime clock;
};

// Deterministic discrete-event engine. Events execute in (time, id) order;
// ids are assigned in schedule order, which makes equal-time execution FIFO.
class Kernel {
public:
    using Action = std::function<void(Kernel&, Event&)>;
    using Observer = std::function<void(const Event&)>;
    using AdvanceHook = std::function<void(SimTime previous, SimTime next)>;

    // Throws PastTimeError if time < now().
    std::uint64_t schedule(SimTime time, EventKind kind, std::string target,
                           nlohmann::json data, Action action);

    // Executes every pending event with time <= until. Handlers may schedule
    // further events; those are executed too while they fall inside the
    // horizon. The clock ends at the last executed event's time; an empty
    // run leaves it unchanged.
    KernelStats run(SimTime until = SimTime::max());

    SimTime now() const noexcept { return clock_; }
    std::uint64_t events_executed() const noexcept { return executed_; }
    std::size_t pending() const noexcept { return heap_.size(); }

    // Called after each event's action has run.
    void set_observer(Observer fn) { observer_ = std::move(fn); }
    // Called whenever the clock moves strictly forward, before the first
    // event at the new time executes.
    void set_advance_hook(AdvanceHook fn) { advance_hook_ = std::move(fn); }

private:
    struct Item {
        Event event;
        Action action;
    };
    struct Later {
        bool operator()(const Item& a, const Item& b) const {
            if (a.event.time != b.event.time) return a.event.time > b.event.time;
            return a.event.id > b.event.id;
        }
    };

    // Binary heap via std::push_heap/std::pop_heap so items move out cleanly.
    std::vector<Item> heap_;
    SimTime clock_;
    std::uint64_t next_id_ = 0;
    std::uint64_t executed_ = 0;
    Observer observer_;
    AdvanceHook advance_hook_;
};

}  // namespace aras::sim
