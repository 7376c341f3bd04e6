#include "aras/sim/kernel.hpp"

#include <algorithm>

#include "aras/errors.hpp"

namespace aras::sim {

std::string_view to_string(EventKind k) {
    switch (k) {
        case EventKind::PacketArrival: return "packet-arrival";
        case EventKind::Timer: return "timer";
        case EventKind::Probe: return "probe";
        default: return "traffic-emit";
    }
}

std::uint64_t Kernel::schedule(SimTime time, EventKind kind, std::string target,
                               nlohmann::json data, Action action) {
    if (time < clock_)
        throw PastTimeError("schedule at t=" + std::to_string(time.us) + "us before clock t=" +
                            std::to_string(clock_.us) + "us");
    std::uint64_t id = next_id_++;
    heap_.push_back(Item{Event{id, time, std::move(target), kind, std::move(data)},
                         std::move(action)});
    std::push_heap(heap_.begin(), heap_.end(), Later{});
    return id;
}

KernelStats Kernel::run(SimTime until) {
    while (!heap_.empty() && heap_.front().event.time <= until) {
        std::pop_heap(heap_.begin(), heap_.end(), Later{});
        Item item = std::move(heap_.back());
        heap_.pop_back();
        if (item.event.time > clock_) {
            SimTime previous = clock_;
            clock_ = item.event.time;
            if (advance_hook_) advance_hook_(previous, clock_);
        }
        item.action(*this, item.event);
        ++executed_;
        if (observer_) observer_(item.event);
    }
    return KernelStats{executed_, clock_};
}

}  // namespace aras::sim
