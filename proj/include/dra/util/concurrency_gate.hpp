#pragma once

#include <condition_variable>
#include <mutex>

namespace dra {

/// Caps the number of requests in flight at once. Limit is fixed at
/// construction; acquire blocks until a slot frees up.
class ConcurrencyGate {
public:
    explicit ConcurrencyGate(int limit) : available_(limit > 0 ? limit : 1) {}

    class Slot {
    public:
        explicit Slot(ConcurrencyGate& gate) : gate_(gate) { gate_.acquire(); }
        ~Slot() { gate_.release(); }
        Slot(const Slot&) = delete;
        Slot& operator=(const Slot&) = delete;

    private:
        ConcurrencyGate& gate_;
    };

private:
    void acquire() {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [&] { return available_ > 0; });
        --available_;
    }

    void release() {
        {
            std::lock_guard lock(mutex_);
            ++available_;
        }
        cv_.notify_one();
    }

    std::mutex mutex_;
    std::condition_variable cv_;
    int available_;
};

} // namespace dra
