#pragma once

#include <cstdint>
#include <random>

namespace fae {

/// SplitMix64 finalizer. Used only to decorrelate seeds, never as a generator.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for the (stream, invocation) pair under a master seed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_key,
                          std::uint64_t invocation) noexcept;

/// Deterministic family of substreams owned by one trial.
///
/// Every call to next_engine() returns a fresh engine seeded from
/// (master seed, stream key, invocation index), so the draws made by one
/// invocation never depend on how many numbers earlier invocations consumed.
/// Trials in a sweep are keyed by their logical index, not by execution order.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_key) noexcept
        : master_seed_(master_seed), stream_key_(stream_key) {}

    std::mt19937_64 next_engine() noexcept;

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_key() const noexcept { return stream_key_; }
    std::uint64_t invocations() const noexcept { return invocation_; }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_key_;
    std::uint64_t invocation_ = 0;
};

} // namespace fae
