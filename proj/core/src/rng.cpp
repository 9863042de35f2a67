#include "fae/rng.hpp"

namespace fae {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_key,
                          std::uint64_t invocation) noexcept {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ stream_key);
    return splitmix64(h ^ invocation);
}

std::mt19937_64 RngStream::next_engine() noexcept {
    return std::mt19937_64{derive_seed(master_seed_, stream_key_, invocation_++)};
}

} // namespace fae
