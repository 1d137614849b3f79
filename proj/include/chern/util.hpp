#ifndef CHERN_UTIL_HPP
#define CHERN_UTIL_HPP

#include <cstdint>
#include <string>

namespace chern {

// splitmix64: tiny, portable, and completely determined by the seed, which is
// what the reproducibility contract needs (results depend on the seed only,
// never on platform RNG or thread timing)
class rng {
public:
    explicit rng(uint64_t seed) : s_(seed) {}

    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, bound); bias is irrelevant here
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

private:
    uint64_t s_;
};

// derive a sub-seed from (seed, purpose) so independent searches never share
// or reorder a stream
inline uint64_t mix_seed(uint64_t seed, const std::string& tag) {
    uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    rng r(h);
    return r.next();
}

} // namespace chern

#endif
