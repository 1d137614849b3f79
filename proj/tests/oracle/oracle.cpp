#include "oracle/oracle.hpp"

namespace chern::oracle {

std::vector<std::vector<uint32_t>> exponents_of_degree(size_t n, uint32_t t) {
    std::vector<std::vector<uint32_t>> out;
    if (n == 0) {
        if (t == 0) out.push_back({});
        return out;
    }
    std::vector<uint32_t> cur(n, 0);
    // odometer over the first n-1 slots, last slot absorbs the remainder
    auto emit = [&](auto&& self, size_t i, uint32_t left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (uint32_t e = 0; e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
    };
    emit(emit, 0, t);
    return out;
}

} // namespace chern::oracle
