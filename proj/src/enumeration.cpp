#include "hex633/enumeration.hpp"

#include <algorithm>

namespace hex633 {

std::vector<LatticePoint> enumerate_centers(std::int64_t T) {
    std::vector<LatticePoint> out;
    // det = 1 with trace > 0 forces d1, d2 >= 1, so d1*d2 = 1 + norm(c).
    for (std::int64_t d1 = 1; d1 + 1 <= T; ++d1) {
        for (std::int64_t d2 = 1; d1 + d2 <= T; ++d2) {
            std::int64_t n = checked_sub(checked_mul(d1, d2, "enumerate_centers"), 1,
                                         "enumerate_centers");
            if (n < 0) continue;
            for (const Eisenstein& c : elements_of_norm(n)) {
                out.push_back({d1, d2, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePoint> enumerate_null(std::int64_t T, bool primitive_only) {
    std::vector<LatticePoint> out;
    for (std::int64_t d1 = 0; d1 <= T; ++d1) {
        for (std::int64_t d2 = (d1 == 0 ? 1 : 0); d1 + d2 <= T; ++d2) {
            std::int64_t n = checked_mul(d1, d2, "enumerate_null");
            for (const Eisenstein& c : elements_of_norm(n)) {
                LatticePoint A{d1, d2, c};
                if (primitive_only && !is_primitive(A)) continue;
                out.push_back(A);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::int64_t, std::int64_t> count_by_trace(std::int64_t T) {
    std::map<std::int64_t, std::int64_t> hist;
    for (const LatticePoint& A : enumerate_centers(T)) hist[trace(A)]++;
    return hist;
}

}  // namespace hex633
