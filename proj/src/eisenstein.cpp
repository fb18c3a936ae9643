#include "hex633/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hex633 {

const std::array<Eisenstein, 6>& units() {
    static const std::array<Eisenstein, 6> u = {{
        {-1, -1},  // -(1+w)
        {-1, 0},   // -1
        {0, -1},   // -w
        {0, 1},    // w
        {1, 0},    // 1
        {1, 1},    // 1+w
    }};
    return u;
}

std::vector<Eisenstein> elements_of_norm(std::int64_t n) {
    if (n < 0) throw std::domain_error("elements_of_norm: negative norm");
    std::vector<Eisenstein> out;
    if (n == 0) {
        out.push_back({0, 0});
        return out;
    }
    // a^2 - ab + b^2 >= (3/4) max(a^2, b^2), so |a|, |b| <= 2*sqrt(n/3) + 1.
    std::int64_t bound =
        static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(n) / 3.0))) + 1;
    for (std::int64_t a = -bound; a <= bound; ++a) {
        for (std::int64_t b = -bound; b <= bound; ++b) {
            Eisenstein e{a, b};
            if (norm(e) == n) out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Eisenstein& x) {
    std::string s = std::to_string(x.a);
    if (x.b >= 0)
        s += "+" + std::to_string(x.b) + "w";
    else
        s += std::to_string(x.b) + "w";
    return s;
}

}  // namespace hex633
