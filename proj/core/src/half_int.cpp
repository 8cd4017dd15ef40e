#include "su2q/half_int.hpp"

namespace su2q {

std::vector<Exponent3> exponents_up_to(int max_order) {
    std::vector<Exponent3> out;
    for (int total = 0; total <= max_order; ++total) {
        for (int p = 0; p <= total; ++p) {
            for (int m = 0; m <= total - p; ++m) {
                out.push_back(Exponent3{p, m, total - p - m});
            }
        }
    }
    return out;
}

}  // namespace su2q
