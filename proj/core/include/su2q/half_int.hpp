#pragma once

#include <array>
#include <cstdint>
#include <vector>

// Half-integer bookkeeping. The quantum number l and the row/column labels
// m, n of a representation t^l are half-integers; everywhere in this library
// they are carried as doubled integers (two_l = 2l, two_m = 2m, ...) so that
// index arithmetic stays exact. A (2l+1)x(2l+1) matrix is addressed by
//   row i = (two_m + two_l) / 2,   i.e.  m = i - l,
// and the same for columns with n. two_m runs over -two_l..two_l in steps
// of 2, so two_m and two_l always have the same parity.

namespace su2q {

/// Dimension 2l+1 of the representation with quantum number l = two_l/2.
constexpr int dim_of(int two_l) { return two_l + 1; }

/// Row/column index of the label m = two_m/2 inside t^l, i = m + l.
constexpr int index_of(int two_m, int two_l) { return (two_m + two_l) / 2; }

/// Doubled label two_m of row/column index i, m = i - l.
constexpr int label_of(int index, int two_l) { return 2 * index - two_l; }

constexpr double half(int twice) { return 0.5 * static_cast<double>(twice); }

/// Exponent triple for the difference operators and the q monomials,
/// ordered as (plus, minus, zero): q_alpha = q_+^plus q_-^minus q_0^zero and
/// D^alpha = D_+^plus D_-^minus D_0^zero. The same triple type indexes the
/// ordered derivative monomials d_0^zero d_+^plus d_-^minus (the apply order
/// is fixed by the consuming function, not by this struct).
struct Exponent3 {
    int plus = 0;
    int minus = 0;
    int zero = 0;

    constexpr int order() const { return plus + minus + zero; }
    constexpr bool operator==(const Exponent3&) const = default;
};

inline double factorial_of(const Exponent3& a) {
    auto fact = [](int k) {
        double r = 1.0;
        for (int i = 2; i <= k; ++i) r *= i;
        return r;
    };
    return fact(a.plus) * fact(a.minus) * fact(a.zero);
}

/// All exponent triples with order() <= max_order, in a fixed deterministic
/// order (by total order, then lexicographic in (plus, minus, zero)).
std::vector<Exponent3> exponents_up_to(int max_order);

}  // namespace su2q
