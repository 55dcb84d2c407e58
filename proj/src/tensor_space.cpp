#include "igs/tensor_space.hpp"

namespace igs {

std::vector<Rational> first_span_monomials(const KnotVector& kv, std::size_t i) {
    const int p = kv.degree();
    const Rational s1 = kv.first_interior_or_one();
    const std::size_t n = static_cast<std::size_t>(p) + 1;
    // Interpolation nodes strictly inside [0, s1).
    RationalMatrix vand(n, n);
    std::vector<Rational> values(n);
    for (std::size_t r = 0; r < n; ++r) {
        const Rational x = s1 * Rational(static_cast<int>(r), static_cast<int>(n + 1));
        Rational pw = 1;
        for (std::size_t c = 0; c < n; ++c) {
            vand(r, c) = pw;
            pw *= x;
        }
        values[r] = eval_bspline(kv, i, x);
    }
    return solve(vand, values);
}

Rational bspline_derivative_at_zero(const KnotVector& kv, std::size_t i, int order) {
    if (order > kv.degree()) return 0;
    const std::vector<Rational> mono = first_span_monomials(kv, i);
    return mono[order] * Rational(factorial(order));
}

}  // namespace igs
