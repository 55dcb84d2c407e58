#include "igs/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace igs {

RationalMatrix degree_elevation_matrix(int i, int q) {
    if (i < 0 || i > q) throw std::invalid_argument("degree elevation requires 0 <= i <= q");
    RationalMatrix e(i + 1, q + 1);
    for (int l = 0; l <= i; ++l)
        for (int j = 0; j <= q; ++j) {
            const Integer num = binomial(i, l) * binomial(q - i, j - l);
            if (num != 0) e(l, j) = Rational(num, binomial(q, j));
        }
    return e;
}

RationalMatrix single_knot_insertion_matrix(const KnotVector& kv, const Rational& new_knot) {
    if (new_knot <= 0 || new_knot >= 1)
        throw std::invalid_argument("inserted knot must lie in (0,1)");
    const int p = kv.degree();
    const std::vector<Rational>& u = kv.knots();
    const std::size_t n = kv.basis_count();

    // Span index: last l with u[l] <= x (and u[l+1] > u[l] reachable).
    std::size_t span = 0;
    for (std::size_t l = 0; l + 1 < u.size(); ++l)
        if (u[l] <= new_knot) span = l;

    auto alpha = [&](std::size_t idx) -> Rational {
        if (idx + static_cast<std::size_t>(p) <= span) return 1;
        if (idx > span) return 0;
        return (new_knot - u[idx]) / (u[idx + p] - u[idx]);
    };

    RationalMatrix k(n, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        k(j, j) = alpha(j);
        k(j, j + 1) = Rational(1) - alpha(j + 1);
    }
    return k;
}

KnotVector refined_knot_vector(const KnotVector& kv_from,
                               const std::vector<Rational>& target_interior) {
    return KnotVector::from_interior(kv_from.degree(), target_interior);
}

RationalMatrix knot_insertion_matrix(const KnotVector& kv_from,
                                     const std::vector<Rational>& target_interior) {
    if (!std::is_sorted(target_interior.begin(), target_interior.end()))
        throw std::invalid_argument("target interior knots must be sorted ascending");

    // Multiset difference: knots to insert, ascending.
    std::vector<Rational> source = kv_from.interior_knots();
    std::vector<Rational> to_insert;
    std::size_t si = 0;
    for (const Rational& t : target_interior) {
        if (si < source.size() && source[si] == t)
            ++si;
        else
            to_insert.push_back(t);
    }
    if (si != source.size())
        throw std::invalid_argument("target interior knots must contain the source knots");

    RationalMatrix acc = RationalMatrix::identity(kv_from.basis_count());
    KnotVector current = kv_from;
    for (const Rational& t : to_insert) {
        acc = acc * single_knot_insertion_matrix(current, t);
        std::vector<Rational> interior = current.interior_knots();
        interior.insert(std::upper_bound(interior.begin(), interior.end(), t), t);
        current = KnotVector::from_interior(current.degree(), std::move(interior));
    }
    return acc;
}

RationalMatrix combined_row_coefficients(int i, const KnotVector& kv_t) {
    const int q = kv_t.degree();
    if (i < 0 || i > q) throw std::invalid_argument("combined rows require 0 <= i <= q");
    const KnotVector bezier = KnotVector::from_interior(q, {});
    return degree_elevation_matrix(i, q) * knot_insertion_matrix(bezier, kv_t.interior_knots());
}

}  // namespace igs
