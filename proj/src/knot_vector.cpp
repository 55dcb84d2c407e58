#include "igs/knot_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace igs {

KnotVector::KnotVector(int degree, std::vector<Rational> knots)
    : degree_(degree), knots_(std::move(knots)) {
    if (degree_ < 0) throw std::invalid_argument("knot vector: negative degree");
    const std::size_t rep = static_cast<std::size_t>(degree_) + 1;
    if (knots_.size() < 2 * rep) throw std::invalid_argument("knot vector: too few knots");
    for (std::size_t i = 0; i < rep; ++i) {
        if (knots_[i] != 0) throw std::invalid_argument("knot vector: not open at 0");
        if (knots_[knots_.size() - 1 - i] != 1) throw std::invalid_argument("knot vector: not open at 1");
    }
    for (std::size_t i = rep; i + rep < knots_.size(); ++i) {
        if (knots_[i] <= 0 || knots_[i] >= 1)
            throw std::invalid_argument("knot vector: interior knot outside (0,1)");
        if (i > rep && knots_[i] < knots_[i - 1])
            throw std::invalid_argument("knot vector: knots not nondecreasing");
    }
    if (max_interior_multiplicity() > static_cast<std::size_t>(degree_))
        throw std::invalid_argument("knot vector: interior multiplicity exceeds degree");
    knots_double_.reserve(knots_.size());
    for (const Rational& k : knots_) knots_double_.push_back(to_double(k));
}

KnotVector KnotVector::from_interior(int degree, std::vector<Rational> interior) {
    std::vector<Rational> full(degree + 1, Rational(0));
    full.insert(full.end(), interior.begin(), interior.end());
    full.insert(full.end(), degree + 1, Rational(1));
    return KnotVector(degree, std::move(full));
}

std::vector<Rational> KnotVector::interior_knots() const {
    return {knots_.begin() + degree_ + 1, knots_.end() - degree_ - 1};
}

Rational KnotVector::first_interior_or_one() const {
    return interior_count() > 0 ? knots_[degree_ + 1] : Rational(1);
}

std::size_t KnotVector::max_interior_multiplicity() const {
    std::size_t best = 0, run = 0;
    for (std::size_t i = degree_ + 1; i + degree_ + 1 < knots_.size(); ++i) {
        run = (i > static_cast<std::size_t>(degree_) + 1 && knots_[i] == knots_[i - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

}  // namespace igs
