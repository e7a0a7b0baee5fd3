#include "cullis/polynomial.hpp"

namespace cullis {

Scalar evaluate(std::span<const Scalar> coeffs, const Scalar& x) {
    if (coeffs.empty()) return x.field().zero();
    Scalar acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Coefficients interpolate(std::span<const std::pair<Scalar, Scalar>> points, std::size_t degree_bound) {
    if (points.empty()) throw Error(Errc::InsufficientPoints, "no points given");
    const Field field = points.front().first.field();
    if (!field.larger_than(degree_bound)) {
        throw Error(Errc::FieldTooSmall, field.name() + " has too few elements for degree " +
                                             std::to_string(degree_bound));
    }
    if (points.size() < degree_bound + 1) {
        throw Error(Errc::InsufficientPoints, "need " + std::to_string(degree_bound + 1) + " points, got " +
                                                  std::to_string(points.size()));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i].first == points[j].first) {
                throw Error(Errc::DuplicateAbscissa, "abscissa " + points[i].first.to_string() + " repeated");
            }
        }
    }

    // Newton divided differences on the first degree_bound + 1 points.
    const std::size_t m = degree_bound + 1;
    std::vector<Scalar> dd;
    dd.reserve(m);
    for (std::size_t i = 0; i < m; ++i) dd.push_back(points[i].second);
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
        }
    }

    // Expand the Newton form into monomial coefficients.
    Coefficients coeffs(m, field.zero());
    coeffs[0] = dd[m - 1];
    std::size_t degree = 0;
    for (std::size_t i = m - 1; i-- > 0;) {
        // coeffs <- coeffs * (x - x_i) + dd[i]
        const Scalar& xi = points[i].first;
        for (std::size_t d = degree + 1; d > 0; --d) coeffs[d] = coeffs[d - 1] - xi * coeffs[d];
        coeffs[0] = dd[i] - xi * coeffs[0];
        ++degree;
    }

    for (std::size_t i = m; i < points.size(); ++i) {
        if (!(evaluate(coeffs, points[i].first) == points[i].second)) {
            throw Error(Errc::ConditionViolated, "surplus point " + points[i].first.to_string() +
                                                      " does not lie on the interpolant");
        }
    }
    return coeffs;
}

}  // namespace cullis
