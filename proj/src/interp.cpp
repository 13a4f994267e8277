#include "modring/interp.hpp"

#include <utility>

namespace modring {

namespace {

void require_unit_differences(const std::vector<Integer>& xs, const Integer& modulus) {
    if (auto bad = check_unit_differences(xs, modulus)) {
        throw not_unit_difference(bad->i, bad->j, bad->gcd);
    }
}

std::vector<Polynomial> basis_unchecked(const std::vector<Integer>& xs, const Integer& modulus) {
    std::vector<Polynomial> basis;
    basis.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial term = Polynomial::constant(modulus, 1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            const Integer inv = mod_inverse(xs[i] - xs[j], modulus).value;
            term = poly_mul(term, poly_scale(Polynomial(modulus, {-xs[j], 1}), inv));
        }
        basis.push_back(std::move(term));
    }
    return basis;
}

}  // namespace

PointSet::PointSet(Integer modulus, std::vector<Point> points)
    : modulus_(std::move(modulus)), points_(std::move(points)) {
    if (modulus_ <= 0) throw non_positive_modulus(modulus_);
    for (Point& p : points_) {
        p.x = floor_mod(p.x, modulus_);
        p.y = floor_mod(p.y, modulus_);
    }
}

PointSet::PointSet(Integer modulus, std::initializer_list<Point> points)
    : PointSet(std::move(modulus), std::vector<Point>(points)) {}

std::vector<Integer> PointSet::nodes() const {
    std::vector<Integer> xs;
    xs.reserve(points_.size());
    for (const Point& p : points_) xs.push_back(p.x);
    return xs;
}

std::optional<PairWitness> check_unit_differences(const std::vector<Integer>& xs,
                                                  const Integer& modulus) {
    if (modulus <= 0) throw non_positive_modulus(modulus);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            Integer g = extended_gcd(floor_mod(xs[i] - xs[j], modulus), modulus).g;
            if (g != 1) return PairWitness{i, j, std::move(g)};
        }
    }
    return std::nullopt;
}

std::vector<Polynomial> lagrange_basis(const std::vector<Integer>& xs, const Integer& modulus) {
    require_unit_differences(xs, modulus);
    return basis_unchecked(xs, modulus);
}

Polynomial lagrange_interpolate(const PointSet& points) {
    if (points.size() == 0) throw empty_input();
    require_unit_differences(points.nodes(), points.modulus());
    const std::vector<Polynomial> basis = basis_unchecked(points.nodes(), points.modulus());
    Polynomial acc = Polynomial::zero(points.modulus());
    for (std::size_t i = 0; i < points.size(); ++i) {
        acc = poly_add(acc, poly_scale(basis[i], points.points()[i].y));
    }
    return acc;
}

Polynomial interpolate_via_crt(const PointSet& points) {
    if (points.size() == 0) throw empty_input();
    require_unit_differences(points.nodes(), points.modulus());
    const std::vector<Polynomial> idempotents = basis_unchecked(points.nodes(), points.modulus());
    Polynomial combination = Polynomial::zero(points.modulus());
    for (std::size_t i = 0; i < points.size(); ++i) {
        combination = poly_add(combination, poly_scale(idempotents[i], points.points()[i].y));
    }
    // The ring CRT pins the answer only modulo the product of the (t - x_j);
    // reducing by the monic product picks the canonical representative.
    const Polynomial product = expand_from_roots(points.nodes(), points.modulus());
    if (product.is_zero()) return combination;  // zero ring: everything is 0
    return monic_divmod(combination, product).remainder;
}

}  // namespace modring
