#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cullis/field.hpp"

namespace cullis {

/// A k-subset {i_1 < ... < i_k} of [n] = {1, ..., n}.
class RowSubset {
public:
    RowSubset(int n, std::vector<int> elements);

    int ambient() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }
    /// c(alpha) = i_alpha, 1-based.
    int operator()(int alpha) const { return elements_.at(static_cast<std::size_t>(alpha - 1)); }
    std::span<const int> elements() const noexcept { return elements_; }
    bool contains(int i) const;

    /// The same subset viewed inside a larger (or smaller) ambient set.
    RowSubset with_ambient(int n) const { return RowSubset(n, elements_); }

    std::string to_string() const;

    friend bool operator==(const RowSubset&, const RowSubset&) = default;
    friend auto operator<=>(const RowSubset& a, const RowSubset& b) { return a.elements_ <=> b.elements_; }

private:
    int n_;
    std::vector<int> elements_;
};

/// An injection sigma: [k] -> [n], stored as (sigma(1), ..., sigma(k)).
class Injection {
public:
    Injection(int n, std::vector<int> values);

    int ambient() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    int operator()(int alpha) const { return values_.at(static_cast<std::size_t>(alpha - 1)); }
    std::span<const int> values() const noexcept { return values_; }

    RowSubset image() const;
    std::string to_string() const;

private:
    int n_;
    std::vector<int> values_;
};

/// (-1)^{sum_alpha (c(alpha) - alpha)}; does not depend on the ambient n.
int sgn_subset(std::span<const int> sorted_elements) noexcept;
int sgn_subset(const RowSubset& c) noexcept;
Scalar sgn_subset(const RowSubset& c, Field f);

/// Sign of the permutation that sorts the values, via cycle decomposition.
int sorting_sign(std::span<const int> values);

/// sgn(pi_sigma) * sgn(image of sigma).
int sgn_injection(std::span<const int> values);
int sgn_injection(const Injection& sigma);
Scalar sgn_injection(const Injection& sigma, Field f);

std::uint64_t binomial(int n, int k) noexcept;
std::uint64_t falling_factorial(int n, int k) noexcept;

/// Visits every k-subset of [n] in lexicographic order. Throws BadDimensions
/// unless 1 <= k <= n.
void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& visit);
/// Visits every injection [k] -> [n], lexicographic in (sigma(1), ..., sigma(k)).
void for_each_injection(int n, int k, const std::function<void(std::span<const int>)>& visit);

std::vector<RowSubset> enumerate_subsets(int n, int k);
std::vector<Injection> enumerate_injections(int n, int k);

/// Complement of `indices` (1-based, any order) inside [n], increasing.
std::vector<int> complement(int n, std::span<const int> indices);

}  // namespace cullis
