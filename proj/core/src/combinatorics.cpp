#include "cullis/combinatorics.hpp"

#include <algorithm>
#include <array>

namespace cullis {

namespace {

void require_dimensions(int n, int k) {
    if (k < 1 || n < k) {
        throw Error(Errc::BadDimensions, "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

std::string braced(std::span<const int> xs, char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += close;
    return out;
}

}  // namespace

RowSubset::RowSubset(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
    for (std::size_t a = 0; a < elements_.size(); ++a) {
        if (elements_[a] < 1 || elements_[a] > n_) {
            throw Error(Errc::IndexOutOfRange, "subset element " + std::to_string(elements_[a]) + " outside [" +
                                                   std::to_string(n_) + "]");
        }
        if (a > 0 && elements_[a] <= elements_[a - 1]) {
            throw Error(Errc::BadDimensions, "subset elements must be strictly increasing");
        }
    }
}

bool RowSubset::contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

std::string RowSubset::to_string() const { return braced(elements_, '{', '}'); }

Injection::Injection(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
    std::vector<bool> seen(static_cast<std::size_t>(std::max(n_, 0)) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n_) {
            throw Error(Errc::IndexOutOfRange, "injection value " + std::to_string(v) + " outside [" +
                                                   std::to_string(n_) + "]");
        }
        if (seen[static_cast<std::size_t>(v)]) throw Error(Errc::BadDimensions, "injection values must be distinct");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

RowSubset Injection::image() const {
    std::vector<int> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    return RowSubset(n_, std::move(sorted));
}

std::string Injection::to_string() const { return braced(values_, '(', ')'); }

int sgn_subset(std::span<const int> sorted_elements) noexcept {
    long exponent = 0;
    for (std::size_t a = 0; a < sorted_elements.size(); ++a) {
        exponent += sorted_elements[a] - static_cast<long>(a + 1);
    }
    return exponent % 2 == 0 ? 1 : -1;
}

int sgn_subset(const RowSubset& c) noexcept { return sgn_subset(c.elements()); }

Scalar sgn_subset(const RowSubset& c, Field f) { return signed_one(f, sgn_subset(c)); }

namespace {

// Small fixed-capacity scratch space; k stays tiny in every caller.
constexpr std::size_t kInlineCapacity = 32;

template <typename T>
struct Scratch {
    std::array<T, kInlineCapacity> inline_{};
    std::vector<T> heap_;
    T* data;
    explicit Scratch(std::size_t k) : data(inline_.data()) {
        if (k > kInlineCapacity) {
            heap_.resize(k);
            data = heap_.data();
        }
    }
};

}  // namespace

int sorting_sign(std::span<const int> values) {
    const std::size_t k = values.size();
    // pi maps position a to the rank of values[a]; sign = (-1)^(k - #cycles).
    Scratch<std::size_t> rank(k);
    for (std::size_t a = 0; a < k; ++a) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < k; ++b) r += values[b] < values[a] ? 1 : 0;
        rank.data[a] = r;
    }
    Scratch<unsigned char> visited(k);
    for (std::size_t a = 0; a < k; ++a) visited.data[a] = 0;
    std::size_t cycles = 0;
    for (std::size_t a = 0; a < k; ++a) {
        if (visited.data[a]) continue;
        ++cycles;
        for (std::size_t b = a; !visited.data[b]; b = rank.data[b]) visited.data[b] = 1;
    }
    return (k - cycles) % 2 == 0 ? 1 : -1;
}

int sgn_injection(std::span<const int> values) {
    const std::size_t k = values.size();
    Scratch<int> sorted(k);
    std::copy(values.begin(), values.end(), sorted.data);
    std::sort(sorted.data, sorted.data + k);
    return sorting_sign(values) * sgn_subset(std::span<const int>(sorted.data, k));
}

int sgn_injection(const Injection& sigma) { return sgn_injection(sigma.values()); }

Scalar sgn_injection(const Injection& sigma, Field f) { return signed_one(f, sgn_injection(sigma)); }

std::uint64_t binomial(int n, int k) noexcept {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t falling_factorial(int n, int k) noexcept {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n - i);
    return r;
}

void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& visit) {
    require_dimensions(n, k);
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) c[static_cast<std::size_t>(a)] = a + 1;
    while (true) {
        visit(c);
        int a = k - 1;
        while (a >= 0 && c[static_cast<std::size_t>(a)] == n - k + a + 1) --a;
        if (a < 0) return;
        ++c[static_cast<std::size_t>(a)];
        for (int b = a + 1; b < k; ++b) c[static_cast<std::size_t>(b)] = c[static_cast<std::size_t>(b - 1)] + 1;
    }
}

void for_each_injection(int n, int k, const std::function<void(std::span<const int>)>& visit) {
    require_dimensions(n, k);
    std::vector<int> values(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == k) {
            visit(values);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            values[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec, 0);
}

std::vector<RowSubset> enumerate_subsets(int n, int k) {
    std::vector<RowSubset> out;
    out.reserve(binomial(n, k));
    for_each_subset(n, k, [&](std::span<const int> c) { out.emplace_back(n, std::vector<int>(c.begin(), c.end())); });
    return out;
}

std::vector<Injection> enumerate_injections(int n, int k) {
    std::vector<Injection> out;
    out.reserve(falling_factorial(n, k));
    for_each_injection(n, k,
                       [&](std::span<const int> s) { out.emplace_back(n, std::vector<int>(s.begin(), s.end())); });
    return out;
}

std::vector<int> complement(int n, std::span<const int> indices) {
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int i : indices) {
        if (i < 1 || i > n) throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " outside [" + std::to_string(n) + "]");
        hit[static_cast<std::size_t>(i)] = true;
    }
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (!hit[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

}  // namespace cullis
