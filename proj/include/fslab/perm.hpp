#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fslab {

// Dense index of a permutation in lexicographic order, 0..n!-1.
using PermRank = std::uint32_t;

constexpr int kMaxPermN = 12;  // 12! still fits PermRank

constexpr std::array<std::uint32_t, kMaxPermN + 1> kFactorial = [] {
    std::array<std::uint32_t, kMaxPermN + 1> f{};
    f[0] = 1;
    for (int i = 1; i <= kMaxPermN; ++i) f[i] = f[i - 1] * static_cast<std::uint32_t>(i);
    return f;
}();

// Bijection V(X) -> V(Y) as the image sequence image[x] = sigma(x).
class Bijection {
public:
    Bijection() = default;
    explicit Bijection(int n);
    Bijection(std::initializer_list<int> images);
    static Bijection identity(int n);

    int size() const { return n_; }
    int operator[](int x) const { return image_[x]; }
    void set(int x, int v) { image_[x] = static_cast<std::uint8_t>(v); }

    Bijection inverse() const;
    // this o (a c): the images at positions a and c exchanged.
    Bijection swapped(int a, int c) const;

    bool operator==(const Bijection& other) const;
    bool operator<(const Bijection& other) const;

    std::string to_string() const;  // "s(0) s(1) ... s(n-1)"

private:
    int n_ = 0;
    std::array<std::uint8_t, kMaxPermN> image_{};
};

// (b o c)(x) = b(c(x)).
Bijection compose(const Bijection& b, const Bijection& c);

// Lexicographic rank via the factorial number system (Lehmer code).
PermRank rank(const Bijection& b);
Bijection unrank(PermRank r, int n);

// +1 for even permutations, -1 for odd.
int sign(const Bijection& b);

// Induced bijection on the kept vertices, both sides relabeled by
// order-preserving compaction. Throws unless b maps removed_x exactly onto
// removed_y.
Bijection restrict_to(const Bijection& b, std::uint64_t removed_x, std::uint64_t removed_y);

// Unique extension of b agreeing with `pinning` (removed x -> removed y
// pairs) on the removed vertices and with b, under the same compaction
// relabelings, on the kept ones. Throws if the pinning is not a bijection
// between the removed sets.
Bijection extend_with(const Bijection& b, const std::vector<std::pair<int, int>>& pinning, int n);

}  // namespace fslab
