#include "fslab/perm.hpp"

#include <bit>
#include <stdexcept>

namespace fslab {

Bijection::Bijection(int n) : n_(n) {
    if (n < 0 || n > kMaxPermN) throw std::invalid_argument("Bijection: n must be in [0, 12]");
    for (int i = 0; i < n; ++i) image_[i] = static_cast<std::uint8_t>(i);
}

Bijection::Bijection(std::initializer_list<int> images) : n_(static_cast<int>(images.size())) {
    if (n_ > kMaxPermN) throw std::invalid_argument("Bijection: n must be in [0, 12]");
    std::uint32_t seen = 0;
    int i = 0;
    for (int v : images) {
        if (v < 0 || v >= n_ || ((seen >> v) & 1u))
            throw std::invalid_argument("Bijection: images must be a permutation of 0..n-1");
        seen |= 1u << v;
        image_[i++] = static_cast<std::uint8_t>(v);
    }
}

Bijection Bijection::identity(int n) { return Bijection(n); }

Bijection Bijection::inverse() const {
    Bijection r(n_);
    for (int i = 0; i < n_; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Bijection Bijection::swapped(int a, int c) const {
    if (a == c) throw std::invalid_argument("swapped: the two positions must differ");
    Bijection r = *this;
    std::swap(r.image_[a], r.image_[c]);
    return r;
}

bool Bijection::operator==(const Bijection& other) const {
    if (n_ != other.n_) return false;
    for (int i = 0; i < n_; ++i)
        if (image_[i] != other.image_[i]) return false;
    return true;
}

bool Bijection::operator<(const Bijection& other) const {
    for (int i = 0; i < n_ && i < other.n_; ++i)
        if (image_[i] != other.image_[i]) return image_[i] < other.image_[i];
    return n_ < other.n_;
}

std::string Bijection::to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (i) s += ' ';
        s += std::to_string(image_[i]);
    }
    return s;
}

Bijection compose(const Bijection& b, const Bijection& c) {
    if (b.size() != c.size()) throw std::invalid_argument("compose: size mismatch");
    Bijection r(b.size());
    for (int i = 0; i < b.size(); ++i) r.set(i, b[c[i]]);
    return r;
}

PermRank rank(const Bijection& b) {
    const int n = b.size();
    PermRank r = 0;
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        std::uint32_t v = static_cast<std::uint32_t>(b[i]);
        std::uint32_t smaller = v - std::popcount(seen & ((1u << v) - 1));
        r += smaller * kFactorial[n - 1 - i];
        seen |= 1u << v;
    }
    return r;
}

Bijection unrank(PermRank r, int n) {
    if (n < 0 || n > kMaxPermN) throw std::invalid_argument("unrank: n must be in [0, 12]");
    if (r >= kFactorial[n]) throw std::out_of_range("unrank: rank out of range");
    Bijection b(n);
    std::uint32_t avail = (n == 0) ? 0 : ((n == 32) ? ~0u : ((1u << n) - 1));
    for (int i = 0; i < n; ++i) {
        std::uint32_t digit = r / kFactorial[n - 1 - i];
        r %= kFactorial[n - 1 - i];
        std::uint32_t m = avail;
        for (std::uint32_t skip = digit; skip > 0; --skip) m &= m - 1;
        int v = std::countr_zero(m);
        b.set(i, v);
        avail &= ~(1u << v);
    }
    return b;
}

int sign(const Bijection& b) {
    // Parity of the Lehmer digit sum = parity of the inversion count.
    int inv = 0;
    std::uint32_t seen = 0;
    for (int i = 0; i < b.size(); ++i) {
        std::uint32_t v = static_cast<std::uint32_t>(b[i]);
        inv += static_cast<int>(v) - std::popcount(seen & ((1u << v) - 1));
        seen |= 1u << v;
    }
    return (inv & 1) ? -1 : +1;
}

namespace {

// compact[v] = rank of v among the kept vertices.
std::array<std::int8_t, kMaxPermN> compaction(std::uint64_t removed, int n) {
    std::array<std::int8_t, kMaxPermN> map{};
    std::int8_t next = 0;
    for (int v = 0; v < n; ++v)
        map[v] = ((removed >> v) & 1u) ? std::int8_t{-1} : next++;
    return map;
}

}  // namespace

Bijection restrict_to(const Bijection& b, std::uint64_t removed_x, std::uint64_t removed_y) {
    const int n = b.size();
    if (std::popcount(removed_x) != std::popcount(removed_y))
        throw std::invalid_argument("restrict_to: removed sets differ in size");
    auto cx = compaction(removed_x, n);
    auto cy = compaction(removed_y, n);
    Bijection r(n - std::popcount(removed_x));
    for (int x = 0; x < n; ++x) {
        bool x_removed = (removed_x >> x) & 1u;
        bool y_removed = (removed_y >> b[x]) & 1u;
        if (x_removed != y_removed)
            throw std::invalid_argument("restrict_to: bijection does not respect the removed pairing");
        if (!x_removed) r.set(cx[x], cy[b[x]]);
    }
    return r;
}

Bijection extend_with(const Bijection& b, const std::vector<std::pair<int, int>>& pinning, int n) {
    std::uint64_t removed_x = 0, removed_y = 0;
    for (auto [x, y] : pinning) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw std::invalid_argument("extend_with: pinned vertex out of range");
        if (((removed_x >> x) & 1u) || ((removed_y >> y) & 1u))
            throw std::invalid_argument("extend_with: pinning is not a bijection");
        removed_x |= std::uint64_t{1} << x;
        removed_y |= std::uint64_t{1} << y;
    }
    if (b.size() + static_cast<int>(pinning.size()) != n)
        throw std::invalid_argument("extend_with: sizes do not add up");
    auto cx = compaction(removed_x, n);
    auto cy = compaction(removed_y, n);
    std::array<std::int8_t, kMaxPermN> kept_y{};
    for (int y = 0; y < n; ++y)
        if (cy[y] >= 0) kept_y[cy[y]] = static_cast<std::int8_t>(y);
    Bijection r(n);
    for (int x = 0; x < n; ++x)
        if (cx[x] >= 0) r.set(x, kept_y[b[cx[x]]]);
    for (auto [x, y] : pinning) r.set(x, y);
    return r;
}

}  // namespace fslab
