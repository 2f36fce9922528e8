#include "griffin/partition.hpp"

#include <charconv>
#include <numeric>

#include "griffin/errors.hpp"

namespace griffin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw InvalidInput("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    if (text.empty()) throw InvalidInput("empty partition");
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
            throw InvalidInput("cannot parse partition '" + std::string(text) + "'");
        }
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int i = 0; i < p; ++i) ++conj[static_cast<std::size_t>(i)];
    }
    return Partition(std::move(conj));
}

int Partition::p_stat(int m, int n) const {
    if (m < 0 || m > n) throw InvalidInput("p statistic needs n >= m >= 0");
    const Partition conj = conjugate();
    int total = 0;
    for (int i = n - m + 1; i <= conj.length(); ++i) total += conj.part(i);
    return total;
}

std::optional<Partition> Partition::remove_corner(int j) const {
    if (j < 0) throw InvalidInput("corner index must be non-negative");
    if (j == 0) return *this;
    const Partition conj = conjugate();
    if (conj.part(j) <= conj.part(j + 1)) return std::nullopt;
    std::vector<int> parts = conj.parts();
    --parts[static_cast<std::size_t>(j - 1)];
    return Partition(std::move(parts)).conjugate();
}

std::vector<int> Partition::valid_corners(int n) const {
    if (size_ < 1 || size_ > n + 1) {
        throw InvalidInput("need 1 <= |lambda| <= n + 1, got |lambda| = " + std::to_string(size_) +
                           ", n = " + std::to_string(n));
    }
    std::vector<int> out;
    if (size_ <= n) out.push_back(0);
    const Partition conj = conjugate();
    for (int j = 1; j <= conj.length(); ++j) {
        if (conj.part(j) > conj.part(j + 1)) out.push_back(j);
    }
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int size) {
    if (size < 0) throw InvalidInput("negative partition size");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(size, size, cur, out);
    return out;
}

}  // namespace griffin
