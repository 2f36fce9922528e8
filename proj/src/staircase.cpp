#include "griffin/staircase.hpp"

#include <charconv>
#include <functional>

#include "griffin/container.hpp"
#include "griffin/errors.hpp"

namespace griffin {

PowerBound parse_power_bound(std::string_view text) {
    if (text == "inf" || text == "infinity") return kInfinite;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw InvalidInput("s must be a positive integer or 'inf', got '" + std::string(text) + "'");
    }
    if (v < 1) throw InvalidInput("s must be positive");
    return v;
}

std::string power_bound_to_string(PowerBound s) {
    return s ? std::to_string(*s) : "inf";
}

WeakComposition reversed_staircase(int k) {
    WeakComposition out;
    for (int v = k - 1; v >= 0; --v) out.push_back(v);
    return out;
}

std::set<WeakComposition> shuffles(const std::vector<WeakComposition>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::set<WeakComposition> out;
    std::vector<std::size_t> next(parts.size(), 0);
    WeakComposition cur;
    cur.reserve(total);
    std::function<void()> rec = [&] {
        if (cur.size() == total) {
            out.insert(cur);
            return;
        }
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (next[k] == parts[k].size()) continue;
            cur.push_back(parts[k][next[k]++]);
            rec();
            --next[k];
            cur.pop_back();
        }
    };
    rec();
    return out;
}

std::set<WeakComposition> staircases(int n, const Partition& lambda, int s) {
    if (lambda.size() < 1 || lambda.size() > n) {
        throw InvalidInput("staircases need 1 <= |lambda| <= n");
    }
    if (s < lambda.length()) throw InvalidInput("staircases need s >= l(lambda)");
    std::vector<WeakComposition> parts;
    const Partition conjugate = lambda.conjugate();
    for (int part : conjugate.parts()) parts.push_back(reversed_staircase(part));
    parts.emplace_back(static_cast<std::size_t>(n - lambda.size()), s - 1);
    return shuffles(parts);
}

bool in_C(const WeakComposition& alpha, const Partition& lambda, PowerBound s) {
    const int n = static_cast<int>(alpha.size());
    if (lambda.size() > n) return false;
    if (!s) return code_inv(alpha, lambda).empty_box_count() == 0;
    for (const auto& st : staircases(n, lambda, *s)) {
        if (entrywise_le(alpha, st)) return true;
    }
    return false;
}

std::set<WeakComposition> enumerate_C(int n, const Partition& lambda, int s) {
    std::set<WeakComposition> out;
    if (lambda.size() > n) return out;
    for (const auto& st : staircases(n, lambda, s)) {
        WeakComposition alpha(static_cast<std::size_t>(n), 0);
        // Odometer over the box below st.
        while (true) {
            out.insert(alpha);
            int pos = 0;
            while (pos < n && alpha[static_cast<std::size_t>(pos)] == st[static_cast<std::size_t>(pos)]) {
                alpha[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == n) break;
            ++alpha[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

std::vector<ExponentVector> enumerate_A(int n, const Partition& lambda, int s) {
    std::vector<ExponentVector> out;
    for (const auto& alpha : enumerate_C(n, lambda, s)) out.emplace_back(alpha);
    return out;
}

}  // namespace griffin
