#include "griffin/exponent.hpp"

#include <algorithm>
#include <numeric>

#include "griffin/errors.hpp"

namespace griffin {

ExponentVector::ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.size() > static_cast<std::size_t>(kMaxVariables)) {
        throw InvalidInput("exponent vector longer than " + std::to_string(kMaxVariables));
    }
    for (int e : entries_) {
        if (e < 0) throw InvalidInput("negative exponent");
    }
    degree_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

ExponentVector::ExponentVector(std::initializer_list<int> entries)
    : ExponentVector(std::vector<int>(entries)) {}

ExponentVector ExponentVector::zero(int n) {
    if (n < 0) throw InvalidInput("negative variable count");
    return ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 0));
}

ExponentVector ExponentVector::unit(int n, int index, int power) {
    if (index < 1 || index > n) throw InvalidInput("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(index - 1)] = power;
    return ExponentVector(std::move(e));
}

void ExponentVector::check_same_size(const ExponentVector& other) const {
    if (entries_.size() != other.entries_.size()) {
        throw InvalidInput("exponent vectors of different length");
    }
}

bool ExponentVector::divides(const ExponentVector& other) const {
    check_same_size(other);
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > other.entries_[i]) return false;
    }
    return true;
}

bool ExponentVector::is_coprime_to(const ExponentVector& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != 0 && other.entries_[i] != 0) return false;
    }
    return true;
}

ExponentVector ExponentVector::operator*(const ExponentVector& other) const {
    check_same_size(other);
    ExponentVector r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += other.entries_[i];
    r.degree_ = degree_ + other.degree_;
    return r;
}

ExponentVector ExponentVector::operator/(const ExponentVector& other) const {
    if (!other.divides(*this)) throw InvalidInput("monomial quotient is not exact");
    ExponentVector r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= other.entries_[i];
    r.degree_ = degree_ - other.degree_;
    return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
    check_same_size(other);
    std::vector<int> e(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        e[i] = std::max(entries_[i], other.entries_[i]);
    }
    return ExponentVector(std::move(e));
}

bool ExponentVector::dominated_by(const ExponentVector& other) const {
    return divides(other);
}

ExponentVector ExponentVector::shifted_up() const {
    std::vector<int> e;
    e.reserve(entries_.size() + 1);
    e.push_back(0);
    e.insert(e.end(), entries_.begin(), entries_.end());
    return ExponentVector(std::move(e));
}

std::string ExponentVector::to_string() const {
    return composition_to_string(entries_);
}

bool entrywise_le(const WeakComposition& a, const WeakComposition& b) {
    if (a.size() != b.size()) throw InvalidInput("compositions of different length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

std::string composition_to_string(const WeakComposition& alpha) {
    std::string s = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(alpha[i]);
    }
    return s + ")";
}

}  // namespace griffin
