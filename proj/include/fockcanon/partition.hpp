#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockcanon {

// Integer partition: weakly decreasing sequence of positive parts.
// The empty partition is Partition{}.  Trailing zeros are stripped on
// construction; any other violation of the invariant throws.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }

    // number of (positive) parts
    int length() const { return static_cast<int>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    // |lambda| = sum of parts
    long long size() const {
        long long s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // 1-indexed part access; parts beyond length() read as 0
    int part(int i) const {
        if (i < 1) throw std::invalid_argument("part index is 1-based");
        return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    // Lexicographic order.  Padding with zeros agrees with raw vector
    // comparison because parts are positive, so this is the usual
    // lexicographic order on partitions.
    bool operator<(const Partition& o) const {
        return std::lexicographical_compare(parts_.begin(), parts_.end(),
                                            o.parts_.begin(), o.parts_.end());
    }
    bool operator>(const Partition& o) const { return o < *this; }
    bool operator<=(const Partition& o) const { return !(o < *this); }
    bool operator>=(const Partition& o) const { return !(*this < o); }

private:
    std::vector<int> parts_;
};

struct LexLess {
    bool operator()(const Partition& a, const Partition& b) const { return a < b; }
};

// Descending lexicographic order: the canonical presentation order for
// basis-vector supports.
struct LexGreater {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.resize(static_cast<std::size_t>(p.parts()[0]));
        for (int c = 1; c <= p.parts()[0]; ++c) {
            int h = 0;
            for (int q : p.parts())
                if (q >= c) ++h;
            cols[static_cast<std::size_t>(c - 1)] = h;
        }
    }
    return Partition(std::move(cols));
}

// Dominance order: sigma dominates lambda iff they have equal size and every
// prefix sum of sigma is >= the corresponding prefix sum of lambda.
// Unequal sizes compare as "not dominating" (no error).
inline bool dominates(const Partition& sigma, const Partition& lambda) {
    if (sigma.size() != lambda.size()) return false;
    long long s = 0, l = 0;
    int n = std::max(sigma.length(), lambda.length());
    for (int i = 1; i <= n; ++i) {
        s += sigma.part(i);
        l += lambda.part(i);
        if (s < l) return false;
    }
    return true;
}

// lambda is e-regular iff no part repeats e or more times.
inline bool is_e_regular(const Partition& lambda, int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    int run = 1;
    const auto& p = lambda.parts();
    for (std::size_t i = 1; i < p.size(); ++i) {
        run = (p[i] == p[i - 1]) ? run + 1 : 1;
        if (run >= e) return false;
    }
    return !p.empty() ? run < e : true;
}

// --- text round-trip -------------------------------------------------------
//
// Grammar: "-" denotes the empty partition; otherwise a comma-separated list
// of weakly decreasing positive integers, e.g. "6,6,5,4".

inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty partition string (use \"-\")");
    if (s == "-") return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw std::invalid_argument("empty component in partition string");
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("invalid character in partition string: " + tok);
        long v = std::stol(tok);
        if (v <= 0 || v > 1'000'000)
            throw std::invalid_argument("partition part out of range: " + tok);
        parts.push_back(static_cast<int>(v));
        if (next == std::string::npos) break;
        pos = next + 1;
        if (pos == s.size()) throw std::invalid_argument("trailing comma in partition string");
    }
    return Partition(std::move(parts));  // throws if not weakly decreasing
}

inline std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[static_cast<std::size_t>(i)]);
    }
    return out;
}

// --- enumeration -----------------------------------------------------------

// All partitions of n whose parts are at most max_part, descending
// lexicographic order.
inline void partitions_of_bounded(int n, int max_part, std::vector<int>& stack,
                                  std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        stack.push_back(p);
        partitions_of_bounded(n - p, p, stack, out);
        stack.pop_back();
    }
}

// All partitions of n, descending lexicographic order.
inline std::vector<Partition> all_partitions(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    partitions_of_bounded(n, n == 0 ? 1 : n, stack, out);
    return out;
}

// All e-regular partitions of n, descending lexicographic order.
inline std::vector<Partition> e_regular_partitions(int n, int e) {
    std::vector<Partition> out;
    for (auto& p : all_partitions(n))
        if (is_e_regular(p, e)) out.push_back(p);
    return out;
}

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;  // FNV-1a
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace fockcanon
