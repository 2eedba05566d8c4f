#pragma once
// Enumeration helpers for sweeping verification instances: quotient tuples,
// the partitions of a block (fixed core and weight), and small cores.

#include <functional>
#include <vector>

#include "abacus.hpp"
#include "partition.hpp"

namespace fockcanon {

// All e-tuples of partitions with total size exactly w, in lexicographic
// tuple order (component 0 varies slowest).
inline std::vector<std::vector<Partition>> quotient_tuples(int w, int e) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> current(static_cast<std::size_t>(e));
    std::function<void(int, int)> place = [&](int slot, int remaining) {
        if (slot == e - 1) {
            for (const Partition& q : all_partitions(remaining)) {
                current[static_cast<std::size_t>(slot)] = q;
                out.push_back(current);
            }
            return;
        }
        for (int s = 0; s <= remaining; ++s)
            for (const Partition& q : all_partitions(s)) {
                current[static_cast<std::size_t>(slot)] = q;
                place(slot + 1, remaining - s);
            }
    };
    if (e >= 1 && w >= 0) place(0, w);
    return out;
}

// All partitions with the given e-core and e-weight, descending lex order.
inline std::vector<Partition> block_partitions(const Partition& core, int e, int weight) {
    std::vector<Partition> out;
    for (const auto& tuple : quotient_tuples(weight, e))
        out.push_back(from_core_and_quotient(core, tuple, e));
    std::sort(out.begin(), out.end(), LexGreater{});
    return out;
}

// All e-cores of size at most max_size, ascending lex order.
inline std::vector<Partition> cores_up_to(int max_size, int e) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& p : all_partitions(n))
            if (is_e_core(p, e)) out.push_back(p);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

}  // namespace fockcanon
