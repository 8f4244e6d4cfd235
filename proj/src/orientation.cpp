#include "topstruct/orientation.hpp"

#include <algorithm>
#include <vector>

namespace topstruct {

bool is_consistent(const Graph& g, const Orientation& o, Budget& budget)
{
    std::vector<Separation> members;
    for (const auto& s : enumerate_separations(g, o.k(), budget)) members.push_back(o.choose(s));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (i == j) continue;
            budget.spend(1, "is_consistent");
            const auto& [a, b] = members[i];
            const auto& [c, d] = members[j];
            if (b.is_subset_of(c) && d.is_subset_of(a)) return false;
        }
    return true;
}

std::optional<int> min_distinguishing_order(const Graph& g, const Orientation& o1, const Orientation& o2,
                                            Budget& budget)
{
    const int k = std::min(o1.k(), o2.k());
    // Enumeration is ordered by separator size, so the first hit is minimal.
    std::optional<int> found;
    for_each_separation(g, k, budget, [&](const Separation& s) {
        if (!distinguishes(o1, o2, s)) return true;
        found = s.order();
        return false;
    });
    return found;
}

}  // namespace topstruct
