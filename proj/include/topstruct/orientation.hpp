#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "topstruct/graph.hpp"

namespace topstruct {

/// An orientation of S_k(G), answered lazily.
///
/// `contains(sep)` reports whether the ordered separation (A, B) is the
/// member chosen from the pair {(A,B),(B,A)}, i.e. whether B is the "big"
/// side. Queries of order >= k throw SeparationDoesNotDecide.
class Orientation {
public:
    using Rule = std::function<bool(const Separation&)>;

    Orientation(int k, std::string label, Rule rule) : k_(k), label_(std::move(label)), rule_(std::move(rule)) {}

    int k() const { return k_; }
    const std::string& label() const { return label_; }

    bool contains(const Separation& s) const
    {
        if (s.order() >= k_)
            throw SeparationDoesNotDecide(label_ + ": order " + std::to_string(s.order()) + " >= k=" +
                                          std::to_string(k_));
        return rule_(s);
    }

    /// The member of the pair {s, s.inverse()} this orientation picks.
    Separation choose(const Separation& s) const { return contains(s) ? s : s.inverse(); }

private:
    int k_;
    std::string label_;
    Rule rule_;
};

/// True when exactly one of o1, o2 contains s.
inline bool distinguishes(const Orientation& o1, const Orientation& o2, const Separation& s)
{
    return o1.contains(s) != o2.contains(s);
}

/// Exhaustive consistency check over S_k(G): no two distinct members (A,B),
/// (C,D) with B subset of C and D subset of A. Oracle scale only.
bool is_consistent(const Graph& g, const Orientation& o, Budget& budget);

/// Smallest order of a separation of order < min(o1.k, o2.k) in exactly one
/// of o1, o2, found by exhaustive enumeration; nothing when they agree.
std::optional<int> min_distinguishing_order(const Graph& g, const Orientation& o1, const Orientation& o2,
                                            Budget& budget);

}  // namespace topstruct
