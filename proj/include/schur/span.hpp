#pragma once

#include "partition.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace schur {

/// Generators of a subspace of the group algebra, queried for its primitive
/// partition. Closure under the Hadamard product is validated, not assumed.
struct SpanQuery {
    std::vector<RingElement> generators;
};

/// Decomposes the Hadamard closure of the generated span into its primitive
/// partition. Two exponents land in the same class iff every generator gives
/// them the same coefficient (equivalently, they lie in exactly the same
/// coefficient complexes); the interpolation argument guarantees each such
/// class sum lies in the closure. The result covers the union of generator
/// supports, as a ClassListOnly partition.
inline Partition decompose_span(const SpanQuery& q) {
    if (q.generators.empty()) throw std::invalid_argument("span query needs a generator");
    const GroupContext& ctx = q.generators.front().ctx();
    for (const RingElement& g : q.generators) {
        require_same_context(ctx, g.ctx());
        if (g.is_zero()) throw std::invalid_argument("zero generator in span query");
    }

    std::set<Rat> universe;
    for (const RingElement& g : q.generators)
        for (const auto& [e, c] : g.terms()) universe.insert(e);

    std::map<std::vector<Rat>, std::vector<Rat>> by_signature;
    for (const Rat& e : universe) {
        std::vector<Rat> sig;
        sig.reserve(q.generators.size());
        for (const RingElement& g : q.generators) sig.push_back(g.coeff(e));
        by_signature[sig].push_back(e);
    }

    std::vector<std::vector<Rat>> classes;
    classes.reserve(by_signature.size());
    for (auto& [sig, members] : by_signature) classes.push_back(members);
    Partition P = Partition::class_list(ctx, classes);

    // Soundness guard: generators constant on classes, pairwise Hadamard
    // products inside the resulting span. Both hold by construction of the
    // signatures; a failure would mean the refinement itself is broken.
    for (std::size_t i = 0; i < q.generators.size(); ++i)
        if (!membership_test(P, q.generators[i]))
            throw std::runtime_error("input span not Hadamard-closed: generator " +
                                     std::to_string(i) + " splits a class");
    for (std::size_t i = 0; i < q.generators.size(); ++i)
        for (std::size_t j = i; j < q.generators.size(); ++j)
            if (!membership_test(P, hadamard(q.generators[i], q.generators[j])))
                throw std::runtime_error("input span not Hadamard-closed: product of generators " +
                                         std::to_string(i) + " and " + std::to_string(j) +
                                         " escapes the span");

    return P;
}

} // namespace schur
