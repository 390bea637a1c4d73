#pragma once

#include "element.hpp"
#include "verdict.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace schur {

/// What a partition's classes are required to cover.
///   WholeGroup:     all of Z/n (finite contexts only).
///   ExplicitWindow: the symmetric integer range [lo, hi], lo = -hi
///                   (infinite cyclic context; a fragment of the group).
///   ClassListOnly:  no covering obligation; the universe is the union of the
///                   listed classes (used for rational contexts, decomposition
///                   results, and windowless integer class lists).
enum class UniverseKind { WholeGroup, ExplicitWindow, ClassListOnly };

using ExpClass = std::vector<Rat>; // sorted ascending, no duplicates

namespace detail {

inline ExpClass normalize_class(const GroupContext& ctx, const std::vector<Rat>& raw) {
    ExpClass c;
    c.reserve(raw.size());
    for (const Rat& e : raw) c.push_back(ctx.reduce(e));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

/// Canonical class key: (min |e|, negative-achiever flag, size), then the
/// class itself lexicographically as a total-order backstop. Empty classes
/// sort last (they only appear en route to a reject verdict).
struct ClassOrder {
    bool operator()(const ExpClass& a, const ExpClass& b) const {
        if (a.empty() || b.empty()) return b.empty() && !a.empty();
        auto key = [](const ExpClass& c) {
            Rat best = rat_abs(c[0]);
            bool has_nonneg = c[0] >= 0;
            for (const Rat& e : c) {
                Rat ab = rat_abs(e);
                if (ab < best) {
                    best = ab;
                    has_nonneg = e >= 0;
                } else if (ab == best && e >= 0) {
                    has_nonneg = true;
                }
            }
            return std::make_tuple(best, has_nonneg ? 0 : 1, c.size());
        };
        auto ka = key(a), kb = key(b);
        if (ka != kb) return ka < kb;
        return a < b;
    }
};

} // namespace detail

/// A family of pairwise-disjoint finite nonempty exponent classes together
/// with the universe they are declared to cover. Construction canonicalizes
/// (reduces exponents, sorts classes); it does not validate — disjointness,
/// nonemptiness, and coverage are checked by validate_partition so that bad
/// inputs produce verdicts, not crashes.
class Partition {
public:
    static Partition whole_group(const GroupContext& ctx,
                                 const std::vector<std::vector<Rat>>& classes) {
        if (!ctx.is_finite())
            throw std::invalid_argument("whole-group universe requires a finite group");
        return Partition(ctx, UniverseKind::WholeGroup, 0, 0, classes);
    }

    static Partition windowed(const GroupContext& ctx, const Int& lo, const Int& hi,
                              const std::vector<std::vector<Rat>>& classes) {
        if (ctx.kind() != GroupKind::InfiniteCyclic)
            throw std::invalid_argument("window universe requires the infinite cyclic group");
        if (lo != -hi || hi < 0)
            throw std::invalid_argument("window must be a symmetric range [-N, N]");
        return Partition(ctx, UniverseKind::ExplicitWindow, lo, hi, classes);
    }

    static Partition class_list(const GroupContext& ctx,
                                const std::vector<std::vector<Rat>>& classes) {
        return Partition(ctx, UniverseKind::ClassListOnly, 0, 0, classes);
    }

    const GroupContext& ctx() const { return ctx_; }
    UniverseKind universe_kind() const { return kind_; }
    const Int& window_lo() const { return lo_; }
    const Int& window_hi() const { return hi_; }

    /// Classes in canonical order.
    const std::vector<ExpClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }
    const ExpClass& class_at(std::size_t i) const { return classes_.at(i); }

    bool in_universe(const Rat& e) const {
        if (!ctx_.admits(e)) return false;
        Rat r = ctx_.reduce(e);
        switch (kind_) {
        case UniverseKind::WholeGroup: return true;
        case UniverseKind::ExplicitWindow: return Rat(lo_) <= r && r <= Rat(hi_);
        case UniverseKind::ClassListOnly: return index_.count(r) > 0;
        }
        return false;
    }

    /// Index of the class containing e, or absent when e is outside the
    /// universe (or uncovered).
    std::optional<std::size_t> class_index_of(const Rat& e) const {
        if (!ctx_.admits(e)) return std::nullopt;
        auto it = index_.find(ctx_.reduce(e));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// All exponents of the declared universe (WholeGroup/ExplicitWindow);
    /// union of classes for ClassListOnly.
    std::vector<Rat> universe_elements() const {
        std::vector<Rat> out;
        if (kind_ == UniverseKind::WholeGroup) {
            for (Int e = 0; e < ctx_.order(); ++e) out.push_back(Rat(e));
        } else if (kind_ == UniverseKind::ExplicitWindow) {
            for (Int e = lo_; e <= hi_; ++e) out.push_back(Rat(e));
        } else {
            for (const auto& [e, i] : index_) out.push_back(e);
        }
        return out;
    }

    bool operator==(const Partition& o) const {
        return ctx_ == o.ctx_ && kind_ == o.kind_ && lo_ == o.lo_ && hi_ == o.hi_ &&
               classes_ == o.classes_;
    }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    Partition(GroupContext ctx, UniverseKind kind, Int lo, Int hi,
              const std::vector<std::vector<Rat>>& classes)
        : ctx_(std::move(ctx)), kind_(kind), lo_(std::move(lo)), hi_(std::move(hi)) {
        classes_.reserve(classes.size());
        for (const auto& raw : classes) classes_.push_back(detail::normalize_class(ctx_, raw));
        std::sort(classes_.begin(), classes_.end(), detail::ClassOrder{});
        for (std::size_t i = 0; i < classes_.size(); ++i)
            for (const Rat& e : classes_[i]) index_.emplace(e, i); // first class wins on overlap
    }

    GroupContext ctx_;
    UniverseKind kind_;
    Int lo_, hi_;
    std::vector<ExpClass> classes_;
    std::map<Rat, std::size_t> index_;
};

inline std::string exp_class_to_string(const ExpClass& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(c[i]);
    }
    return s + "}";
}

/// Checks the partition invariants: classes nonempty and pairwise disjoint,
/// every class inside the universe, and (for WholeGroup/ExplicitWindow) the
/// union covering the universe exactly. The witness names the first violated
/// clause.
inline Verdict validate_partition(const Partition& P) {
    for (std::size_t i = 0; i < P.size(); ++i)
        if (P.class_at(i).empty())
            return Verdict::reject("empty-class", "class " + std::to_string(i) + " is empty");

    std::map<Rat, std::size_t> seen;
    for (std::size_t i = 0; i < P.size(); ++i) {
        for (const Rat& e : P.class_at(i)) {
            auto [it, fresh] = seen.emplace(e, i);
            if (!fresh)
                return Verdict::reject("overlap",
                                       "classes " + exp_class_to_string(P.class_at(it->second)) +
                                           " and " + exp_class_to_string(P.class_at(i)) +
                                           " overlap at " + rat_to_string(e));
        }
    }

    if (P.universe_kind() == UniverseKind::ExplicitWindow) {
        for (std::size_t i = 0; i < P.size(); ++i)
            for (const Rat& e : P.class_at(i))
                if (e < Rat(P.window_lo()) || Rat(P.window_hi()) < e)
                    return Verdict::reject("universe",
                                           "class " + exp_class_to_string(P.class_at(i)) +
                                               " leaves the window at " + rat_to_string(e));
    }

    if (P.universe_kind() != UniverseKind::ClassListOnly) {
        std::string missing;
        for (const Rat& e : P.universe_elements()) {
            if (!seen.count(e)) {
                if (!missing.empty()) missing += ",";
                missing += rat_to_string(e);
            }
        }
        if (!missing.empty()) return Verdict::reject("coverage", missing + " uncovered");
    }

    return Verdict::accept();
}

/// The class containing g, or absent when g lies outside the universe.
inline std::optional<ExpClass> class_of(const Partition& P, const Rat& g) {
    auto i = P.class_index_of(g);
    if (!i) return std::nullopt;
    return P.class_at(*i);
}

/// True iff S is a union of classes of P. S must lie inside the universe;
/// outside elements make the question undecidable within the represented
/// fragment.
inline bool is_sset(const Partition& P, const std::set<Rat>& S) {
    std::set<std::size_t> touched;
    for (const Rat& e : S) {
        auto i = P.class_index_of(e);
        if (!i) throw std::invalid_argument("set element " + rat_to_string(e) +
                                            " outside the represented universe");
        touched.insert(*i);
    }
    for (std::size_t i : touched)
        for (const Rat& e : P.class_at(i))
            if (!S.count(e)) return false;
    return true;
}

/// True iff alpha lies in the span of P's class sums: coefficients constant
/// on every class and zero off the universe.
inline bool membership_test(const Partition& P, const RingElement& alpha) {
    require_same_context(P.ctx(), alpha.ctx());
    std::set<std::size_t> touched;
    for (const auto& [e, c] : alpha.terms()) {
        auto i = P.class_index_of(e);
        if (!i) return false;
        touched.insert(*i);
    }
    for (std::size_t i : touched) {
        const ExpClass& cls = P.class_at(i);
        const Rat v = alpha.coeff(cls[0]);
        for (const Rat& e : cls)
            if (alpha.coeff(e) != v) return false;
    }
    return true;
}

/// True iff the simple quantity alpha is primitive in the span of P: its
/// support is a single class. Requires alpha simple and in the span.
inline bool is_primitive(const Partition& P, const RingElement& alpha) {
    if (!alpha.is_simple() || alpha.is_zero())
        throw std::invalid_argument("primitivity is defined for nonzero simple quantities");
    if (!membership_test(P, alpha))
        throw std::invalid_argument("element outside the span of the partition");
    auto first = P.class_index_of(alpha.terms().begin()->first);
    return first && P.class_at(*first).size() == alpha.terms().size();
}

} // namespace schur
