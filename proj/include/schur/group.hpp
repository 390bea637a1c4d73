#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <string>

namespace schur {

/// The ambient group, written additively. Exponents name group elements:
///   FiniteCyclic(n):  residues in [0, n)
///   InfiniteCyclic:   arbitrary integers
///   Rational:         arbitrary rationals (the additive group of Q, which is
///                     the union of all its cyclic subgroups)
/// The identity is exponent 0 in every context.
enum class GroupKind { FiniteCyclic, InfiniteCyclic, Rational };

class GroupContext {
public:
    static GroupContext finite(const Int& n) {
        if (n < 1) throw std::invalid_argument("group order must be positive");
        return GroupContext(GroupKind::FiniteCyclic, n);
    }
    static GroupContext infinite() { return GroupContext(GroupKind::InfiniteCyclic, 0); }
    static GroupContext rational() { return GroupContext(GroupKind::Rational, 0); }

    GroupKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == GroupKind::FiniteCyclic; }
    bool is_torsion_free() const { return kind_ != GroupKind::FiniteCyclic; }

    /// Group order; only meaningful for FiniteCyclic.
    const Int& order() const {
        if (!is_finite()) throw std::domain_error("order of an infinite group");
        return order_;
    }

    /// True when e is a well-formed exponent for this context: integral unless
    /// the context is Rational. Canonical form is not required.
    bool admits(const Rat& e) const {
        return kind_ == GroupKind::Rational || is_integral(e);
    }

    /// Canonical exponent: residue in [0, n) for finite groups, unchanged
    /// otherwise. Throws if e is not admitted.
    Rat reduce(const Rat& e) const {
        if (!admits(e)) throw std::invalid_argument("non-integral exponent in an integral group");
        if (is_finite()) return Rat(floor_mod(rat_num(e), order_));
        return e;
    }

    Rat add(const Rat& a, const Rat& b) const { return reduce(reduce(a) + reduce(b)); }
    Rat negate(const Rat& a) const { return reduce(-reduce(a)); }

    /// m-fold sum of a with itself (the image of a under x -> x^m in
    /// multiplicative notation).
    Rat scale(const Int& m, const Rat& a) const { return reduce(Rat(m) * reduce(a)); }

    bool operator==(const GroupContext& o) const {
        return kind_ == o.kind_ && order_ == o.order_;
    }
    bool operator!=(const GroupContext& o) const { return !(*this == o); }

    std::string name() const {
        switch (kind_) {
        case GroupKind::FiniteCyclic: return "Z/" + order_.str();
        case GroupKind::InfiniteCyclic: return "Z";
        case GroupKind::Rational: return "Q";
        }
        return "?";
    }

private:
    GroupContext(GroupKind k, Int n) : kind_(k), order_(std::move(n)) {}

    GroupKind kind_;
    Int order_;
};

/// Throws unless both operands live in the same group.
inline void require_same_context(const GroupContext& a, const GroupContext& b) {
    if (a != b) throw std::invalid_argument("mixed group contexts");
}

} // namespace schur
