#pragma once

#include "schur_ring.hpp"

#include <stdexcept>
#include <vector>

namespace schur {

/// A cyclic subgroup, stored by canonical generator: the subgroup is the set
/// of multiples of the generator. Generator 0 names the trivial subgroup {0}
/// in every context. Finite contexts store a divisor of n in [0, n); the
/// whole group is generator 1 (or 0 when n = 1).
class SubgroupDescriptor {
public:
    SubgroupDescriptor(GroupContext ctx, const Rat& generator) : ctx_(std::move(ctx)) {
        if (!ctx_.admits(generator))
            throw std::invalid_argument("non-integral subgroup generator in an integral group");
        if (ctx_.is_finite()) {
            Int d = boost::multiprecision::gcd(rat_num(ctx_.reduce(generator)), ctx_.order());
            gen_ = (d == ctx_.order()) ? Rat(0) : Rat(d);
        } else {
            gen_ = rat_abs(generator);
        }
    }

    const GroupContext& ctx() const { return ctx_; }
    const Rat& generator() const { return gen_; }
    bool is_trivial() const { return gen_ == 0; }

    bool contains(const Rat& e) const {
        if (!ctx_.admits(e)) return false;
        Rat r = ctx_.reduce(e);
        if (gen_ == 0) return r == 0;
        return is_integral(r / gen_);
    }

    /// All elements, for finite contexts.
    std::vector<Rat> elements() const {
        if (!ctx_.is_finite()) throw std::domain_error("infinite subgroup enumeration");
        std::vector<Rat> out{Rat(0)};
        if (gen_ == 0) return out;
        for (Rat e = gen_; e < Rat(ctx_.order()); e += gen_) out.push_back(e);
        return out;
    }

    bool operator==(const SubgroupDescriptor& o) const {
        return ctx_ == o.ctx_ && gen_ == o.gen_;
    }
    bool operator!=(const SubgroupDescriptor& o) const { return !(*this == o); }

private:
    GroupContext ctx_;
    Rat gen_;
};

namespace detail {

/// Every class meeting H must lie inside H; returns an offending class index
/// or absent.
inline std::optional<std::size_t> sset_defect(const Partition& P, const SubgroupDescriptor& H) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        bool meets = false, inside = true;
        for (const Rat& e : P.class_at(i)) {
            if (H.contains(e)) meets = true;
            else inside = false;
        }
        if (meets && !inside) return i;
    }
    return std::nullopt;
}

} // namespace detail

/// True when H is an S-subgroup of R's partition: a union of classes.
inline bool is_s_subgroup(const SchurRing& R, const SubgroupDescriptor& H) {
    require_same_context(R.partition().ctx(), H.ctx());
    return !detail::sset_defect(R.partition(), H).has_value();
}

/// The subgroup generated by supp(alpha): gcd of the support exponents (and
/// the group order, when finite). Checked to be an S-subgroup of R.
inline SubgroupDescriptor generated_subgroup(const SchurRing& R, const RingElement& alpha) {
    require_same_context(R.partition().ctx(), alpha.ctx());
    if (alpha.is_zero()) throw std::invalid_argument("generated subgroup of the zero element");
    if (!membership_test(R.partition(), alpha))
        throw std::invalid_argument("element outside the span of the ring");
    const GroupContext& ctx = alpha.ctx();
    Rat g = 0;
    for (const auto& [e, c] : alpha.terms()) g = rat_gcd(g, e);
    if (ctx.is_finite()) g = rat_gcd(g, Rat(ctx.order()));
    SubgroupDescriptor H(ctx, g);
    if (auto defect = detail::sset_defect(R.partition(), H))
        throw std::runtime_error("generated subgroup is not an S-subgroup: class " +
                                 exp_class_to_string(R.partition().class_at(*defect)) +
                                 " straddles it");
    return H;
}

/// stab(alpha) = {g | alpha*g = alpha}, as a cyclic subgroup descriptor.
/// Torsion-free contexts admit no nonzero period, so any nonzero alpha has
/// trivial stabilizer there, returned without search.
inline SubgroupDescriptor stabilizer(const SchurRing& R, const RingElement& alpha) {
    require_same_context(R.partition().ctx(), alpha.ctx());
    if (!membership_test(R.partition(), alpha))
        throw std::invalid_argument("element outside the span of the ring");
    const GroupContext& ctx = alpha.ctx();
    if (!ctx.is_finite()) {
        if (alpha.is_zero()) {
            if (ctx.kind() == GroupKind::Rational)
                throw std::domain_error("stabilizer of zero is the whole group, which is not cyclic");
            return SubgroupDescriptor(ctx, 1);
        }
        return SubgroupDescriptor(ctx, 0);
    }
    Int d = ctx.order();
    for (Int g = 1; g < ctx.order(); ++g) {
        if (multiply(alpha, RingElement::monomial(ctx, 1, Rat(g))) == alpha)
            d = boost::multiprecision::gcd(d, g);
    }
    SubgroupDescriptor H(ctx, Rat(d));
    if (auto defect = detail::sset_defect(R.partition(), H))
        throw std::runtime_error("stabilizer is not an S-subgroup: class " +
                                 exp_class_to_string(R.partition().class_at(*defect)) +
                                 " straddles it");
    return H;
}

/// Intersection of cyclic subgroups: the lcm of the generators (reduced into
/// the group, when finite).
inline SubgroupDescriptor subgroup_intersection(const SubgroupDescriptor& H,
                                                const SubgroupDescriptor& K) {
    require_same_context(H.ctx(), K.ctx());
    if (H.is_trivial() || K.is_trivial()) return SubgroupDescriptor(H.ctx(), 0);
    return SubgroupDescriptor(H.ctx(), rat_lcm(H.generator(), K.generator()));
}

/// S = S restricted to the S-subgroup H: the classes inside H, re-indexed
/// along the isomorphism that sends H's generator to 1. The result lives over
/// Z/(n/d), over Z again (windowed radius floor(N/d)), or over Z for a
/// rational-context H.
inline SchurRing restrict_ring(const SchurRing& R, const SubgroupDescriptor& H) {
    require_same_context(R.partition().ctx(), H.ctx());
    if (auto defect = detail::sset_defect(R.partition(), H))
        throw std::invalid_argument("not an S-subgroup: class " +
                                    exp_class_to_string(R.partition().class_at(*defect)) +
                                    " straddles it");
    const Partition& P = R.partition();
    const GroupContext& ctx = P.ctx();

    if (H.is_trivial())
        return SchurRing(Partition::whole_group(GroupContext::finite(1), {{Rat(0)}}));

    const Rat& d = H.generator();
    std::vector<std::vector<Rat>> classes;
    for (const ExpClass& C : P.classes()) {
        if (!H.contains(C.front())) continue;
        std::vector<Rat> mapped;
        for (const Rat& e : C) mapped.push_back(e / d);
        classes.push_back(mapped);
    }

    if (ctx.is_finite()) {
        Int q = ctx.order() / rat_num(d);
        return SchurRing(Partition::whole_group(GroupContext::finite(q), classes));
    }
    GroupContext zc = GroupContext::infinite();
    if (ctx.kind() == GroupKind::InfiniteCyclic &&
        P.universe_kind() == UniverseKind::ExplicitWindow) {
        Int radius = P.window_hi() / rat_num(d);
        return SchurRing(Partition::windowed(zc, -radius, radius, classes));
    }
    return SchurRing(Partition::class_list(zc, classes));
}

} // namespace schur
