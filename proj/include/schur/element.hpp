#pragma once

#include "group.hpp"

#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace schur {

/// A finitely supported element alpha = sum_g alpha_g g of the rational group
/// algebra, with group elements named by exponents. Stored sparsely; no zero
/// coefficient is ever kept and every exponent key is canonical for the
/// context. Immutable after construction.
class RingElement {
public:
    explicit RingElement(GroupContext ctx) : ctx_(std::move(ctx)) {}

    /// Builds from (exponent, coefficient) pairs; duplicate exponents combine.
    RingElement(GroupContext ctx, const std::vector<std::pair<Rat, Rat>>& terms)
        : ctx_(std::move(ctx)) {
        for (const auto& [e, c] : terms) accumulate(e, c);
    }

    static RingElement zero(const GroupContext& ctx) { return RingElement(ctx); }

    static RingElement monomial(const GroupContext& ctx, const Rat& coeff, const Rat& exp) {
        RingElement r(ctx);
        r.accumulate(exp, coeff);
        return r;
    }

    /// The multiplicative identity, exponent 0.
    static RingElement one(const GroupContext& ctx) { return monomial(ctx, 1, 0); }

    /// The simple quantity: sum of the elements of C with coefficient 1.
    static RingElement simple(const GroupContext& ctx, const std::set<Rat>& C) {
        RingElement r(ctx);
        for (const Rat& e : C) r.accumulate(e, 1);
        return r;
    }

    const GroupContext& ctx() const { return ctx_; }
    const std::map<Rat, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient at exponent e (0 when absent).
    Rat coeff(const Rat& e) const {
        auto it = terms_.find(ctx_.reduce(e));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// True when every coefficient is 1 (a simple quantity; zero counts, as
    /// the empty sum).
    bool is_simple() const {
        for (const auto& [e, c] : terms_)
            if (c != 1) return false;
        return true;
    }

    bool operator==(const RingElement& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

private:
    void accumulate(const Rat& e, const Rat& c) {
        if (c == 0) return;
        Rat key = ctx_.reduce(e);
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend RingElement linear_combine(const Rat&, const RingElement&, const Rat&, const RingElement&);
    friend RingElement multiply(const RingElement&, const RingElement&);
    friend RingElement hadamard(const RingElement&, const RingElement&);
    friend RingElement star(const RingElement&);
    friend RingElement freshman(const RingElement&, const Int&);
    friend RingElement apply_function(const RingElement&, const std::map<Rat, Rat>&);

    GroupContext ctx_;
    std::map<Rat, Rat> terms_;
};

/// a*alpha + b*beta.
inline RingElement linear_combine(const Rat& a, const RingElement& alpha,
                                  const Rat& b, const RingElement& beta) {
    require_same_context(alpha.ctx(), beta.ctx());
    RingElement r(alpha.ctx());
    for (const auto& [e, c] : alpha.terms()) r.accumulate(e, a * c);
    for (const auto& [e, c] : beta.terms()) r.accumulate(e, b * c);
    return r;
}

/// Convolution product of the group ring: exponents add (mod n when finite).
inline RingElement multiply(const RingElement& alpha, const RingElement& beta) {
    require_same_context(alpha.ctx(), beta.ctx());
    RingElement r(alpha.ctx());
    for (const auto& [e1, c1] : alpha.terms())
        for (const auto& [e2, c2] : beta.terms())
            r.accumulate(alpha.ctx().add(e1, e2), c1 * c2);
    return r;
}

/// Hadamard (circle) product: coefficientwise.
inline RingElement hadamard(const RingElement& alpha, const RingElement& beta) {
    require_same_context(alpha.ctx(), beta.ctx());
    RingElement r(alpha.ctx());
    for (const auto& [e, c] : alpha.terms()) {
        auto it = beta.terms().find(e);
        if (it != beta.terms().end()) r.accumulate(e, c * it->second);
    }
    return r;
}

/// The involution alpha |-> sum alpha_g g^{-1}.
inline RingElement star(const RingElement& alpha) {
    RingElement r(alpha.ctx());
    for (const auto& [e, c] : alpha.terms()) r.accumulate(alpha.ctx().negate(e), c);
    return r;
}

/// Freshman exponent alpha |-> sum alpha_g g^m. With torsion, coefficients at
/// coinciding images sum.
inline RingElement freshman(const RingElement& alpha, const Int& m) {
    RingElement r(alpha.ctx());
    for (const auto& [e, c] : alpha.terms()) r.accumulate(alpha.ctx().scale(m, e), c);
    return r;
}

inline std::set<Rat> support(const RingElement& alpha) {
    std::set<Rat> s;
    for (const auto& [e, c] : alpha.terms()) s.insert(e);
    return s;
}

/// The coefficient complex K(alpha, c) = {g | alpha_g = c}, c nonzero.
inline std::set<Rat> coefficient_complex(const RingElement& alpha, const Rat& c) {
    if (c == 0) throw std::domain_error("zero-level complex not finitely supported");
    std::set<Rat> s;
    for (const auto& [e, v] : alpha.terms())
        if (v == c) s.insert(e);
    return s;
}

/// f[alpha] = sum f(alpha_g) g for a finite value map f; absent exponents stay
/// absent (f(0)=0 implicitly). f must cover every coefficient value of alpha.
inline RingElement apply_function(const RingElement& alpha, const std::map<Rat, Rat>& f) {
    RingElement r(alpha.ctx());
    for (const auto& [e, c] : alpha.terms()) {
        auto it = f.find(c);
        if (it == f.end())
            throw std::invalid_argument("value map undefined at coefficient " + rat_to_string(c));
        r.accumulate(e, it->second);
    }
    return r;
}

inline RingElement operator+(const RingElement& a, const RingElement& b) {
    return linear_combine(1, a, 1, b);
}
inline RingElement operator-(const RingElement& a, const RingElement& b) {
    return linear_combine(1, a, -1, b);
}
inline RingElement operator*(const RingElement& a, const RingElement& b) {
    return multiply(a, b);
}
inline RingElement operator*(const Rat& a, const RingElement& alpha) {
    return linear_combine(a, alpha, 0, RingElement::zero(alpha.ctx()));
}

} // namespace schur
