#pragma once

#include "schur_ring.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace schur {

/// Shape of a candidate class of nonzero exponents: a singleton {a}, a
/// symmetric pair {a,-a}, or neither. The representative is reported
/// positive. A Violation carries, when the freshman-intersection scan finds
/// one, an exponent m with C intersect C^(m) neither empty nor all of C;
/// some invalid shapes admit no such witness (every intersection degenerates),
/// so the witness is optional.
struct ClassShapeVerdict {
    enum class Kind { Singleton, SymmetricPair, Violation };
    Kind kind;
    Rat representative;           // meaningful for Singleton/SymmetricPair
    std::optional<Int> witness_m; // meaningful for Violation, when found
};

/// Decides whether C has the shape forced on primitive sets over a
/// torsion-free cyclic group: {a} or {a,-a}. When torsion_free is set, a
/// violation additionally scans the gcd-normalized exponents m (by |m|, then
/// positive first) for a freshman witness: C intersect C^(m) must be empty or
/// C for every class of a ring closed under freshman exponents.
inline ClassShapeVerdict check_class_shape(const std::set<Rat>& C, bool torsion_free) {
    if (C.empty()) throw std::invalid_argument("empty class");
    if (C.count(0)) throw std::invalid_argument("identity belongs to its own class");

    if (C.size() == 1) return {ClassShapeVerdict::Kind::Singleton, rat_abs(*C.begin()), {}};
    if (C.size() == 2) {
        const Rat& a = *C.begin();
        if (C.count(-a)) return {ClassShapeVerdict::Kind::SymmetricPair, rat_abs(a), {}};
    }

    ClassShapeVerdict v{ClassShapeVerdict::Kind::Violation, 0, {}};
    if (!torsion_free) return v;

    Rat g = 0;
    for (const Rat& e : C) g = rat_gcd(g, e);
    std::set<Rat> norm;
    for (const Rat& e : C) norm.insert(e / g);

    std::vector<Int> candidates;
    for (const Rat& e : norm) candidates.push_back(rat_num(e));
    std::sort(candidates.begin(), candidates.end(), [](const Int& a, const Int& b) {
        Int aa = abs(a), ab = abs(b);
        if (aa != ab) return aa < ab;
        return a > b; // positive before negative at equal magnitude
    });
    for (const Int& m : candidates) {
        std::set<Rat> image;
        for (const Rat& e : norm) image.insert(Rat(m) * e);
        std::set<Rat> inter;
        for (const Rat& e : norm)
            if (image.count(e)) inter.insert(e);
        if (!inter.empty() && inter != norm) {
            v.witness_m = m;
            break;
        }
    }
    return v;
}

/// Classification outcome: every class a singleton (the group-ring pattern),
/// every non-identity class a symmetric pair (the symmetric-ring pattern), or
/// inconsistent with both, with a witness.
struct ClassificationVerdict {
    enum class Pattern { GroupRing, Symmetric, Inconsistent };
    Pattern pattern;
    std::string witness; // set for Inconsistent
};

namespace detail {

inline std::string class_shape_witness(const ExpClass& C, const ClassShapeVerdict& v) {
    std::string s = "class " + exp_class_to_string(C) + " is neither a singleton nor a symmetric pair";
    if (v.witness_m)
        s += "; C intersect C^(" + v.witness_m->str() + ") is neither empty nor C";
    return s;
}

/// Freshman images that stay inside the window must be unions of classes
/// (closure under freshman exponents, checkable on the fragment). Returns a
/// witness, or absent when every in-window image passes.
inline std::optional<std::string> window_freshman_defect(const Partition& P) {
    const Int N = P.window_hi();
    for (std::size_t i = 0; i < P.size(); ++i) {
        const ExpClass& C = P.class_at(i);
        for (Int m = -N; m <= N; ++m) {
            std::set<Rat> image;
            bool inside = true;
            for (const Rat& e : C) {
                Rat img = Rat(m) * e;
                if (img < Rat(-N) || Rat(N) < img) {
                    inside = false;
                    break;
                }
                image.insert(img);
            }
            if (!inside) continue;
            if (!is_sset(P, image))
                return "freshman image " + exp_class_to_string(C) + "^(" + m.str() + ") = " +
                       exp_class_to_string(ExpClass(image.begin(), image.end())) +
                       " is not a union of classes";
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Applies the forced structure of rings over the infinite cyclic group to a
/// windowed partition: star-closure, per-class shape, the in-window product
/// and freshman checks, and finally type uniformity across classes. Returns
/// the surviving pattern or the first witness.
inline ClassificationVerdict classify_window(const Partition& P) {
    if (P.ctx().kind() != GroupKind::InfiniteCyclic ||
        P.universe_kind() != UniverseKind::ExplicitWindow)
        throw std::invalid_argument("missing window declaration");

    {
        std::set<ExpClass> family(P.classes().begin(), P.classes().end());
        for (std::size_t i = 0; i < P.size(); ++i) {
            ExpClass starred;
            for (const Rat& e : P.class_at(i)) starred.push_back(-e);
            std::sort(starred.begin(), starred.end());
            if (!family.count(starred))
                return {ClassificationVerdict::Pattern::Inconsistent,
                        exp_class_to_string(P.class_at(i)) + "* = " +
                            exp_class_to_string(starred) + " not a class"};
        }
    }

    auto c0 = class_of(P, 0);
    if (!c0 || c0->size() != 1)
        return {ClassificationVerdict::Pattern::Inconsistent, "identity class is not the singleton {0}"};

    bool any_singleton = false, any_pair = false;
    const ExpClass* first_singleton = nullptr;
    const ExpClass* first_pair = nullptr;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const ExpClass& C = P.class_at(i);
        if (C.size() == 1 && C[0] == 0) continue;
        ClassShapeVerdict v = check_class_shape({C.begin(), C.end()}, true);
        if (v.kind == ClassShapeVerdict::Kind::Violation)
            return {ClassificationVerdict::Pattern::Inconsistent, detail::class_shape_witness(C, v)};
        if (v.kind == ClassShapeVerdict::Kind::Singleton) {
            any_singleton = true;
            if (!first_singleton) first_singleton = &C;
        } else {
            any_pair = true;
            if (!first_pair) first_pair = &C;
        }
    }

    for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = i; j < P.size(); ++j) {
            if (!detail::product_checkable(P, P.class_at(i), P.class_at(j))) continue;
            RingElement prod =
                multiply(RingElement::simple(P.ctx(), {P.class_at(i).begin(), P.class_at(i).end()}),
                         RingElement::simple(P.ctx(), {P.class_at(j).begin(), P.class_at(j).end()}));
            std::string w = detail::splitting_witness(P, i, j, prod);
            if (!w.empty()) return {ClassificationVerdict::Pattern::Inconsistent, w};
        }
    }

    if (auto defect = detail::window_freshman_defect(P))
        return {ClassificationVerdict::Pattern::Inconsistent, *defect};

    if (any_singleton && any_pair)
        return {ClassificationVerdict::Pattern::Inconsistent,
                "classes " + exp_class_to_string(*first_singleton) + " and " +
                    exp_class_to_string(*first_pair) + " mix singleton and symmetric-pair types"};
    return {any_pair ? ClassificationVerdict::Pattern::Symmetric
                     : ClassificationVerdict::Pattern::GroupRing,
            ""};
}

/// TFLC classifier over families of finite classes of nonzero rationals.
/// Each class is reduced along the generator of the cyclic subgroup it
/// generates, shape-checked there, and the family must be type-uniform.
inline ClassificationVerdict classify_rational(const std::vector<std::set<Rat>>& classes) {
    std::set<Rat> seen;
    std::set<std::set<Rat>> family;
    for (const auto& C : classes) {
        if (C.empty()) throw std::invalid_argument("empty class");
        if (C.count(0)) throw std::invalid_argument("identity belongs to its own class");
        for (const Rat& e : C) {
            if (!seen.insert(e).second)
                throw std::invalid_argument("classes overlap at " + rat_to_string(e));
        }
        family.insert(C);
    }
    for (const auto& C : classes) {
        std::set<Rat> starred;
        for (const Rat& e : C) starred.insert(-e);
        if (!family.count(starred)) throw std::invalid_argument("family not negation-closed");
    }

    bool any_singleton = false, any_pair = false;
    const std::set<Rat>* first_singleton = nullptr;
    const std::set<Rat>* first_pair = nullptr;
    for (const auto& C : classes) {
        ClassShapeVerdict v = check_class_shape(C, true);
        ExpClass cls(C.begin(), C.end());
        if (v.kind == ClassShapeVerdict::Kind::Violation)
            return {ClassificationVerdict::Pattern::Inconsistent, detail::class_shape_witness(cls, v)};
        if (v.kind == ClassShapeVerdict::Kind::Singleton) {
            any_singleton = true;
            if (!first_singleton) first_singleton = &C;
        } else {
            any_pair = true;
            if (!first_pair) first_pair = &C;
        }
    }
    if (any_singleton && any_pair) {
        ExpClass a(first_singleton->begin(), first_singleton->end());
        ExpClass b(first_pair->begin(), first_pair->end());
        return {ClassificationVerdict::Pattern::Inconsistent,
                "classes " + exp_class_to_string(a) + " and " + exp_class_to_string(b) +
                    " mix singleton and symmetric-pair types"};
    }
    return {any_pair ? ClassificationVerdict::Pattern::Symmetric
                     : ClassificationVerdict::Pattern::GroupRing,
            ""};
}

} // namespace schur
