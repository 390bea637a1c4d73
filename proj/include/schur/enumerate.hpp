#pragma once

#include "classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace schur {

namespace detail {

/// Set-partition backtracking over the nonzero window exponents, ordered
/// 1,-1,2,-2,...,N,-N; {0} is a fixed singleton class. Calls sink on every
/// full partition.
template <typename Sink>
inline void window_partitions(const Int& N, Sink&& sink) {
    std::vector<Rat> elems;
    for (Int a = 1; a <= N; ++a) {
        elems.push_back(Rat(a));
        elems.push_back(Rat(-a));
    }
    std::vector<std::vector<Rat>> blocks;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == elems.size()) {
            std::vector<std::vector<Rat>> classes{{Rat(0)}};
            classes.insert(classes.end(), blocks.begin(), blocks.end());
            sink(classes);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(elems[i]);
            self(self, i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({elems[i]});
        self(self, i + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

} // namespace detail

/// Enumerates all partitions of the window [-N, N] with {0} a class, keeps
/// those passing every fragment-checkable ring axiom, the per-class shape
/// condition forced by the torsion-free key lemma, and the in-window freshman
/// closure (the type-uniformity conclusion is deliberately not a filter), and
/// returns the distinct restrictions of the survivors to [-core, core]: the
/// classes lying fully inside the core radius, as class-list partitions in a
/// deterministic order. Without the shape condition, straddling classes like
/// {1,-4} whose every cross product escapes the window would survive and
/// contribute spurious bare cores.
inline std::vector<Partition> exhaustive_window_search(const Int& N, const Int& core) {
    if (N < 1 || N > 5) throw std::domain_error("window radius out of range (1..5)");
    if (core < 0 || core > N) throw std::domain_error("core radius out of range (0..N)");

    GroupContext ctx = GroupContext::infinite();
    std::set<std::vector<ExpClass>> cores;
    detail::window_partitions(N, [&](const std::vector<std::vector<Rat>>& classes) {
        Partition P = Partition::windowed(ctx, -N, N, classes);
        if (!verify_schur_ring(P).ok()) return;
        for (const ExpClass& C : P.classes()) {
            if (C.size() == 1 && C[0] == 0) continue;
            if (check_class_shape({C.begin(), C.end()}, true).kind ==
                ClassShapeVerdict::Kind::Violation)
                return;
        }
        if (detail::window_freshman_defect(P)) return;
        std::vector<ExpClass> restricted;
        for (const ExpClass& C : P.classes()) {
            bool inside = true;
            for (const Rat& e : C)
                if (rat_abs(e) > Rat(core)) { inside = false; break; }
            if (inside) restricted.push_back(C);
        }
        cores.insert(restricted);
    });

    std::vector<Partition> out;
    out.reserve(cores.size());
    for (const auto& cls : cores)
        out.push_back(Partition::class_list(ctx, {cls.begin(), cls.end()}));
    return out;
}

namespace detail {

/// Depth-first enumeration state over Z/n. Classes are built on the smallest
/// unassigned residue; the star image of each new class is forced
/// immediately, and completed classes are checked pairwise for product
/// splitting before descending.
class RingEnumerator {
public:
    explicit RingEnumerator(const Int& n) : n_(n), ctx_(GroupContext::finite(n)) {
        std::size_t nn = static_cast<std::size_t>(n_);
        assigned_.assign(nn, false);
        assigned_[0] = true;
        classes_.push_back({Rat(0)});
    }

    std::vector<Partition> run() {
        dfs();
        std::sort(found_.begin(), found_.end(),
                  [](const Partition& a, const Partition& b) { return a.classes() < b.classes(); });
        return found_;
    }

private:
    void dfs() {
        std::size_t r = 0;
        while (r < assigned_.size() && assigned_[r]) ++r;
        if (r == assigned_.size()) {
            Partition P = Partition::whole_group(ctx_, to_raw());
            if (verify_schur_ring(P).status == VerdictStatus::Accept) found_.push_back(P);
            return;
        }

        std::vector<std::size_t> free;
        for (std::size_t e = r + 1; e < assigned_.size(); ++e)
            if (!assigned_[e]) free.push_back(e);

        for (std::size_t mask = 0; mask < (std::size_t(1) << free.size()); ++mask) {
            std::vector<std::size_t> S{r};
            for (std::size_t b = 0; b < free.size(); ++b)
                if (mask & (std::size_t(1) << b)) S.push_back(free[b]);

            std::vector<std::size_t> T;
            for (std::size_t e : S) T.push_back(static_cast<std::size_t>(floor_mod(-Int(e), n_)));
            std::sort(T.begin(), T.end());

            bool same = (T == S);
            if (!same) {
                bool clash = false;
                for (std::size_t e : T)
                    if (assigned_[e] || std::binary_search(S.begin(), S.end(), e)) { clash = true; break; }
                if (clash) continue;
            }

            push_class(S);
            if (!same) push_class(T);
            if (products_split_sofar(same ? 1 : 2)) dfs();
            if (!same) pop_class();
            pop_class();
        }
    }

    void push_class(const std::vector<std::size_t>& members) {
        std::vector<Rat> cls;
        for (std::size_t e : members) {
            assigned_[e] = true;
            cls.push_back(Rat(Int(e)));
        }
        classes_.push_back(cls);
    }

    void pop_class() {
        for (const Rat& e : classes_.back()) assigned_[static_cast<std::size_t>(rat_num(e))] = false;
        classes_.pop_back();
    }

    /// Checks every product pairing one of the newest `fresh` classes with a
    /// completed class: coefficients must be constant on every completed
    /// class. Product coefficients are final once both factors exist, so a
    /// violation here is final too.
    bool products_split_sofar(std::size_t fresh) {
        for (std::size_t i = classes_.size() - fresh; i < classes_.size(); ++i) {
            RingElement ci = RingElement::simple(ctx_, {classes_[i].begin(), classes_[i].end()});
            for (std::size_t j = 0; j <= i; ++j) {
                RingElement prod =
                    multiply(ci, RingElement::simple(ctx_, {classes_[j].begin(), classes_[j].end()}));
                for (const auto& cls : classes_) {
                    const Rat v = prod.coeff(cls.front());
                    for (const Rat& e : cls)
                        if (prod.coeff(e) != v) return false;
                }
            }
        }
        return true;
    }

    std::vector<std::vector<Rat>> to_raw() const {
        std::vector<std::vector<Rat>> raw;
        raw.reserve(classes_.size());
        for (const auto& c : classes_) raw.push_back(c);
        return raw;
    }

    Int n_;
    GroupContext ctx_;
    std::vector<bool> assigned_;
    std::vector<std::vector<Rat>> classes_;
    std::vector<Partition> found_;
};

} // namespace detail

/// All Schur rings over Z/n, by pruned depth-first partition search, in a
/// deterministic canonical order. Guarded at n <= 13 unless forced: the
/// candidate space grows Bell-fast.
inline std::vector<SchurRing> enumerate_schur_rings(const Int& n, bool force = false) {
    if (n < 1) throw std::invalid_argument("group order must be positive");
    if (n > 13 && !force) throw std::domain_error("order above the enumeration guard (13); force to override");
    detail::RingEnumerator en(n);
    std::vector<SchurRing> out;
    for (Partition& P : en.run()) out.emplace_back(std::move(P));
    return out;
}

} // namespace schur
