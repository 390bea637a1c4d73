#include <doctest.h>

#include <schur/subgroup.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace schur;

namespace {
const GroupContext Z = GroupContext::infinite();
const GroupContext Q = GroupContext::rational();

/// Fragment ring whose span contains exactly the given singleton classes.
SchurRing singleton_fragment(const GroupContext& ctx, const std::vector<Rat>& exps) {
    std::vector<std::vector<Rat>> classes;
    for (const Rat& e : exps) classes.push_back({e});
    return SchurRing(Partition::class_list(ctx, classes));
}
} // namespace

TEST_CASE("subgroup descriptors canonicalize their generator") {
    SubgroupDescriptor a(GroupContext::finite(12), 8);
    CHECK(a.generator() == Rat(4)); // gcd(8,12)
    SubgroupDescriptor b(GroupContext::finite(12), 5);
    CHECK(b.generator() == Rat(1)); // a unit generates everything
    SubgroupDescriptor c(GroupContext::finite(12), 12);
    CHECK(c.generator() == Rat(0));
    CHECK(c.is_trivial());
    SubgroupDescriptor d(Z, -6);
    CHECK(d.generator() == Rat(6));
    SubgroupDescriptor e(Q, Rat(-3, 4));
    CHECK(e.generator() == Rat(3, 4));
    CHECK_THROWS_AS(SubgroupDescriptor(Z, Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("subgroup membership and enumeration") {
    SubgroupDescriptor H(GroupContext::finite(12), 2);
    CHECK(H.contains(6));
    CHECK(!H.contains(7));
    CHECK(H.elements() == std::vector<Rat>{Rat(0), Rat(2), Rat(4), Rat(6), Rat(8), Rat(10)});

    SubgroupDescriptor T(GroupContext::finite(12), 0);
    CHECK(T.contains(0));
    CHECK(!T.contains(4));
    CHECK(T.elements() == std::vector<Rat>{Rat(0)});

    SubgroupDescriptor QH(Q, Rat(3, 4));
    CHECK(QH.contains(Rat(3, 2)));
    CHECK(QH.contains(Rat(-9, 4)));
    CHECK(!QH.contains(Rat(1, 2)));
    CHECK_THROWS_AS(QH.elements(), std::domain_error);
}

TEST_CASE("is_s_subgroup detects straddling classes") {
    SchurRing sym12 = symmetric_ring(GroupContext::finite(12));
    CHECK(is_s_subgroup(sym12, SubgroupDescriptor(GroupContext::finite(12), 2)));
    CHECK(is_s_subgroup(sym12, SubgroupDescriptor(GroupContext::finite(12), 3)));
    CHECK(is_s_subgroup(sym12, SubgroupDescriptor(GroupContext::finite(12), 0)));

    SchurRing triv4 = trivial_ring(GroupContext::finite(4));
    CHECK(!is_s_subgroup(triv4, SubgroupDescriptor(GroupContext::finite(4), 2)));
}

TEST_CASE("generated_subgroup is the gcd of the support") {
    SchurRing RZ = singleton_fragment(Z, {Rat(4), Rat(6), Rat(-4), Rat(-6)});
    RingElement alpha = RingElement::monomial(Z, 1, 4) + RingElement::monomial(Z, 1, 6);
    CHECK(generated_subgroup(RZ, alpha).generator() == Rat(2));

    SchurRing G12 = orbit_ring(12, {1});
    RingElement beta(GroupContext::finite(12), {{Rat(4), Rat(1)}, {Rat(6), Rat(1)}});
    SubgroupDescriptor H = generated_subgroup(G12, beta);
    CHECK(H.generator() == Rat(2));
    CHECK(H.elements().size() == 6);

    SchurRing RQ = singleton_fragment(Q, {Rat(3, 2), Rat(9, 4), Rat(-3, 2), Rat(-9, 4)});
    RingElement gamma =
        RingElement::monomial(Q, 1, Rat(3, 2)) + RingElement::monomial(Q, 1, Rat(9, 4));
    CHECK(generated_subgroup(RQ, gamma).generator() == Rat(3, 4));

    CHECK_THROWS_AS(generated_subgroup(G12, RingElement::zero(GroupContext::finite(12))),
                    std::invalid_argument);
    CHECK_THROWS_AS(generated_subgroup(G12, gamma), std::invalid_argument); // context mismatch
}

TEST_CASE("generated_subgroup matches the iterated-sumset closure") {
    gen::Rng rng(20240831);
    std::uniform_int_distribution<int> nd(2, 20);
    for (int iter = 0; iter < 20; ++iter) {
        Int n = nd(rng);
        GroupContext ctx = GroupContext::finite(n);
        SchurRing G = orbit_ring(n, {1});
        RingElement alpha = gen::random_element(rng, ctx);
        SubgroupDescriptor H = generated_subgroup(G, alpha);
        std::set<Rat> fix = oracle::subgroup_by_sumsets(ctx, support(alpha));
        std::vector<Rat> members = H.elements();
        std::set<Rat> listed(members.begin(), members.end());
        CHECK(listed == fix);
    }
}

TEST_CASE("stabilizer finds the shift period") {
    GroupContext Z6 = GroupContext::finite(6);
    SchurRing sym6 = symmetric_ring(Z6);
    RingElement alpha = RingElement::one(Z6) + RingElement::monomial(Z6, 1, 3);
    SubgroupDescriptor H = stabilizer(sym6, alpha);
    CHECK(H.generator() == Rat(3));
    CHECK(H.elements() == std::vector<Rat>{Rat(0), Rat(3)});

    RingElement whole = RingElement::simple(Z6, {Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
    SchurRing triv6 = trivial_ring(Z6);
    CHECK(stabilizer(triv6, whole).generator() == Rat(1));

    SchurRing symZ = symmetric_ring(Z, Int(1));
    RingElement pair = RingElement::monomial(Z, 1, 1) + RingElement::monomial(Z, 1, -1);
    CHECK(stabilizer(symZ, pair).is_trivial());

    CHECK(stabilizer(sym6, RingElement::zero(Z6)).generator() == Rat(1)); // everything fixes 0
}

TEST_CASE("subgroup_intersection is the lcm of generators") {
    CHECK(subgroup_intersection(SubgroupDescriptor(Z, 2), SubgroupDescriptor(Z, 3)).generator() ==
          Rat(6));

    GroupContext Z12 = GroupContext::finite(12);
    CHECK(subgroup_intersection(SubgroupDescriptor(Z12, 2), SubgroupDescriptor(Z12, 3)).generator() ==
          Rat(6));
    // <4> intersect <6> = <12> = the trivial subgroup mod 12.
    CHECK(subgroup_intersection(SubgroupDescriptor(Z12, 4), SubgroupDescriptor(Z12, 6)).is_trivial());

    SubgroupDescriptor qa(Q, Rat(1, 2)), qb(Q, Rat(1, 3));
    CHECK(subgroup_intersection(qa, qb).generator() == Rat(1));
    CHECK(subgroup_intersection(qa, qb).generator() ==
          *oracle::rat_lcm_search(Rat(1, 2), Rat(1, 3)));

    CHECK(subgroup_intersection(SubgroupDescriptor(Z, 0), SubgroupDescriptor(Z, 5)).is_trivial());
}

TEST_CASE("restrict_ring re-indexes the classes inside the subgroup") {
    GroupContext Z12 = GroupContext::finite(12);
    SchurRing sym12 = symmetric_ring(Z12);
    SchurRing r = restrict_ring(sym12, SubgroupDescriptor(Z12, 2));
    CHECK(r.partition() == symmetric_ring(GroupContext::finite(6)).partition());

    CHECK(restrict_ring(sym12, SubgroupDescriptor(Z12, 1)).partition() == sym12.partition());

    SchurRing point = restrict_ring(sym12, SubgroupDescriptor(Z12, 0));
    CHECK(point.partition().ctx().order() == 1);
    CHECK(point.partition().size() == 1);

    SchurRing symZ4 = symmetric_ring(Z, Int(4));
    SchurRing rz = restrict_ring(symZ4, SubgroupDescriptor(Z, 2));
    CHECK(rz.partition() == symmetric_ring(Z, Int(2)).partition());

    CHECK_THROWS_WITH_AS(restrict_ring(trivial_ring(GroupContext::finite(4)),
                                       SubgroupDescriptor(GroupContext::finite(4), 2)),
                         doctest::Contains("not an S-subgroup"), std::invalid_argument);
}

TEST_CASE("restriction composes along intersections") {
    GroupContext Z24 = GroupContext::finite(24);
    SchurRing R = symmetric_ring(Z24);
    SubgroupDescriptor H(Z24, 2), K(Z24, 3);

    SchurRing direct = restrict_ring(R, subgroup_intersection(H, K));

    SchurRing RH = restrict_ring(R, H); // over Z/12, H's generator becomes 1
    // K intersect H = <6> in Z/24 coordinates = <3> after dividing by 2.
    SchurRing staged = restrict_ring(RH, SubgroupDescriptor(RH.partition().ctx(), 3));

    CHECK(direct.partition() == staged.partition());
    CHECK(direct.partition() == symmetric_ring(GroupContext::finite(4)).partition());
}

TEST_CASE("rational restriction changes context to the integers") {
    SchurRing RQ = symmetric_ring(Q, std::vector<Rat>{Rat(1, 2), Rat(1)});
    // Classes {0}, {1/2,-1/2}, {1,-1}; the subgroup generated by 1/2 contains all.
    SchurRing r = restrict_ring(RQ, SubgroupDescriptor(Q, Rat(1, 2)));
    CHECK(r.partition().ctx().kind() == GroupKind::InfiniteCyclic);
    CHECK(r.partition().classes() ==
          std::vector<ExpClass>{{Rat(0)}, {Rat(-1), Rat(1)}, {Rat(-2), Rat(2)}});
}
