#include <doctest.h>

#include <schur/schur_ring.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace schur;

namespace {
const GroupContext Z = GroupContext::infinite();
const GroupContext Z4 = GroupContext::finite(4);
const GroupContext Z5 = GroupContext::finite(5);

Partition z5_symmetric() {
    return Partition::whole_group(Z5, {{Rat(0)}, {Rat(1), Rat(4)}, {Rat(2), Rat(3)}});
}
} // namespace

TEST_CASE("verify accepts the symmetric partition of Z/5") {
    Verdict v = verify_schur_ring(z5_symmetric());
    CHECK(v.ok());
    CHECK(v.status == VerdictStatus::Accept);
}

TEST_CASE("verify rejects a star-open family") {
    Partition P = Partition::whole_group(Z5, {{Rat(0)}, {Rat(1)}, {Rat(2), Rat(3), Rat(4)}});
    Verdict v = verify_schur_ring(P);
    CHECK(!v.ok());
    CHECK(v.axiom == "star-closure");
    CHECK(v.witness.find("{1}") != std::string::npos);
    CHECK(v.witness.find("{4}") != std::string::npos);
}

TEST_CASE("verify accepts the trivial partition of Z/4 with the known table") {
    Partition P = Partition::whole_group(Z4, {{Rat(0)}, {Rat(1), Rat(2), Rat(3)}});
    CHECK(verify_schur_ring(P).status == VerdictStatus::Accept);

    SchurRing R{P};
    StructureTable t = R.structure_constants(1, 1);
    // C-bar^2 = 3 * identity + 2 * C-bar.
    CHECK(t.entries == std::map<std::size_t, Rat>{{0, Rat(3)}, {1, Rat(2)}});
}

TEST_CASE("verify rejects a product that splits a class") {
    Partition P = Partition::whole_group(Z5, {{Rat(0)}, {Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
    Verdict v = verify_schur_ring(P);
    CHECK(!v.ok());
    CHECK(v.axiom == "product-splitting");
    CHECK(v.witness.find("splits class") != std::string::npos);
}

TEST_CASE("verify rejects a non-singleton identity class") {
    Partition P = Partition::whole_group(Z4, {{Rat(0), Rat(2)}, {Rat(1), Rat(3)}});
    Verdict v = verify_schur_ring(P);
    CHECK(!v.ok());
    CHECK(v.axiom == "identity-class");
}

TEST_CASE("window fragments verify as fragments") {
    Partition P = Partition::windowed(Z, -2, 2, {{Rat(0)}, {Rat(1), Rat(-1)}, {Rat(2), Rat(-2)}});
    Verdict v = verify_schur_ring(P);
    CHECK(v.ok());
    CHECK(v.status == VerdictStatus::AcceptFragment);

    // A class list without the identity is a fragment too.
    Partition Q = Partition::class_list(Z, {{Rat(1), Rat(-1)}});
    CHECK(verify_schur_ring(Q).status == VerdictStatus::AcceptFragment);
}

TEST_CASE("SchurRing construction rejects invalid partitions") {
    Partition P = Partition::whole_group(Z5, {{Rat(0)}, {Rat(1)}, {Rat(2), Rat(3), Rat(4)}});
    CHECK_THROWS_WITH_AS(SchurRing{P}, doctest::Contains("not a Schur ring"), std::invalid_argument);
}

TEST_CASE("structure constants of the symmetric ring over Z/5") {
    SchurRing R{z5_symmetric()};
    // (z + z^4)^2 = z^2 + 2 + z^3.
    CHECK(R.structure_constants(1, 1).entries ==
          std::map<std::size_t, Rat>{{0, Rat(2)}, {2, Rat(1)}});
    // (z + z^4)(z^2 + z^3) = the two nonidentity class sums.
    CHECK(R.structure_constants(1, 2).entries ==
          std::map<std::size_t, Rat>{{1, Rat(1)}, {2, Rat(1)}});
    // Identity class multiplies trivially.
    CHECK(R.structure_constants(2, 0).entries == std::map<std::size_t, Rat>{{2, Rat(1)}});
    // Cache returns the identical table again.
    CHECK(R.structure_constants(1, 1).entries ==
          std::map<std::size_t, Rat>{{0, Rat(2)}, {2, Rat(1)}});

    CHECK_THROWS_AS(R.structure_constants(3, 0), std::out_of_range);
}

TEST_CASE("structure constants error when a window pair escapes") {
    SchurRing R = symmetric_ring(Z, Int(2));
    // {2,-2} * {2,-2} reaches exponent 4 outside the window.
    std::size_t idx = 2;
    CHECK(R.partition().class_at(idx) == ExpClass{Rat(-2), Rat(2)});
    CHECK_THROWS_AS(R.structure_constants(idx, idx), std::domain_error);
    // {1,-1} * {1,-1} stays inside.
    CHECK(R.structure_constants(1, 1).entries ==
          std::map<std::size_t, Rat>{{0, Rat(2)}, {2, Rat(1)}});
}

TEST_CASE("conservation and star-pair identities on random small rings") {
    gen::Rng rng(20240821);
    std::uniform_int_distribution<int> nd(2, 16);
    int built = 0;
    while (built < 12) {
        Int n = nd(rng);
        std::set<Int> mult{Int(1 + static_cast<int>(nd(rng)) % (static_cast<int>(n)))};
        if (boost::multiprecision::gcd(*mult.begin(), n) != 1) continue;
        SchurRing R = orbit_ring(n, mult);
        ++built;
        const Partition& P = R.partition();
        for (std::size_t i = 0; i < P.size(); ++i) {
            for (std::size_t j = 0; j < P.size(); ++j) {
                StructureTable t = R.structure_constants(i, j);
                Rat total = 0;
                for (const auto& [k, v] : t.entries) {
                    CHECK(v > 0);
                    CHECK(is_integral(v));
                    total += v * Rat(Int(P.class_at(k).size()));
                }
                CHECK(total == Rat(Int(P.class_at(i).size())) * Rat(Int(P.class_at(j).size())));

                // lambda_{C, D, {0}} = |C| when D = C*, else 0.
                ExpClass istar;
                for (const Rat& e : P.class_at(i)) istar.push_back(P.ctx().negate(e));
                std::sort(istar.begin(), istar.end());
                auto at0 = t.entries.count(0) ? t.entries.at(0) : Rat(0);
                if (P.class_at(j) == istar) CHECK(at0 == Rat(Int(P.class_at(i).size())));
                else CHECK(at0 == Rat(0));
            }
        }
    }
}

TEST_CASE("orbit_ring computes unit-multiplier orbits") {
    SchurRing R = orbit_ring(8, {3});
    CHECK(R.partition().classes() ==
          std::vector<ExpClass>{{Rat(0)}, {Rat(1), Rat(3)}, {Rat(2), Rat(6)}, {Rat(4)}, {Rat(5), Rat(7)}});

    // Multiplier -1 gives the symmetric ring.
    CHECK(orbit_ring(5, {4}).partition() == z5_symmetric());
    CHECK(orbit_ring(5, {Int(-1)}).partition() == z5_symmetric());

    // Multiplier 1 gives the group ring.
    SchurRing G = orbit_ring(6, {1});
    CHECK(G.partition().size() == 6);

    CHECK_THROWS_WITH_AS(orbit_ring(8, {2}), doctest::Contains("non-unit multiplier"),
                         std::invalid_argument);

    // Oracle: every class is the closure orbit of its least member.
    gen::Rng rng(20240822);
    std::uniform_int_distribution<int> nd(2, 24);
    for (int iter = 0; iter < 10; ++iter) {
        Int n = nd(rng);
        std::set<Int> mult;
        for (Int m = 2; m < n; ++m)
            if (boost::multiprecision::gcd(m, n) == 1) { mult.insert(m); break; }
        if (mult.empty()) mult.insert(1);
        SchurRing R2 = orbit_ring(n, mult);
        for (const ExpClass& C : R2.partition().classes()) {
            std::set<Int> got;
            for (const Rat& e : C) got.insert(rat_num(e));
            CHECK(got == oracle::orbit_of(n, mult, rat_num(C.front())));
        }
    }
}

TEST_CASE("symmetric_ring pairs every exponent with its negation") {
    CHECK(symmetric_ring(GroupContext::finite(6)).partition().classes() ==
          std::vector<ExpClass>{{Rat(0)}, {Rat(1), Rat(5)}, {Rat(2), Rat(4)}, {Rat(3)}});
    CHECK(symmetric_ring(GroupContext::finite(2)).partition().classes() ==
          std::vector<ExpClass>{{Rat(0)}, {Rat(1)}});
    CHECK(symmetric_ring(Z, Int(2)).partition().classes() ==
          std::vector<ExpClass>{{Rat(0)}, {Rat(-1), Rat(1)}, {Rat(-2), Rat(2)}});

    SchurRing Q = symmetric_ring(GroupContext::rational(), std::vector<Rat>{Rat(1, 2), Rat(3)});
    CHECK(Q.partition().classes() ==
          std::vector<ExpClass>{{Rat(0)}, {Rat(-1, 2), Rat(1, 2)}, {Rat(-3), Rat(3)}});

    CHECK_THROWS_AS(symmetric_ring(Z), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_ring(GroupContext::finite(5), Int(2)), std::invalid_argument);
}

TEST_CASE("trivial_ring lumps all nonidentity elements") {
    CHECK(trivial_ring(Z4).partition().classes() ==
          std::vector<ExpClass>{{Rat(0)}, {Rat(1), Rat(2), Rat(3)}});
    CHECK(trivial_ring(GroupContext::finite(1)).partition().classes() ==
          std::vector<ExpClass>{{Rat(0)}});
    CHECK_THROWS_WITH_AS(trivial_ring(Z), doctest::Contains("infinite class"), std::domain_error);
}

TEST_CASE("tensor_ring pairs classes by residue pairing") {
    SchurRing R3 = symmetric_ring(GroupContext::finite(3));
    SchurRing R5 = symmetric_ring(GroupContext::finite(5));
    SchurRing T = tensor_ring(R3, R5);
    CHECK(T.partition().ctx().order() == 15);
    REQUIRE(T.partition().size() == 6);
    CHECK(T.partition().classes() ==
          std::vector<ExpClass>{{Rat(0)},
                                {Rat(1), Rat(4), Rat(11), Rat(14)},
                                {Rat(2), Rat(7), Rat(8), Rat(13)},
                                {Rat(3), Rat(12)},
                                {Rat(5), Rat(10)},
                                {Rat(6), Rat(9)}});

    // Cross-check every pairing against the exhaustive CRT table.
    for (const ExpClass& C : R3.partition().classes()) {
        for (const ExpClass& D : R5.partition().classes()) {
            std::set<Rat> expected;
            for (const Rat& c : C)
                for (const Rat& d : D)
                    expected.insert(Rat(oracle::crt_lookup(3, 5, rat_num(c), rat_num(d))));
            bool found = false;
            for (const ExpClass& E : T.partition().classes())
                if (std::set<Rat>(E.begin(), E.end()) == expected) found = true;
            CHECK(found);
        }
    }

    // Group ring x group ring = group ring.
    CHECK(tensor_ring(orbit_ring(2, {1}), orbit_ring(3, {1})).partition().size() == 6);

    // Z/1 is the identity factor.
    SchurRing one = trivial_ring(GroupContext::finite(1));
    CHECK(tensor_ring(R5, one).partition().classes() == R5.partition().classes());

    CHECK_THROWS_WITH_AS(tensor_ring(symmetric_ring(GroupContext::finite(4)),
                                     symmetric_ring(GroupContext::finite(6))),
                         doctest::Contains("coprime"), std::invalid_argument);
}

TEST_CASE("freshman closure holds for unit exponents on orbit rings") {
    gen::Rng rng(20240823);
    std::uniform_int_distribution<int> nd(2, 18);
    for (int iter = 0; iter < 8; ++iter) {
        Int n = nd(rng);
        SchurRing R = orbit_ring(n, {Int(n) - 1});
        for (int k = 0; k < 5; ++k) {
            RingElement alpha = gen::random_span_member(rng, R.partition());
            for (Int m = 1; m < n; ++m) {
                if (boost::multiprecision::gcd(m, n) != 1) continue;
                CHECK(membership_test(R.partition(), freshman(alpha, m)));
            }
        }
    }
}
