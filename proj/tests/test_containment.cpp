#include <doctest.h>

#include "hdsim/constructions.hpp"
#include "hdsim/containment.hpp"
#include "hdsim/errors.hpp"
#include "support.hpp"

using namespace hdsim;
using namespace hdsim::testing;

namespace {

void check_bounds(const ContainmentReport& r)
{
    REQUIRE(r.distinct_priorities <= r.priority_bound);
    REQUIRE(r.game_vertices <= r.layout_bound);
}

} // namespace

TEST_CASE("containment examples")
{
    const auto a1 = parse_automaton(kA1);
    CHECK(check_containment(a1, a1, true).contained);
    auto odd = parse_automaton("pa odd\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 0 1\ntrans 0 b 0 3\nend\n");
    CHECK(check_containment(odd, a1, true).contained);

    auto only_b = parse_automaton("pa b\nalphabet a b\nstates 1\ninitial 0\ntrans 0 b 0 2\nend\n");
    auto r = check_containment(a1, only_b, true);
    CHECK_FALSE(r.contained);
    CHECK(check_simulation(only_b, parity_to_buchi(a1), TwoDimMethod::Enum) == r.contained);
    check_bounds(r);
    // 4 state pairs and 10 Eve positions; the constant-free count n1*d1*n2*|alphabet| gives 8
    CHECK(r.game_vertices == 14);
    CHECK(r.vertex_bound == 8);
}

TEST_CASE("containment preconditions")
{
    const auto a1 = parse_automaton(kA1);
    CHECK_THROWS_WITH_AS(check_containment(a1, a1, false), doctest::Contains("assume-hd"), ValidationError);
    auto other = parse_automaton("pa x\nalphabet a c\nstates 1\ninitial 0\ntrans 0 a 0 2\nend\n");
    CHECK_THROWS_WITH_AS(check_containment(a1, other, true), doctest::Contains("alphabet mismatch"),
                         ValidationError);
}

TEST_CASE("containment agrees with enumeration and with sampled words")
{
    Rng rng(101);
    const auto words = all_up_words(2, 2, 2);
    for (int i = 0; i < 40; ++i) {
        auto a = random_automaton(rng, 3, 2, 3);
        auto b = random_automaton(rng, 3, 2, 3, true);
        auto r = check_containment(a, b, true);
        check_bounds(r);
        REQUIRE(check_simulation(b, parity_to_buchi(a), TwoDimMethod::Enum) == r.contained);
        if (r.contained)
            for (const auto& w : words) REQUIRE((!member_up(a, w) || member_up(b, w)));
    }
}

TEST_CASE("containment is reflexive and transitive on deterministic automata")
{
    Rng rng(103);
    for (int i = 0; i < 40; ++i) {
        auto x = random_automaton(rng, 3, 2, 3, true);
        REQUIRE(check_containment(x, x, true).contained);
    }
    // x: infinitely many b; y: every word via priority 2; z: every word via priority 0
    auto x = parse_automaton("pa x\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 0 1\ntrans 0 b 0 2\nend\n");
    auto y = parse_automaton("pa y\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 0 2\ntrans 0 b 0 2\nend\n");
    auto z = parse_automaton("pa z\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 0 0\ntrans 0 b 0 0\nend\n");
    CHECK(check_containment(x, y, true).contained);
    CHECK(check_containment(y, z, true).contained);
    CHECK(check_containment(x, z, true).contained);
    CHECK_FALSE(check_containment(y, x, true).contained);
}
