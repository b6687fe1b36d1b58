#include <doctest.h>

#include "hdsim/errors.hpp"
#include "hdsim/game.hpp"
#include "hdsim/solvers.hpp"
#include "support.hpp"

using namespace hdsim;
using namespace hdsim::testing;

namespace {

ParityGame self_loop(Player who, int p)
{
    ParityGame g;
    g.arena.owner = {who};
    g.arena.edges = {{0, 0}};
    g.priority = {p};
    g.max_priority = p;
    return g;
}

} // namespace

TEST_CASE("validate_game totality and ranges")
{
    CHECK_NOTHROW(validate_game(self_loop(Player::Eve, 0)));

    ParityGame dead;
    dead.arena.vertex_count = 2;
    dead.arena.owner = {Player::Eve, Player::Adam};
    dead.arena.edges = {{0, 1}};
    dead.priority = {0};
    CHECK_THROWS_WITH_AS(validate_game(dead), "dead vertex 1", ValidationError);

    auto high = self_loop(Player::Eve, 7);
    high.max_priority = 5;
    CHECK_THROWS_AS(validate_game(high), ValidationError);

    auto out = self_loop(Player::Eve, 0);
    out.arena.edges = {{0, 3}};
    CHECK_THROWS_AS(validate_game(out), ValidationError);
}

TEST_CASE("dualize flips the winner of a single play")
{
    auto g = self_loop(Player::Eve, 2);
    auto d = dualize_priorities(g);
    CHECK(d.priority[0] == 3);
    CHECK(solve_parity_brute(g) == Player::Eve);
    CHECK(solve_parity_brute(d) == Player::Adam);
    CHECK(dualize_priorities(self_loop(Player::Adam, 0)).priority[0] == 1);
}

TEST_CASE("double dualization keeps the winner")
{
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        auto g = random_parity_game(rng, 6, 5);
        auto dd = dualize_priorities(dualize_priorities(g));
        for (size_t e = 0; e < g.priority.size(); ++e) REQUIRE(dd.priority[e] == g.priority[e] + 2);
        REQUIRE(solve_parity_brute(dd) == solve_parity_brute(g));
    }
}

TEST_CASE("renumbering vertices keeps the winner")
{
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        auto g = random_parity_game(rng, 6, 5);
        auto p = permute_vertices(g, random_permutation(rng, g.arena.vertex_count));
        REQUIRE(solve_parity_recursive(p).winner == solve_parity_recursive(g).winner);
        auto h = random_2d_game(rng, 5, 3, 3);
        auto q = permute_vertices(h, random_permutation(rng, h.arena.vertex_count));
        REQUIRE(solve_2d_enum(q).winner == solve_2d_enum(h).winner);
    }
}

TEST_CASE("game text format")
{
    Rng rng(29);
    for (int i = 0; i < 20; ++i) {
        auto g = random_parity_game(rng, 6, 5);
        REQUIRE(parse_parity_game(format_game(g)) == g);
        auto h = random_2d_game(rng, 6, 3, 3);
        REQUIRE(parse_two_dim_game(format_game(h)) == h);
        REQUIRE(std::holds_alternative<TwoDimGame>(parse_game(format_game(h))));
    }
    const char* text = "pg loop 1\nvertices 1\ninitial 0\nowner 0 E\nedge 0 0 2\nend\n";
    auto g = parse_parity_game(text);
    CHECK(g.arena.vertex_count == 1);
    CHECK(g.priority == std::vector<int>{2});
    CHECK_THROWS_AS(parse_two_dim_game(text), ParseError);
    CHECK_THROWS_AS(parse_parity_game("pg x 1\nvertices 1\ninitial 0\nedge 0 0 2\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_parity_game("pg x 1\nvertices 1\ninitial 0\nowner 0 Q\nedge 0 0 2\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_parity_game("pg x 1\nvertices 2\ninitial 0\nowner 0 E\nowner 1 A\nedge 0 1 0\nend\n"),
                    ValidationError);
}

TEST_CASE("strategy validation")
{
    auto g = self_loop(Player::Eve, 0);
    CHECK_NOTHROW(validate_strategy(g.arena, Player::Eve, PositionalStrategy{{0}}));
    CHECK_THROWS_AS(validate_strategy(g.arena, Player::Eve, PositionalStrategy{{-1}}), ValidationError);
    CHECK_THROWS_AS(validate_strategy(g.arena, Player::Eve, PositionalStrategy{{0, 0}}), ValidationError);
}
