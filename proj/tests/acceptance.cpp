// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "hdsim/constructions.hpp"
#include "hdsim/containment.hpp"
#include "hdsim/errors.hpp"
#include "hdsim/generators.hpp"
#include "hdsim/solvers.hpp"
#include "hdsim/zielonka.hpp"
#include "support.hpp"
#include "zielonka_oracle.hpp"

using namespace hdsim;
using namespace hdsim::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool run(int id, const char* title, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s [%.2fs]\n", out.ok ? "PASS" : "FAIL", id, title, out.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    return out.ok;
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<DnfFormula> chain_formulas()
{
    std::vector<DnfFormula> out;
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (auto& f : all_dnfs(m, n)) out.push_back(f);
    Rng rng(2024);
    for (int i = 0; i < 60; ++i) out.push_back(random_dnf(rng, 3, 4, 3));
    return out;
}

// Looks for a word (e $ f)... read differently by d and h: prefixes and periods
// are plays of g of at most `rounds` rounds, the period closing a cycle.
bool language_gap(const TwoDimGame& g, const ParityAutomaton& d, const ParityAutomaton& h, int rounds)
{
    const Symbol dollar = static_cast<Symbol>(g.arena.edges.size());
    const auto outs = out_edges(g.arena);
    auto extend = [&](Vertex v, const std::function<bool(Vertex, std::vector<Symbol>)>& visit,
                      const std::vector<Symbol>& w) {
        for (EdgeId e : outs[v]) {
            const Vertex mid = g.arena.edges[e].dst;
            for (EdgeId f : outs[mid]) {
                auto next = w;
                next.insert(next.end(), {e, dollar, f});
                if (visit(g.arena.edges[f].dst, next)) return true;
            }
        }
        return false;
    };
    std::function<bool(Vertex, const std::vector<Symbol>&, int)> from_prefix = [&](Vertex start,
                                                                                   const std::vector<Symbol>& u,
                                                                                   int depth) {
        std::function<bool(Vertex, std::vector<Symbol>, int)> cycle = [&](Vertex v, std::vector<Symbol> w, int k) {
            if (k > 0 && v == start) {
                const UpWord word{u, w};
                if (member_up(d, word) != member_up(h, word)) return true;
            }
            return k < rounds && extend(v, [&](Vertex x, std::vector<Symbol> w2) { return cycle(x, w2, k + 1); }, w);
        };
        if (cycle(start, {}, 0)) return true;
        return depth < rounds &&
               extend(start, [&](Vertex x, std::vector<Symbol> u2) { return from_prefix(x, u2, depth + 1); }, u);
    };
    return from_prefix(g.arena.initial, {}, 0);
}

Outcome equivalence_chain()
{
    const auto t0 = Clock::now();
    const char* names[] = {"2-D enum", "2-D muller", "H simulates D", "HD with det", "1-token", "2-token"};
    int n = 0, mismatches = 0, sat = 0, bad_formulas = 0, explained = 0;
    int per_decider[6] = {};
    for (const auto& f : chain_formulas()) {
        const bool s = brute_sat(f);
        const TwoDimGame g = dnf_to_game(f);
        const auto [d, h] = game_to_automata(g);
        const bool answers[] = {
            solve_2d_enum(g).winner == Player::Eve,
            solve_2d_muller(g) == Player::Eve,
            check_simulation(h, d, TwoDimMethod::Muller),
            check_hd_with_det(h, d),
            solve_token(h, 1) == Player::Eve,
            solve_token(h, 2) == Player::Eve,
        };
        int wrong = 0;
        for (int k = 0; k < 6; ++k) {
            per_decider[k] += answers[k] != s;
            wrong += answers[k] != s;
        }
        if (wrong) {
            ++bad_formulas;
            explained += language_gap(g, d, h, 2);
        }
        mismatches += wrong;
        sat += s;
        ++n;
    }
    const double t = seconds_since(t0);
    std::string by;
    for (int k = 0; k < 6; ++k)
        if (per_decider[k]) by += fmt(" %s=%d", names[k], per_decider[k]);
    return {mismatches == 0 && n >= 50 && t < 120.0,
            fmt("%d formulas (%d satisfiable), 6 deciders each, %d mismatches on %d formulas [%s ]; "
                "L(D)!=L(H) witnessed on %d of those; %.1fs",
                n, sat, mismatches, bad_formulas, by.c_str(), explained, t)};
}

Outcome goodness()
{
    int n = 0, bad = 0;
    for (const auto& f : chain_formulas()) {
        bad += !check_good(dnf_to_game(f));
        ++n;
    }
    TwoDimGame loop;
    loop.arena.owner = {Player::Eve};
    loop.arena.edges = {{0, 0}};
    loop.priority = {{1, 0}};
    loop.max_p1 = 1;
    const bool hand_rejected = !check_good(loop);
    return {bad == 0 && hand_rejected,
            fmt("%d/%d generated games good; self-loop (1,0) rejected: %s", n - bad, n, hand_rejected ? "yes" : "no")};
}

Outcome zielonka_shapes()
{
    const auto t0 = Clock::now();
    std::vector<TreeShape> shapes;
    for (int d = 0; d <= 10; ++d) shapes.push_back(zielonka_shape(build_zielonka(containment_condition(d))));
    const double t = seconds_since(t0);

    bool ok = t < 1.0;
    std::ostringstream leaves;
    int floor_hits = 0, ceil_hits = 0;
    for (int d = 0; d <= 10; ++d) {
        const auto c = containment_condition(d);
        const auto oracle = oracle_tree(c, (std::uint64_t{1} << c.size()) - 1);
        ok = ok && shapes[d].height == d && shapes[d].leaves == oracle_leaves(oracle);
        floor_hits += shapes[d].leaves == d / 2 + 1;
        ceil_hits += shapes[d].leaves == (d + 1) / 2 + 1;
        leaves << (d ? "," : "") << shapes[d].leaves;
    }
    return {ok, fmt("heights 0..10 exact, leaves [%s] match brute tree; floor(d/2)+1 fits %d/11, ceil(d/2)+1 "
                    "fits %d/11; build %.3fs",
                    leaves.str().c_str(), floor_hits, ceil_hits, t)};
}

Outcome dpa_semantics()
{
    std::vector<MullerCondition> conds;
    for (int d = 0; d <= 4; ++d) conds.push_back(containment_condition(d));
    Rng rng(7);
    for (int i = 0; i < 20; ++i) conds.push_back(as_muller_game(random_2d_game(rng, 6, 3, 3)).condition);
    for (int i = 0; i < 20; ++i) conds.push_back(build_token_game_2(random_automaton(rng, 2, 2, 2)).condition);

    int words = 0, mismatches = 0, shape_violations = 0;
    for (const auto& c : conds) {
        const auto t = build_zielonka(c);
        const auto dpa = tree_to_dpa(t, c);
        std::set<int> used;
        for (const auto& tr : dpa.transitions) used.insert(tr.priority);
        shape_violations += dpa.state_count != static_cast<int>(t.leaves.size()) ||
                            static_cast<int>(used.size()) > t.height + 1 || !is_deterministic(dpa) ||
                            !is_complete(dpa);
        for (int k = 0; k < 200; ++k) {
            const auto w = random_up_word(rng, c.size(), 3, 3);
            mismatches += member_up(dpa, w) != c.contains(inf_set(c, w));
            ++words;
        }
    }
    return {mismatches == 0 && shape_violations == 0,
            fmt("%zu conditions, %d words, %d mismatches, %d shape violations", conds.size(), words, mismatches,
                shape_violations)};
}

Outcome solver_cross_validation()
{
    const auto t0 = Clock::now();
    Rng rng(13);
    int parity_dis = 0, twodim_dis = 0;
    for (int i = 0; i < 200; ++i) {
        const auto g = random_parity_game(rng, 6, 5);
        parity_dis += solve_parity_recursive(g).winner != solve_parity_brute(g);
    }
    for (int i = 0; i < 100; ++i) {
        const auto g = random_2d_game(rng, 6, 3, 3);
        twodim_dis += solve_2d_enum(g).winner != solve_2d_muller(g);
    }
    const double t = seconds_since(t0);
    return {parity_dis == 0 && twodim_dis == 0 && t < 60.0,
            fmt("parity 200 games %d disagreements; 2-D 100 games %d disagreements; %.2fs", parity_dis, twodim_dis,
                t)};
}

Outcome buchi_conversion()
{
    Rng rng(17);
    const auto words = all_up_words(2, 2, 2);
    int over = 0, mismatches = 0, max_ratio_num = 0;
    for (int i = 0; i < 100; ++i) {
        const auto a = random_automaton(rng, 3, 2, 4);
        const auto b = parity_to_buchi(a);
        const int d1 = std::max(1, parity_index(a));
        over += b.state_count > a.state_count * d1;
        max_ratio_num = std::max(max_ratio_num, b.state_count);
        for (const auto& w : words) mismatches += member_up(a, w) != member_up(b, w);
    }
    return {over == 0 && mismatches == 0,
            fmt("100 automata, %zu words each, %d size-bound violations, %d mismatches, largest output %d states",
                words.size(), over, mismatches, max_ratio_num)};
}

std::vector<std::pair<ParityAutomaton, ParityAutomaton>> containment_pairs()
{
    std::vector<std::pair<ParityAutomaton, ParityAutomaton>> out;
    const auto a1 = parse_automaton(kA1);
    const auto odd = parse_automaton("pa odd\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 0 1\ntrans 0 b 0 3\nend\n");
    const auto only_b = parse_automaton("pa ob\nalphabet a b\nstates 1\ninitial 0\ntrans 0 b 0 2\nend\n");
    const auto inf_b =
        parse_automaton("pa ib\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 0 1\ntrans 0 b 0 2\nend\n");
    out.push_back({a1, a1});
    out.push_back({odd, a1});
    out.push_back({a1, only_b});
    out.push_back({inf_b, a1});
    out.push_back({a1, inf_b});
    Rng rng(19);
    while (out.size() < 30) out.push_back({random_automaton(rng, 3, 2, 3), random_automaton(rng, 3, 2, 3, true)});
    return out;
}

Outcome containment_pipeline()
{
    int disagreements = 0, prio_viol = 0, vert_viol = 0, layout_viol = 0, yes = 0;
    long long worst_vertices = 0, worst_bound = 0;
    double worst_ratio = 0;
    for (const auto& [a, b] : containment_pairs()) {
        const auto r = check_containment(a, b, true);
        const bool direct = check_simulation(b, parity_to_buchi(a), TwoDimMethod::Enum);
        disagreements += direct != r.contained;
        prio_viol += r.distinct_priorities > r.priority_bound;
        vert_viol += r.game_vertices > r.vertex_bound;
        layout_viol += r.game_vertices > r.layout_bound;
        yes += r.contained;
        const double ratio = static_cast<double>(r.game_vertices) / std::max<long long>(1, r.vertex_bound);
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst_vertices = r.game_vertices;
            worst_bound = r.vertex_bound;
        }
    }
    return {disagreements == 0 && prio_viol == 0 && vert_viol == 0,
            fmt("30 pairs (%d contained), %d disagreements, %d priority-bound and %d vertex-bound violations "
                "(worst %lld vertices vs bound %lld); layout bound (2|S|+1) violated %d times",
                yes, disagreements, prio_viol, vert_viol, worst_vertices, worst_bound, layout_viol)};
}

Outcome reflexivity()
{
    Rng rng(23);
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        const auto x = random_automaton(rng, 3, 2, 3, true);
        failures += !check_simulation(x, x, TwoDimMethod::Muller);
        failures += solve_token(x, 1) != Player::Eve;
        failures += solve_token(x, 2) != Player::Eve;
    }
    return {failures == 0, fmt("100 deterministic automata, %d failures", failures)};
}

} // namespace

int main()
{
    bool ok = true;
    ok &= run(1, "equivalence chain", equivalence_chain);
    ok &= run(2, "goodness", goodness);
    ok &= run(3, "Zielonka shape", zielonka_shapes);
    ok &= run(4, "DPA semantics", dpa_semantics);
    ok &= run(5, "solver cross-validation", solver_cross_validation);
    ok &= run(6, "Buchi conversion", buchi_conversion);
    ok &= run(7, "containment pipeline", containment_pipeline);
    ok &= run(8, "reflexivity", reflexivity);
    return ok ? 0 : 1;
}
