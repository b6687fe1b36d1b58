/*
 * Copyright 2026 The hdsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// hdsim: command-line front end. Prints one "result: <value>" line on stdout.
// Exit codes: 0 answer computed, 2 parse error, 3 validation error, 4 resource limit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <new>
#include <sstream>
#include <string>

#include "hdsim/automaton.hpp"
#include "hdsim/constructions.hpp"
#include "hdsim/containment.hpp"
#include "hdsim/errors.hpp"
#include "hdsim/game.hpp"
#include "hdsim/generators.hpp"
#include "hdsim/solvers.hpp"
#include "hdsim/zielonka.hpp"

namespace {

using namespace hdsim;

bool verbose = false;

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw ValidationError("cannot write " + path);
}

void result(const std::string& value) { std::cout << "result: " << value << "\n"; }
const char* yes_no(bool b) { return b ? "true" : "false"; }

void note(const std::string& line)
{
    if (verbose) std::cerr << line << "\n";
}

TwoDimMethod two_dim_method(const std::string& m) { return m == "enum" ? TwoDimMethod::Enum : TwoDimMethod::Muller; }

std::vector<std::string> split_symbols(const std::string& s)
{
    std::vector<std::string> out;
    if (s == "-" || s.empty()) return out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) {
        if (tok.empty()) throw ParseError("empty symbol in '" + s + "'");
        out.push_back(tok);
    }
    return out;
}

int run(int argc, char** argv)
{
    CLI::App app{"Simulation, history-determinism and containment checks for parity automata"};
    app.require_subcommand(1);
    app.add_flag("--verbose", verbose, "diagnostics on stderr");

    std::string file, file2, out, out_d, out_h, det, method, u, v;
    int sample = 0, k = 0, d2 = 0;
    bool assume_hd = false;

    auto* solve = app.add_subcommand("solve", "solve a game")->require_subcommand(1);
    auto* solve_parity = solve->add_subcommand("parity", "parity game");
    solve_parity->add_option("game", file)->required();
    solve_parity->add_option("--method", method)->check(CLI::IsMember({"recursive", "brute"}));
    auto* solve_2d = solve->add_subcommand("2d", "2-D parity game");
    solve_2d->add_option("game", file)->required();
    solve_2d->add_option("--method", method)->check(CLI::IsMember({"enum", "muller"}));

    auto* sim = app.add_subcommand("sim", "does A simulate B");
    sim->add_option("A", file)->required();
    sim->add_option("B", file2)->required();
    sim->add_option("--method", method)->check(CLI::IsMember({"enum", "muller"}));

    auto* hd = app.add_subcommand("hd", "history-determinism against a deterministic equivalent");
    hd->add_option("H", file)->required();
    hd->add_option("--det", det)->required();
    hd->add_option("--sample", sample)->check(CLI::NonNegativeNumber);

    auto* token = app.add_subcommand("token", "k-token game winner");
    token->add_option("A", file)->required();
    token->add_option("--k", k)->required()->check(CLI::IsMember({1, 2}));

    auto* contains = app.add_subcommand("contains", "is L(A) inside L(B)");
    contains->add_option("A", file)->required();
    contains->add_option("B", file2)->required();
    contains->add_flag("--assume-hd", assume_hd);

    auto* member = app.add_subcommand("member", "membership of u v^omega");
    member->add_option("A", file)->required();
    member->add_option("--u", u)->required();
    member->add_option("--v", v)->required();

    auto* good = app.add_subcommand("good", "is the 2-D game good");
    good->add_option("game", file)->required();

    auto* gen = app.add_subcommand("gen", "instance generators")->require_subcommand(1);
    auto* gen_dnf = gen->add_subcommand("2d-from-dnf", "formula to 2-D game");
    gen_dnf->add_option("formula", file)->required();
    gen_dnf->add_option("-o", out)->required();
    auto* gen_sim = gen->add_subcommand("sim-from-2d", "2-D game to automata D and H");
    gen_sim->add_option("game", file)->required();
    gen_sim->add_option("--out-d", out_d)->required();
    gen_sim->add_option("--out-h", out_h)->required();

    auto* ztree = app.add_subcommand("ztree", "Zielonka tree of the containment condition");
    ztree->add_option("--d", d2)->required()->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    if (solve_parity->parsed()) {
        const ParityGame g = parse_parity_game(slurp(file));
        note("vertices " + std::to_string(g.arena.vertex_count) + ", edges " + std::to_string(g.arena.edges.size()));
        result(to_string(method == "brute" ? solve_parity_brute(g) : solve_parity_recursive(g).winner));
    } else if (solve_2d->parsed()) {
        const TwoDimGame g = parse_two_dim_game(slurp(file));
        result(to_string(method == "enum" ? solve_2d_enum(g).winner : solve_2d_muller(g)));
    } else if (sim->parsed()) {
        const auto a = parse_automaton(slurp(file)), b = parse_automaton(slurp(file2));
        const TwoDimGame g = build_sim_game(a, b);
        note("simulation game: " + std::to_string(g.arena.vertex_count) + " vertices");
        result(yes_no(check_simulation(a, b, two_dim_method(method))));
    } else if (hd->parsed()) {
        HdOptions opt;
        opt.sample = sample;
        result(yes_no(check_hd_with_det(parse_automaton(slurp(file)), parse_automaton(slurp(det)), opt)));
    } else if (token->parsed()) {
        result(to_string(solve_token(parse_automaton(slurp(file)), k)));
    } else if (contains->parsed()) {
        const auto r = check_containment(parse_automaton(slurp(file)), parse_automaton(slurp(file2)), assume_hd);
        note("parity game: " + std::to_string(r.game_vertices) + " vertices (bound " +
             std::to_string(r.vertex_bound) + "), " + std::to_string(r.distinct_priorities) +
             " priorities (bound " + std::to_string(r.priority_bound) + "), tree leaves=" +
             std::to_string(r.shape.leaves) + " height=" + std::to_string(r.shape.height));
        result(yes_no(r.contained));
    } else if (member->parsed()) {
        const auto a = parse_automaton(slurp(file));
        UpWord w{symbols_of(a, split_symbols(u)), symbols_of(a, split_symbols(v))};
        if (w.period.empty()) throw ValidationError("--v must be nonempty");
        result(yes_no(member_up(a, w)));
    } else if (good->parsed()) {
        result(yes_no(check_good(parse_two_dim_game(slurp(file)))));
    } else if (gen_dnf->parsed()) {
        const TwoDimGame g = dnf_to_game(parse_dnf(slurp(file)));
        spill(out, format_game(g));
        result("vertices=" + std::to_string(g.arena.vertex_count) + " edges=" + std::to_string(g.arena.edges.size()));
    } else if (gen_sim->parsed()) {
        const auto pair = game_to_automata(parse_two_dim_game(slurp(file)));
        spill(out_d, format_automaton(pair.d));
        spill(out_h, format_automaton(pair.h));
        result("d_states=" + std::to_string(pair.d.state_count) + " h_states=" + std::to_string(pair.h.state_count));
    } else if (ztree->parsed()) {
        const auto shape = zielonka_shape(build_zielonka(containment_condition(d2)));
        result("leaves=" + std::to_string(shape.leaves) + " height=" + std::to_string(shape.height));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const hdsim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const hdsim::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const hdsim::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return 4;
    }
}
