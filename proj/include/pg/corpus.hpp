#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pg/engine.hpp"
#include "pg/graph.hpp"

namespace pg::corpus {

// ---- arithmetic over interaction-net difference lists ----------------------
//
// A number p-q is a closed loop: an I head holding two S chains that meet
// principal-to-principal. reduce annihilates the meet pairwise, negate (an S
// trigger on the head) swaps the lists, open (head-to-head) splices two
// numbers together.

struct NumberSpec {
    long long z = 0;
    int p = 0;
    int q = 0;  // p - q == z
};

PSignature arith_signature();
LocatedGraph encode_number(long long z, int p, int q);
LocatedGraph encode_number(const NumberSpec& n);

// p - q of the (possibly unnormalized) number loop around its unique I head.
long long decode_number(const PortGraph& net);
// (aux-entered, prin-entered) counts of the same walk, i.e. the current p, q.
std::pair<int, int> decode_parts(const PortGraph& net);

LocatedGraph addition_net(const NumberSpec& a, const NumberSpec& b);
LocatedGraph negation_net(const NumberSpec& a);
LocatedGraph subtraction_net(const NumberSpec& a, const NumberSpec& b);

// ---- von Koch ---------------------------------------------------------------

LocatedGraph vonkoch_triangle();
std::string vonkoch_strategy_text(int m, bool with_position_update = true);

// ---- pacman -----------------------------------------------------------------

// Ten-cell corridor: ghost, two empties, pac-man, six pac-dots.
LocatedGraph pacman_board10();
std::string pacman_gameloop_text();
std::vector<std::string> pacman_ghost_rule_names();

// ---- labyrinth --------------------------------------------------------------

struct Maze {
    int width = 0;
    int height = 0;
    int start = 0;      // cell index r*width+c
    int exit_cell = -1;  // -1: no exit
    std::vector<std::pair<int, int>> passages;  // open walls, (lo, hi) cell indices

    int cells() const { return width * height; }
};

Maze make_maze(std::uint64_t seed, int width, int height, int extra_openings, bool with_exit);
Maze crafted_branching_maze();  // reconnecting branches; short path 3 cells, long 7

// Cells on the shortest start-to-exit path (endpoints included), -1 if
// unreachable or no exit.
int bfs_path_cells(const Maze& maze);

LocatedGraph labyrinth_graph(const Maze& maze);
std::string labyrinth_strategy_text();            // Step1 ; copy flush ; Step2
std::string labyrinth_scrambled_strategy_text();  // split order reversed
std::string labyrinth_cleanup_strategy_text();    // optional stuck-Pather cleanup

// ---- manifest-driven case runner -------------------------------------------

struct CorpusCase {
    std::string name;
    std::string graph_file;     // representative instance (may be empty)
    std::string rule_file;
    std::string strategy_file;
    std::uint64_t seed = 0;
    std::vector<std::string> expected;  // expected-property identifiers
};

std::vector<CorpusCase> load_manifest(const std::string& manifest_path,
                                      const std::string& root_dir);

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CaseReport {
    std::string case_name;
    std::vector<PropertyResult> properties;

    bool all_pass() const {
        for (const auto& p : properties)
            if (!p.pass) return false;
        return true;
    }
};

CaseReport run_case(const CorpusCase& c, std::uint64_t seed, const std::string& root_dir);

// Shared helper: parsed rules + designations of one case.
EngineConfig load_case_config(const CorpusCase& c, std::uint64_t seed,
                              const std::string& root_dir);

}  // namespace pg::corpus
