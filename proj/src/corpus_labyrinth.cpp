#include <algorithm>
#include <queue>
#include <random>

#include "pg/corpus.hpp"
#include "pg/errors.hpp"

namespace pg::corpus {
namespace {

std::pair<int, int> wall(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

bool open_between(const Maze& m, int a, int b) {
    auto w = wall(a, b);
    return std::find(m.passages.begin(), m.passages.end(), w) != m.passages.end();
}

std::vector<int> neighbors(const Maze& m, int cell) {
    std::vector<int> out;
    int r = cell / m.width, c = cell % m.width;
    if (r > 0) out.push_back(cell - m.width);
    if (r + 1 < m.height) out.push_back(cell + m.width);
    if (c > 0) out.push_back(cell - 1);
    if (c + 1 < m.width) out.push_back(cell + 1);
    return out;
}

}  // namespace

Maze make_maze(std::uint64_t seed, int width, int height, int extra_openings, bool with_exit) {
    Maze m;
    m.width = width;
    m.height = height;
    m.start = 0;

    // Depth-first perfect maze.
    std::mt19937_64 rng(seed);
    std::vector<bool> seen(width * height, false);
    std::vector<int> stack = {m.start};
    seen[m.start] = true;
    int last = m.start;
    while (!stack.empty()) {
        int cur = stack.back();
        std::vector<int> fresh;
        for (int nb : neighbors(m, cur))
            if (!seen[nb]) fresh.push_back(nb);
        if (fresh.empty()) {
            stack.pop_back();
            continue;
        }
        int pick = fresh[rng() % fresh.size()];
        m.passages.push_back(wall(cur, pick));
        seen[pick] = true;
        stack.push_back(pick);
        last = pick;
    }

    // Optional reconnecting branches.
    for (int i = 0; i < extra_openings; ++i) {
        int cell = static_cast<int>(rng() % (width * height));
        auto nbs = neighbors(m, cell);
        int nb = nbs[rng() % nbs.size()];
        if (!open_between(m, cell, nb)) m.passages.push_back(wall(cell, nb));
    }
    std::sort(m.passages.begin(), m.passages.end());
    m.passages.erase(std::unique(m.passages.begin(), m.passages.end()), m.passages.end());

    if (with_exit) {
        m.exit_cell = last != m.start ? last : width * height - 1;
        if (m.exit_cell == m.start) m.exit_cell = width * height - 1;
    }
    return m;
}

Maze crafted_branching_maze() {
    // 3x3; start top-left, exit top-right. Short branch heads east (3 cells);
    // the long branch dives south and loops around (7 cells). The scrambled
    // split order prefers single west/south moves, so its lone Pather walks
    // the loop and draws the long path.
    Maze m;
    m.width = 3;
    m.height = 3;
    m.start = 0;
    m.exit_cell = 2;
    m.passages = {wall(0, 1), wall(1, 2),                         // short: 0-1-2
                  wall(0, 3), wall(3, 6), wall(6, 7), wall(7, 8), // long: 0-3-6-7-8-5-2
                  wall(8, 5), wall(5, 2)};
    std::sort(m.passages.begin(), m.passages.end());
    return m;
}

int bfs_path_cells(const Maze& maze) {
    if (maze.exit_cell < 0) return -1;
    std::vector<int> dist(maze.cells(), -1);
    std::queue<int> q;
    dist[maze.start] = 0;
    q.push(maze.start);
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        if (cur == maze.exit_cell) return dist[cur] + 1;
        for (int nb : neighbors(maze, cur)) {
            if (dist[nb] >= 0 || !open_between(maze, cur, nb)) continue;
            dist[nb] = dist[cur] + 1;
            q.push(nb);
        }
    }
    return -1;
}

LocatedGraph labyrinth_graph(const Maze& maze) {
    LocatedGraph lg;
    PSignature& sig = lg.graph.signature;
    sig.entries["Labyrinth"] = {"north", "east", "south", "west", "slot", "mark"};
    sig.entries["Visited"] = {"vnorth", "veast", "vsouth", "vwest", "vslot", "vmark"};
    sig.entries["PATH"] = {"pnorth", "peast", "psouth", "pwest", "pslot", "pmark"};
    sig.entries["ExitMark"] = {"xat"};
    sig.entries["Pather"] = {"ppos", "plist"};
    sig.entries["Drawer"] = {"dpos", "dlist"};
    sig.entries["N"] = {"nprev", "nnext"};
    sig.entries["E"] = {"eprev", "enext"};
    sig.entries["S"] = {"sprev", "snext"};
    sig.entries["W"] = {"wprev", "wnext"};
    sig.entries["cp2"] = {"c2arg", "c2out1", "c2out2"};
    sig.entries["cp3"] = {"c3arg", "c3out1", "c3out2", "c3out3"};
    sig.entries["eps"] = {"earg"};

    auto cell_id = [](int cell) { return static_cast<NodeId>(cell + 1); };
    for (int cell = 0; cell < maze.cells(); ++cell) lg.graph.add_node(cell_id(cell), "Labyrinth");

    for (const auto& [a, b] : maze.passages) {
        if (b == a + 1)  // east-west
            lg.graph.add_edge({cell_id(a), "east"}, {cell_id(b), "west"});
        else  // b is south of a
            lg.graph.add_edge({cell_id(a), "south"}, {cell_id(b), "north"});
    }

    NodeId next = maze.cells() + 1;
    if (maze.exit_cell >= 0) {
        NodeId mark = next++;
        lg.graph.add_node(mark, "ExitMark");
        lg.graph.add_edge({cell_id(maze.exit_cell), "mark"}, {mark, "xat"});
    }
    NodeId pather = next++;
    lg.graph.add_node(pather, "Pather");
    lg.graph.add_edge({pather, "ppos"}, {cell_id(maze.start), "slot"});
    lg.position.members.insert(pather);
    return lg;
}

namespace {

std::string split_chain(bool scrambled) {
    std::vector<std::string> names = {"split4",  "split3a", "split3b", "split3c", "split3d",
                                      "split2a", "split2b", "split2c", "split2d", "split2e",
                                      "split2f", "split1a", "split1b", "split1c", "split1d"};
    if (scrambled) std::reverse(names.begin(), names.end());
    std::string out = names.front();
    for (std::size_t i = 1; i < names.size(); ++i) out += " orelse " + names[i];
    return out;
}

std::string labstrat(bool scrambled) {
    std::string step1 = "while(not(found))do(repeat*(" + split_chain(scrambled) +
                        "); property(name==\"Pather\", graph))min(0)max(-1); found";
    // The split rules leave cp2/cp3 copiers inside the direction lists; they
    // can only fire once P contains them, so the lists are flushed to
    // completion here, before the draw phase consumes them.
    std::string cp_chain =
        "cp2N orelse cp2E orelse cp2S orelse cp2W orelse cp2end orelse "
        "cp3N orelse cp3E orelse cp3S orelse cp3W orelse cp3end";
    std::string flush = "property(name==\"cp2\" or name==\"cp3\", graph); repeat*(" + cp_chain +
                        "); property(name==\"Drawer\", graph)";
    std::string step2 =
        "while(not(done))do(drawN orelse drawE orelse drawS orelse drawW)min(0)max(-1); done";
    return "(" + step1 + "); (" + flush + "); (" + step2 + ")";
}

}  // namespace

std::string labyrinth_strategy_text() { return labstrat(false); }

std::string labyrinth_scrambled_strategy_text() { return labstrat(true); }

std::string labyrinth_cleanup_strategy_text() {
    return "property(name==\"Pather\", graph); repeat*(clearPather); "
           "property(name==\"eps\", graph); "
           "repeat*(epsN orelse epsE orelse epsS orelse epsW orelse epsEnd)";
}

}  // namespace pg::corpus
