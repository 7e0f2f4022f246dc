#include "pg/corpus.hpp"

namespace pg::corpus {
namespace {

const char* east_port(const std::string& name) {
    if (name == "pac-man") return "pme";
    if (name == "ghost") return "ge";
    if (name == "pacdot") return "de";
    if (name == "empty") return "ee";
    return "ende";
}

const char* west_port(const std::string& name) {
    if (name == "pac-man") return "pmw";
    if (name == "ghost") return "gw";
    if (name == "pacdot") return "dw";
    if (name == "empty") return "ew";
    return "endw";
}

}  // namespace

LocatedGraph pacman_board10() {
    LocatedGraph lg;
    PSignature& sig = lg.graph.signature;
    sig.entries["pac-man"] = {"pmn", "pme", "pms", "pmw"};
    sig.entries["ghost"] = {"gn", "ge", "gs", "gw"};
    sig.entries["pacdot"] = {"dn", "de", "ds", "dw"};
    sig.entries["empty"] = {"en", "ee", "es", "ew"};
    sig.entries["End"] = {"endn", "ende", "ends", "endw"};

    std::vector<std::string> layout = {"ghost", "empty",  "empty",  "pac-man", "pacdot",
                                       "pacdot", "pacdot", "pacdot", "pacdot",  "pacdot"};
    for (std::size_t i = 0; i < layout.size(); ++i)
        lg.graph.add_node(static_cast<NodeId>(i + 1), layout[i]);
    for (std::size_t i = 0; i + 1 < layout.size(); ++i)
        lg.graph.add_edge({static_cast<NodeId>(i + 1), east_port(layout[i])},
                          {static_cast<NodeId>(i + 2), west_port(layout[i + 1])});
    lg.position.members = {1, 4};  // the loop resets P first thing anyway
    return lg;
}

std::vector<std::string> pacman_ghost_rule_names() {
    return {"kill1", "kill2", "moveE1", "moveE2", "moveP1", "moveP2"};
}

std::string pacman_gameloop_text() {
    std::string flee =
        "if(flee1a orelse flee1b)then(flee1a orelse flee1b)"
        "else(try(flee2a orelse flee2b))";
    std::string move = "if(getPacDot)then(getPacDot)else(try(explore))";
    std::string pac_ai =
        "if(nearGhost1 orelse nearGhost2)then(" + flee + ")else(" + move + ")";
    // A try around the last alternative would make ghostAI total and the
    // inner repeat* endless; the bare orelse keeps the priority order and
    // fails once no ghost in P can act.
    std::string g_move =
        "if(moveE1 orelse moveE2)then(moveE1 orelse moveE2)else(moveP1 orelse moveP2)";
    std::string ghost_ai =
        "if(kill1 orelse kill2)then(kill1 orelse kill2)else(" + g_move + ")";
    std::string y = "property(name==\"ghost\" or name==\"pac-man\" or name==\"End\", graph)";
    std::string game_over = "(property(name==\"End\", graph); pnotempty)";
    // P narrows to the ghosts before their loop: a rule application only needs
    // to overlap P somewhere, so with pac-man still in P a freshly moved ghost
    // could kill through the pac-man overlap and act twice in one iteration.
    std::string ghosts_only = "property(name==\"ghost\", graph)";
    return "repeat*(" + y + "; if(" + game_over + ")then(fail)else(" + pac_ai + "; " +
           ghosts_only + "; repeat*(" + ghost_ai + ")))";
}

}  // namespace pg::corpus
