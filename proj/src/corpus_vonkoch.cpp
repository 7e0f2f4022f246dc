#include "pg/corpus.hpp"

namespace pg::corpus {

LocatedGraph vonkoch_triangle() {
    LocatedGraph lg;
    lg.graph.signature.entries["K"] = {"kin", "kout"};
    lg.graph.add_node(1, "K");
    lg.graph.add_node(2, "K");
    lg.graph.add_node(3, "K");
    lg.graph.add_edge({1, "kout"}, {2, "kin"});
    lg.graph.add_edge({2, "kout"}, {3, "kin"});
    lg.graph.add_edge({3, "kout"}, {1, "kin"});
    lg.position.members.insert(1);  // exactly one node in P
    return lg;
}

std::string vonkoch_strategy_text(int m, bool with_position_update) {
    std::string rule = with_position_update ? "vonKoch" : "vonKochNoM";
    return "while(" + rule + ")do(" + rule + ")min(0)max(" + std::to_string(m) + ")";
}

}  // namespace pg::corpus
