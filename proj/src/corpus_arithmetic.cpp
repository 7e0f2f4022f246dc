#include "pg/corpus.hpp"
#include "pg/errors.hpp"

namespace pg::corpus {
namespace {

// Appends the A/B chains of one number to g. Returns nothing; ids are caller
// chosen: I at id_head, A chain ids a0.., B chain ids b0..
void build_loop(PortGraph& g, NodeId head, int p, int q, NodeId first_a, NodeId first_b) {
    g.add_node(head, "I");
    for (int i = 0; i < p; ++i) g.add_node(first_a + i, "S");
    for (int i = 0; i < q; ++i) g.add_node(first_b + i, "S");

    if (p > 0) {
        g.add_edge({head, "ileft"}, {first_a, "saux"});
        for (int i = 0; i + 1 < p; ++i)
            g.add_edge({first_a + i, "sprin"}, {first_a + i + 1, "saux"});
    }
    if (q > 0) {
        g.add_edge({head, "iright"}, {first_b, "saux"});
        for (int i = 0; i + 1 < q; ++i)
            g.add_edge({first_b + i, "sprin"}, {first_b + i + 1, "saux"});
    }
    if (p > 0 && q > 0)
        g.add_edge({first_a + p - 1, "sprin"}, {first_b + q - 1, "sprin"});  // the meet
    else if (p > 0)
        g.add_edge({first_a + p - 1, "sprin"}, {head, "iright"});
    else if (q > 0)
        g.add_edge({head, "ileft"}, {first_b + q - 1, "sprin"});
    else
        g.add_edge({head, "ileft"}, {head, "iright"});
}

void position_all(LocatedGraph& lg) {
    for (const auto& n : lg.graph.nodes) lg.position.members.insert(n.id);
}

const Node& unique_head(const PortGraph& net) {
    const Node* head = nullptr;
    for (const auto& n : net.nodes) {
        if (n.name != "I") continue;
        if (head) throw EngineError("decode: net has more than one I head");
        head = &n;
    }
    if (!head) throw EngineError("decode: net has no I head");
    return *head;
}

}  // namespace

PSignature arith_signature() {
    PSignature sig;
    sig.entries["I"] = {"ihead", "ileft", "iright"};
    sig.entries["S"] = {"sprin", "saux"};
    return sig;
}

LocatedGraph encode_number(long long z, int p, int q) {
    if (p < 0 || q < 0 || static_cast<long long>(p) - q != z)
        throw EngineError("encode_number: need p - q == z with p, q >= 0");
    LocatedGraph lg;
    lg.graph.signature = arith_signature();
    build_loop(lg.graph, 1, p, q, 2, 2 + p);
    position_all(lg);
    return lg;
}

LocatedGraph encode_number(const NumberSpec& n) { return encode_number(n.z, n.p, n.q); }

std::pair<int, int> decode_parts(const PortGraph& net) {
    const Node& head = unique_head(net);
    auto entry = net.neighbor_of(PortRef{head.id, "ileft"});
    if (!entry) throw EngineError("decode: head's left port is free");
    int aux_entered = 0;
    int prin_entered = 0;
    std::size_t guard = net.nodes.size() + 2;
    PortRef cur = *entry;
    while (guard--) {
        if (cur.node == head.id) {
            if (cur.port == "iright") return {aux_entered, prin_entered};
            throw EngineError("decode: walk re-entered the head at " + cur.port);
        }
        const Node* s = net.find_node(cur.node);
        if (!s || s->name != "S") throw EngineError("decode: walk left the S chains");
        std::string exit_port;
        if (cur.port == "saux") {
            ++aux_entered;
            exit_port = "sprin";
        } else {
            ++prin_entered;
            exit_port = "saux";
        }
        auto next = net.neighbor_of(PortRef{cur.node, exit_port});
        if (!next) throw EngineError("decode: chain breaks at node " + std::to_string(cur.node));
        cur = *next;
    }
    throw EngineError("decode: walk did not close");
}

long long decode_number(const PortGraph& net) {
    auto [p, q] = decode_parts(net);
    return static_cast<long long>(p) - q;
}

// Addition threads both arguments through bridge heads: the result head I0
// and two bare bridges whose heads are wired onto the argument heads (open
// redexes). Opening splices each argument's loop into the result loop.
LocatedGraph addition_net(const NumberSpec& a, const NumberSpec& b) {
    LocatedGraph lg;
    lg.graph.signature = arith_signature();
    PortGraph& g = lg.graph;

    const NodeId i0 = 1, ih1 = 2, ih2 = 3;
    g.add_node(i0, "I");
    g.add_node(ih1, "I");
    g.add_node(ih2, "I");
    NodeId head1 = 10;
    build_loop(g, head1, a.p, a.q, head1 + 1, head1 + 1 + a.p);
    NodeId head2 = head1 + 1 + a.p + a.q;
    build_loop(g, head2, b.p, b.q, head2 + 1, head2 + 1 + b.p);

    g.add_edge({i0, "ileft"}, {ih1, "iright"});
    g.add_edge({ih1, "ileft"}, {ih2, "iright"});
    g.add_edge({ih2, "ileft"}, {i0, "iright"});
    g.add_edge({ih1, "ihead"}, {head1, "ihead"});
    g.add_edge({ih2, "ihead"}, {head2, "ihead"});

    position_all(lg);
    return lg;
}

LocatedGraph negation_net(const NumberSpec& a) {
    LocatedGraph lg = encode_number(a);
    NodeId trigger = lg.graph.max_node_id() + 1;
    lg.graph.add_node(trigger, "S");
    lg.graph.add_edge({trigger, "sprin"}, {1, "ihead"});
    lg.position.members.insert(trigger);
    return lg;
}

// Like addition, but the second argument's head is reached through an S
// trigger: negate flips it in place, then open splices the flipped number in.
LocatedGraph subtraction_net(const NumberSpec& a, const NumberSpec& b) {
    LocatedGraph lg;
    lg.graph.signature = arith_signature();
    PortGraph& g = lg.graph;

    const NodeId i0 = 1, ih1 = 2, ih2 = 3, trigger = 4;
    g.add_node(i0, "I");
    g.add_node(ih1, "I");
    g.add_node(ih2, "I");
    g.add_node(trigger, "S");
    NodeId head1 = 10;
    build_loop(g, head1, a.p, a.q, head1 + 1, head1 + 1 + a.p);
    NodeId head2 = head1 + 1 + a.p + a.q;
    build_loop(g, head2, b.p, b.q, head2 + 1, head2 + 1 + b.p);

    g.add_edge({i0, "ileft"}, {ih1, "iright"});
    g.add_edge({ih1, "ileft"}, {ih2, "iright"});
    g.add_edge({ih2, "ileft"}, {i0, "iright"});
    g.add_edge({ih1, "ihead"}, {head1, "ihead"});
    g.add_edge({ih2, "ihead"}, {trigger, "saux"});
    g.add_edge({trigger, "sprin"}, {head2, "ihead"});

    position_all(lg);
    return lg;
}

}  // namespace pg::corpus
