#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taxoflow/aggregation.hpp"
#include "taxoflow/term.hpp"

namespace taxoflow {

struct FlowArc {
    int from = 0;
    int to = 0;
    long long capacity = 0;
    double cost = 0.0;
};

// Capacitated, costed digraph with sentinel source/sink and a flow demand.
struct FlowNetwork {
    std::vector<std::string> node_names;  // sentinels print as <source>/<sink>
    int source = -1;
    int sink = -1;
    std::vector<FlowArc> arcs;
    long long demand = 0;
    std::vector<std::string> absent_terms;  // vocabulary not present in the graph

    int node_id(const std::string& name) const;
};

struct FlowAssignment {
    std::vector<long long> flow;  // aligned with FlowNetwork::arcs
    double total_cost = 0.0;
    long long achieved_demand = 0;
    bool demand_infeasible = false;  // max flow fell short of the demand
};

// Final taxonomy: the positive-flow hypernymy edges plus the vocabulary
// terms that received source flow.
struct Taxonomy {
    std::set<std::pair<std::string, std::string>> edges;
    std::set<std::string> covered_terms;
    std::set<std::string> nodes() const;
};

// |({x} union descendants of x in H) intersect V|; 0 when x is not in H.
// Descendants are the nodes with a directed path to x.
int descendants_in_vocab(const HypernymGraph& graph, const std::string& x,
                         const std::set<std::string>& vocabulary);

// Network construction: every H edge becomes an arc with capacity
// |D_x intersect V| and cost 1/w(x, y); each vocabulary term present in H
// gets a unit source arc; each root gets a sink arc. Demand is
// floor(alpha * |V intersect nodes(H)|). Throws when H is cyclic, no root is
// present in H, or alpha is out of (0, 1].
FlowNetwork build_flow_network(const HypernymGraph& graph, const std::vector<Term>& vocabulary,
                               const std::vector<Term>& roots, double alpha);

// Integral min-cost flow of value min(demand, maxflow) via successive
// shortest paths with potentials. Costs are scaled to integers (half-up, by
// cost_scale) internally so optimality is exact.
FlowAssignment min_cost_flow(const FlowNetwork& network, long long cost_scale = 1000000);

// Drops sentinel arcs and keeps positive-flow edges; covered terms are the
// vocabulary terms with unit source flow.
Taxonomy induce_taxonomy(const FlowNetwork& network, const FlowAssignment& assignment);

// Taxonomy TSV: `term<TAB>hypernym`.
void save_taxonomy(std::ostream& out, const Taxonomy& taxonomy);
Taxonomy load_taxonomy(std::istream& in, HeadRule rule = HeadRule::RightHead);
void save_taxonomy_file(const std::string& path, const Taxonomy& taxonomy);
Taxonomy load_taxonomy_file(const std::string& path, HeadRule rule = HeadRule::RightHead);

// Covered-terms sidecar: one term per line.
void save_covered_file(const std::string& path, const Taxonomy& taxonomy);

// Debug dump: `from<TAB>to<TAB>capacity<TAB>cost<TAB>flow`.
void save_flow_dump(std::ostream& out, const FlowNetwork& network,
                    const FlowAssignment& assignment);
void save_flow_dump_file(const std::string& path, const FlowNetwork& network,
                         const FlowAssignment& assignment);

}  // namespace taxoflow
