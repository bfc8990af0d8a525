#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rideshare {

// One intersection of the q-by-q grid.
struct NodeId {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct EdgeSpec {
    NodeId a;
    NodeId b;  // must be a grid neighbour of a
    double weight = 1.0;
};

// Weighted q-by-q grid road network with precomputed all-pairs shortest
// path distances. Distance and travel time are numerically identical
// (unit speed). Immutable after construction; safe for concurrent reads.
class GridNetwork {
public:
    // Uniform edge weight on every grid edge.
    static GridNetwork uniform(int q, double edge_weight = 1.0);

    // Uniform default weight, with listed edges overridden.
    static GridNetwork with_edges(int q, const std::vector<EdgeSpec>& overrides,
                                  double default_weight = 1.0);

    // Override file: one line per edge, `row1,col1,row2,col2,weight`.
    // Blank lines and lines starting with '#' are skipped.
    static GridNetwork from_edge_file(int q, const std::string& path,
                                      double default_weight = 1.0);

    int q() const { return q_; }
    int node_count() const { return n_; }

    bool contains(NodeId v) const {
        return v.row >= 0 && v.row < q_ && v.col >= 0 && v.col < q_;
    }
    int index(NodeId v) const { return v.row * q_ + v.col; }
    NodeId node(int idx) const { return NodeId{idx / q_, idx % q_}; }

    double shortest_len(int a, int b) const { return dist_[static_cast<std::size_t>(a) * n_ + b]; }
    double shortest_len(NodeId a, NodeId b) const;

    // One concrete shortest route from a to b, with a deterministic
    // tie-break: at each step take the viable neighbour with the smallest
    // node index. Returns {a} when a == b.
    std::vector<NodeId> shortest_path(NodeId a, NodeId b) const;

    // Weight of the grid edge between two adjacent nodes.
    double edge_weight(NodeId a, NodeId b) const;

private:
    GridNetwork(int q, double default_weight);
    void set_edge(NodeId a, NodeId b, double w);
    void compute_all_pairs();

    int q_ = 0;
    int n_ = 0;                     // q*q
    std::vector<double> h_w_;       // (r,c)-(r,c+1), index r*(q-1)+c
    std::vector<double> v_w_;       // (r,c)-(r+1,c), index r*q+c
    std::vector<double> dist_;      // n*n shortest path lengths
};

}  // namespace rideshare
