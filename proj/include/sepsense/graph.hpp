#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "sepsense/block_structure.hpp"

namespace sepsense {

/// Directed interaction graph over subsystems. Vertices are 0-based in code;
/// CSV serialization is 1-based. Distances are path lengths (edge counts);
/// unreachable pairs are stored with a dedicated sentinel, never a fake count.
class InteractionGraph {
public:
    static constexpr int kUnreachable = -1;

    InteractionGraph(int s, std::vector<std::pair<int, int>> edges, bool symmetric = false);

    int size() const { return s_; }
    bool symmetric() const { return symmetric_; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int from, int to) const;

    /// Shortest directed path length from -> to, or nullopt if unreachable.
    std::optional<int> distance(int from, int to) const;
    bool reachable(int from, int to) const { return dist_(from, to) != kUnreachable; }

    /// Raw distance matrix with kUnreachable sentinels.
    const Eigen::MatrixXi& distance_matrix() const { return dist_; }

private:
    int s_;
    std::vector<std::pair<int, int>> edges_;
    Eigen::MatrixXi dist_;
    bool symmetric_;
};

/// Subsystems {i : i >= j, dist(i, j) <= l}, sorted ascending, plus the
/// flattened state-coordinate indices they own and their total dimension.
struct Neighborhood {
    int j = 0;
    int l = 0;
    std::vector<int> subsystems;
    std::vector<int> coords;
    int dim = 0;  // d_{j,l}
};

/// Exact shell sizes r(l) = max_j |{i : dist(j, i) = l}| for l = 1..s-1,
/// with an optional log-space least-squares fit r(l) ~ C_hat * mu^l.
struct GrowthBound {
    std::vector<int> r;  // r[k] is the shell size at distance k + 1
    std::optional<std::pair<double, double>> fitted_rate;  // (C_hat, mu)

    int at(int l) const { return (l >= 1 && l <= static_cast<int>(r.size())) ? r[l - 1] : 0; }
};

/// Max-abs value of each block of a dense matrix; entry (i, j) > threshold
/// marks block (i, j) as structurally nonzero.
Eigen::MatrixXd block_pattern(const Eigen::MatrixXd& M, const std::vector<int>& row_dims,
                              const std::vector<int>& col_dims);

/// Builds the interaction graph from block-sparsity patterns of (A, B, Q, R).
/// An edge j -> i is present iff
///   A[i,j] != 0, or (m_j > 0 and B[i,j] != 0), or Q[i,j] != 0,
///   or (m_i > 0 and m_j > 0 and R[i,j] != 0),
/// where a pattern entry counts as nonzero above 1e-14.
InteractionGraph build_interaction_graph(const BlockStructure& blocks,
                                         const Eigen::MatrixXd& A_pattern,
                                         const Eigen::MatrixXd& B_pattern,
                                         const Eigen::MatrixXd& Q_pattern,
                                         const Eigen::MatrixXd& R_pattern);

/// Closes the edge set under reversal and recomputes distances.
InteractionGraph symmetrize(const InteractionGraph& g);

Neighborhood neighborhood(const InteractionGraph& g, const BlockStructure& blocks, int j, int l);

GrowthBound growth_bound(const InteractionGraph& g);

/// Sequential graph (path) on s vertices: edges i <-> i+1, dist(i,j) = |i-j|.
InteractionGraph sequential_graph(int s);

/// Graph with a single vertex and no edges (used for dense baselines).
InteractionGraph trivial_graph();

}  // namespace sepsense
