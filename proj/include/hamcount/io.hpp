#pragma once

#include <string>
#include <string_view>

#include "hamcount/matrix.hpp"

namespace hamcount {

struct InputGraph {
    enum class Format { matrix, edgelist };

    int n = 0;
    Format format = Format::matrix;
    SquareMatrix matrix;
};

/// Matrix format: first token is n, followed by n*n integer tokens in
/// row-major order, whitespace-separated. Throws ParseError naming line and
/// column on wrong token count, non-integer token, or n < 1.
SquareMatrix parse_matrix(std::string_view text);

/// Edge-list format: header line "n <count>", then one edge per line as
/// "u v" (weight 1) or "u v w". Duplicate lines sum their weights; self
/// loops are permitted (they carry the root/loop weights of the path and
/// tree counts). Absent edges are 0.
SquareMatrix parse_edgelist(std::string_view text);

/// Auto-detects the format: an edge list starts with the literal token "n",
/// a matrix with the dimension.
InputGraph parse_graph(std::string_view text);

/// Matrix text form that parse_matrix() round-trips exactly.
std::string render_matrix(const SquareMatrix& a);

/// Mirrors each directed edge: result(i,j) = a(i,j) + a(j,i) for i != j,
/// diagonal unchanged. Counts on the result include both traversal
/// directions of each undirected cycle.
SquareMatrix mirror_directed_edges(const SquareMatrix& a);

}  // namespace hamcount
