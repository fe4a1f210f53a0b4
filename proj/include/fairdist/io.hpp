#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fairdist/colgen.hpp"
#include "fairdist/graph.hpp"
#include "fairdist/group_fairness.hpp"
#include "fairdist/rational.hpp"

namespace fairdist {

// Parsed graph file: `vertices` (list of labels), `edges` (list of two-label
// pairs), optional `colors` (map label -> color name). Labels are mapped to
// dense ids in sorted-label order, so the same document always yields the
// same graph no matter how the lists are permuted. Color class ids follow
// sorted color-name order; uncolored vertices carry -1.
struct GraphDocument {
    Graph graph;
    bool has_colors = false;
    std::vector<int> color;                // one entry per vertex, -1 = uncolored
    std::vector<std::string> color_names;  // class id -> name
};

GraphDocument read_graph_document(std::istream& in);
GraphDocument read_graph_file(const std::string& path);

// Parsed group-constraint file: `groups` (map name -> element labels),
// optional `absolute` (map name -> [lo, hi]), optional `relative` (list of
// {i, j, ratio} with group names in i/j and the ratio as an exact fraction
// string). Groups are ordered by sorted name; element labels resolve against
// `ground`. Returns the raw constraints; numeric validation happens in
// normalize_constraints on the solve paths.
GroupConstraints read_group_constraints(std::istream& in,
                                        const std::vector<std::string>& ground);
GroupConstraints read_group_constraints_file(const std::string& path,
                                             const std::vector<std::string>& ground);

// Writes the distribution document: `measure`, `value`, `support` (list of
// {member, probability}), `coverage` (map element label -> fraction string),
// `columns_generated`. Every rational is an exact "num/den" string, never a
// decimal. Members are written as label lists resolved through `ground`.
void write_distribution_document(std::ostream& out, const FairnessResult& res,
                                 const std::vector<std::string>& ground);

// A distribution document reduced to what sampling needs: member label lists
// and their exact probabilities, in file order.
struct DistributionDocument {
    std::vector<std::vector<std::string>> members;
    std::vector<Rational> probabilities;
};

DistributionDocument read_distribution_document(std::istream& in);
DistributionDocument read_distribution_file(const std::string& path);

}  // namespace fairdist
