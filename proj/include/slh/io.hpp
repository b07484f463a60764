#pragma once

#include <stdexcept>
#include <string>

#include "slh/graph.hpp"

namespace slh {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct NamedGraph {
    Graph graph;
    std::string name;
    std::string comment;
};

/// TSPLIB HCP reader: NAME/TYPE/COMMENT/DIMENSION/EDGE_DATA_FORMAT keyword
/// lines (colons optional), then EDGE_DATA_SECTION with 1-based pairs ended
/// by -1, optionally followed by EOF. TYPE must be HCP and the edge data
/// format EDGE_LIST.
NamedGraph parse_tsplib_hcp(const std::string& text);

/// Writer counterpart; edges emitted with u < v in lexicographic order.
std::string write_tsplib_hcp(const Graph& g, const std::string& name,
                             const std::string& comment = "");

/// Plain format: "n m" header, then m lines "u v" (1-based).
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// TSPLIB-style tour: TYPE TOUR, DIMENSION, TOUR_SECTION, one 1-based label
/// per line, -1, EOF.
std::string write_tour(const Cycle& c, const std::string& name);
Cycle read_tour(const std::string& text);

}  // namespace slh
