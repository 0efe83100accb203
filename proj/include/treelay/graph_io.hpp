#pragma once

#include <stdexcept>
#include <string>

#include "treelay/multigraph.hpp"

namespace treelay {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Format: first line "n m_pairs", then one line per pair "u v [mult]"
// (mult defaults to 1). '#' starts a comment.
Multigraph read_graph(const std::string& text);

// Pairs sorted lexicographically, mult omitted when 1.
std::string write_graph(const Multigraph& g);

}  // namespace treelay
