#pragma once

#include <map>
#include <string>
#include <vector>

#include "plab/bialgebra.hpp"
#include "plab/representation.hpp"
#include "plab/yang_baxter.hpp"

namespace plab {

// One `check` or `derive` line from a workspace document.
struct CheckDescriptor {
    std::string op;
    std::vector<std::string> args;
    std::string out;     // target name for derive lines
    bool derive = false;
    int line = 0;
};

// Raw representation data as declared in a document (certified lazily by the
// checks that consume it).
struct RepData {
    std::string algebra;
    int module_dim = 0;
    std::vector<Matrix> rho, phi;
};

// A named collection of objects parsed from one document, in a line-oriented
// format:
//   algebra NAME dim N        followed by `c i j k = p/q` lines (1-based)
//   coalgebra NAME dim N      followed by `d i j k = p/q` lines
//   map NAME from A [dim M]   followed by `row ...` lines (dim(A) rows, M cols)
//   map NAME dim M            square M x M map, followed by `row ...` lines
//   form NAME on A            followed by `row ...` lines
//   rtensor NAME on A         followed by `row ...` lines
//   rep NAME of A dim M       followed by `rho i` / `phi i` blocks of rows
//   check OP ARGS...
//   derive OP ARGS... as NAME
// Blank lines and lines starting with '#' are ignored.
struct Workspace {
    std::vector<std::pair<std::string, std::string>> order; // (kind, name) declaration order
    std::map<std::string, Algebra> algebras;
    std::map<std::string, Coalgebra> coalgebras;
    std::map<std::string, Matrix> maps;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, RTensor> rtensors;
    std::map<std::string, RepData> reps;
    std::vector<CheckDescriptor> directives;
};

// ParseError carries the 1-based line number of the offending line.
Workspace parse_workspace(const std::string& text);

// Canonical text form; parse_workspace(print_workspace(ws)) reproduces ws.
std::string print_workspace(const Workspace& ws);

} // namespace plab
