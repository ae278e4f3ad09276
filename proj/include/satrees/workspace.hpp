#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "satrees/family.hpp"

namespace satrees {

/// Named objects over a single ring. Names are unique across kinds and
/// distinct from the ring variables.
struct Workspace {
    RingCtx ring;
    std::map<std::string, MonomialIdeal> ideals;
    std::map<std::string, SparsePoly> polys;
    std::map<std::string, IdealFamily> families;

    bool operator==(const Workspace&) const = default;
};

/// Line-oriented grammar with '#' comments:
///   ring NAME+                       (exactly once, first)
///   ideal NAME = term ("," term)*    term: product of VAR('^'INT)? factors
///   poly NAME = signed terms         integer or p/q coefficients
///   family NAME = [IDEAL+] sat (m | POLY+)
/// Errors carry line and column.
Workspace parse_workspace(std::istream& in);
Workspace parse_workspace_text(const std::string& text);

/// Deterministic rendering; reparsing yields an equal workspace.
std::string print_workspace(const Workspace& ws);

} // namespace satrees
