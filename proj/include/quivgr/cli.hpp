#pragma once

// Input grammar and the quivgr command line.
//
//   quiver  A<n>:<F|B>^(n-1)      ("A1" and "A1:" both accepted)
//   rep     [a,b](x<k>)?(,...)*   (empty text is the zero representation)
//   dim     d1,d2,...,dn

#include <iosfwd>
#include <string>
#include <vector>

#include "quivgr/quiver.hpp"

namespace quivgr {

TypeAQuiver parse_quiver(const std::string& text);
RepClass parse_rep(const std::string& text, const TypeAQuiver& q);
DimVector parse_dim(const std::string& text, const TypeAQuiver& q);

/// Runs one invocation (arguments after the program name). Reports go to
/// `out`; usage errors and error objects go to `err`. Returns the exit status:
/// 0 when every check passed, 1 on a failed check or invariant, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivgr
