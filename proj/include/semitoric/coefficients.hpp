#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace semitoric::coeffs {

/// Evaluation context for the coefficient tables.  R, t and rA are treated
/// as independent symbols when evaluating (transcription tests exploit
/// this); mathematical use always passes rA = rA(R,t).
struct TableContext {
    double R;
    double t;
    double rA;
};

/// Evaluate the named coefficient (e.g. "a20", "d100", "alpha021", "hL10").
/// Tables are parsed once from the embedded data on first use.
double eval(std::string_view name, const TableContext& ctx);

bool has(std::string_view name);
std::vector<std::string> names();

/// Replace the embedded tables with a file in the same format
/// (`name : expression` per record, '#' comments).
void load_from_file(const std::string& path);

/// Parse and evaluate a standalone expression in R, t, rA, sqrtR.
double eval_expression(std::string_view expr, const TableContext& ctx);

}  // namespace semitoric::coeffs
