#pragma once

// Problem files: INI-style sections of `key = value` lines, `#` comments.
//
//   [params]        alpha, omega, betas (comma list), theta or thetas
//   [coefficients]  sigma1 .. sigmam: expression or inline table [v0, v1, ...]
//   [forcing]       g: expression or inline table
//   [ic]            e (comma list, n_0 entries)
//   [domain]        T, n_points
//   [psi]           family = identity | affine | exp_sat | power, plus a / lambda / c, p
//   [solver]        picard_tol, max_iters, series_tol, route = picard | const | auto

#include <optional>
#include <string>

#include "prab/const_coeff.hpp"
#include "prab/problem.hpp"
#include "prab/psi.hpp"

namespace prab::cli {

enum class Route { picard, const_coeff, automatic };

const char* route_name(Route r) noexcept;
/// Throws ValidationError for unknown names.
Route parse_route(const std::string& name);

struct ProblemFile {
    ProblemSpec spec;
    SolveConfig cfg;
    Route route = Route::automatic;
    std::optional<PsiFunction> psi;
    std::string psi_description;
    bool single_theta = false;  ///< `theta` given instead of `thetas`
    std::string text;           ///< raw file contents

    /// All sigma constant, a single theta and no psi.
    bool const_eligible() const;
    /// `route` with automatic resolved. Throws ValidationError when const is
    /// requested for an ineligible problem.
    Route resolved_route() const;
    ConstProblem as_const() const;
    PsiProblemSpec as_psi() const;
};

/// Parses and validates. Throws ParseError (with line/column), ValidationError
/// or IoError.
ProblemFile parse_problem_text(const std::string& text);
ProblemFile parse_problem(const std::string& path);

}  // namespace prab::cli
