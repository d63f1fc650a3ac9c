#pragma once

#include <string>

#include "maglap/diffop.hpp"
#include "maglap/expoly.hpp"
#include "maglap/symmetry.hpp"

namespace maglap {

// Deterministic JSON with terms in graded-lex order; complex numbers are
// [re, im] pairs.
std::string to_json(const ExpPoly& f);
std::string to_json(const DiffOp& op);

ExpPoly expoly_from_json(const std::string& text);
DiffOp diffop_from_json(const std::string& text);

// {"A": [[[re,im], ...], ...], "b": [[re,im], ...]}, unitarity checked.
Motion motion_from_json(const std::string& text);

// Complex literal such as "2", "1.5+2i", "-i", "0.25i".
Cplx parse_complex(const std::string& token);

// Comma-separated complex literals; length checked when n >= 0.
Eigen::VectorXcd parse_complex_vector(const std::string& text, int n = -1);

// Shortest decimal that round-trips the value (stable across runs).
std::string format_number(double v);

}  // namespace maglap
