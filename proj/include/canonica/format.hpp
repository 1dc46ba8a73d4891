#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "canonica/irreps.hpp"
#include "canonica/powers.hpp"

namespace canonica {

enum class OutputFormat { Text, Csv, Json };
OutputFormat parse_format(std::string_view name);

// Matrix with string labels, ready for output.
struct LabeledMatrix {
    std::string family;  // l, lstar, k, kstar, standard-to-dual-canonical
    Weight mu;
    Weight nu;
    std::vector<std::string> comments;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<LaurentPoly>> entries;
};

// Coefficient without '*', e.g. "2q^2", "q^3+q".
std::string format_coefficient(const LaurentPoly& p);

LabeledMatrix labeled(const TransitionMatrix& t);
LabeledMatrix labeled(const IrrepMatrix& t);
// Keeps the given labels, in the given order; every label must occur in the matrix.
LabeledMatrix restrict_to(const LabeledMatrix& m, const std::vector<std::string>& labels);

// Text grid: comment lines, mu, nu, labels (or rows/cols), matrix with "." for zero.
std::string format_text(const LabeledMatrix& m);
std::string format_csv(const LabeledMatrix& m);
// {"schema":"canonica/1", "family", "mu", "nu", "rows", "cols", "entries"} with one-space indent.
std::string format_json(const LabeledMatrix& m);
std::string format_matrix(const LabeledMatrix& m, OutputFormat f);

}  // namespace canonica
