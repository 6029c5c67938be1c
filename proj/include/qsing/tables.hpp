#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsing/criteria.hpp"
#include "qsing/residue.hpp"

namespace qsing {

struct UnsupportedFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableRow {
    CyclicAction action;  // canonical form
    Verdict verdict;
    std::optional<ResidueValue> residue;
};

enum class TableFormat { Csv, Json, Pretty };

// All isomorphism classes of small actions with the given (n, d), as canonical
// forms, lex-sorted, each class once.
std::vector<CyclicAction> enumerate_classes(long n, int d);

std::vector<TableRow> build_table(long n_lo, long n_hi, int d, bool with_residue);

// CSV: columns n,t,verdict[,residue], t hyphen-joined, residue "inf" when
// infinite. JSON: array of {n, t, verdict, residue?}. LF endings, trailing
// newline.
std::string emit(const std::vector<TableRow>& rows, TableFormat format);

// Inverse of emit(..., Json); residues come back as values only (no ledgers).
std::vector<TableRow> parse_table_json(const std::string& text);

}  // namespace qsing
