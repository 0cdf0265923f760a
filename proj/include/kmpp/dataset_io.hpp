#pragma once

#include <string>
#include <vector>

#include "kmpp/geometry.hpp"

namespace kmpp {

struct CsvOptions {
    char delimiter = ',';
    bool header = true;
    // Columns to drop (identifiers, labels, ...). Names require a header;
    // indices are zero-based positions in the raw file.
    std::vector<std::string> drop_names;
    std::vector<std::size_t> drop_indices;
};

struct LoadSummary {
    std::size_t rows_read = 0;     // data rows in the file (header excluded)
    std::size_t rows_dropped = 0;  // rows with missing or non-numeric cells
    std::vector<std::string> column_names;  // retained columns, when a header exists
};

/// Loads a delimited numeric file. Rows with any missing or non-numeric cell
/// in a retained column are dropped (and counted); rows with the wrong number
/// of fields are a hard error. point_ids records each surviving row's
/// zero-based position among the data rows.
Dataset load_csv(const std::string& path, const CsvOptions& options = {},
                 LoadSummary* summary = nullptr);

/// Writes the dataset with an x0..x{d-1} header and 17-significant-digit
/// floats, so a reload reproduces the matrix bit for bit.
void write_csv(const Dataset& ds, const std::string& path);

}  // namespace kmpp
