#include "kmpp/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "kmpp/errors.hpp"

namespace kmpp {

namespace {

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
        if (ch == delimiter) {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    fields.push_back(field);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_value(const std::string& field, double& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    const char* begin = t.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end != begin + t.size()) return false;
    return std::isfinite(out);
}

}  // namespace

Dataset load_csv(const std::string& path, const CsvOptions& options, LoadSummary* summary) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open " + path);
    if (!options.drop_names.empty() && !options.header)
        throw LoadError("dropping columns by name requires a header");

    LoadSummary local;
    std::string line;
    std::size_t raw_columns = 0;
    std::vector<bool> keep;
    std::vector<std::string> names;

    auto build_keep_mask = [&](std::size_t columns) {
        raw_columns = columns;
        keep.assign(columns, true);
        for (std::size_t idx : options.drop_indices) {
            if (idx >= columns)
                throw LoadError("drop column index " + std::to_string(idx) + " out of range");
            keep[idx] = false;
        }
        for (const auto& name : options.drop_names) {
            const auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw LoadError("drop column not found: " + name);
            keep[static_cast<std::size_t>(it - names.begin())] = false;
        }
        std::size_t retained = 0;
        for (bool k : keep) retained += k ? 1 : 0;
        if (retained == 0) throw LoadError("no numeric columns left after drops");
        if (options.header)
            for (std::size_t j = 0; j < columns; ++j)
                if (keep[j]) local.column_names.push_back(names[j]);
        return retained;
    };

    std::size_t d = 0;
    if (options.header) {
        if (!std::getline(in, line)) throw LoadError(path + ": empty file");
        names = split_fields(line, options.delimiter);
        for (auto& name : names) name = trim(name);
        d = build_keep_mask(names.size());
    }

    std::vector<double> data;
    std::vector<std::size_t> ids;
    std::size_t row_number = 0;  // zero-based over data rows
    while (std::getline(in, line)) {
        if (line.empty() && in.peek() == EOF) break;  // trailing newline
        const auto fields = split_fields(line, options.delimiter);
        if (raw_columns == 0) d = build_keep_mask(fields.size());
        if (fields.size() != raw_columns)
            throw LoadError(path + ": row " + std::to_string(row_number + 1) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(raw_columns));
        ++local.rows_read;
        std::vector<double> row;
        row.reserve(d);
        bool ok = true;
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (!keep[j]) continue;
            double v;
            if (!parse_value(fields[j], v)) {
                ok = false;
                break;
            }
            row.push_back(v);
        }
        if (ok) {
            data.insert(data.end(), row.begin(), row.end());
            ids.push_back(row_number);
        } else {
            ++local.rows_dropped;
        }
        ++row_number;
    }

    if (ids.empty()) throw LoadError(path + ": no surviving rows");
    Dataset ds = make_dataset(ids.size(), d, std::move(data));
    ds.point_ids = std::move(ids);
    if (summary) *summary = std::move(local);
    return ds;
}

void write_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw LoadError("cannot write " + path);
    for (std::size_t j = 0; j < ds.d; ++j) {
        if (j) out << ',';
        out << 'x' << j;
    }
    out << '\n';
    char buf[64];
    for (std::size_t i = 0; i < ds.n; ++i) {
        for (std::size_t j = 0; j < ds.d; ++j) {
            if (j) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", ds.data[i * ds.d + j]);
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw LoadError("write failed: " + path);
}

}  // namespace kmpp
