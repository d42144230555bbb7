#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3/rational.hpp"

namespace k3::testsupport {

// A table fixture: header row of column labels, then one row per line with
// blank cells where the table has no entry.
struct Fixture {
    std::vector<long> cols;
    std::map<std::pair<long, long>, Integer> cells;  // (row label, col label) -> value
};

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

inline Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    Fixture fx;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields = split_tabs(line);
        if (header) {
            for (size_t i = 1; i < fields.size(); ++i) fx.cols.push_back(std::stol(fields[i]));
            header = false;
            continue;
        }
        long row = std::stol(fields[0]);
        for (size_t i = 1; i < fields.size() && i <= fx.cols.size(); ++i)
            if (!fields[i].empty()) fx.cells[{row, fx.cols[i - 1]}] = Integer(fields[i], 10);
    }
    return fx;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace k3::testsupport
