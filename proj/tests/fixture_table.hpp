#pragma once

// Loader for the plain-text oracle tables under tests/data (30 significant
// digits, generated once by gen_fixtures.py).

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

struct FixtureRow {
    std::string name;
    std::vector<double> args;
    double value;
};

inline std::vector<FixtureRow> load_fixture_table(const std::string& filename) {
    const std::string path = std::string(GRATIO_TEST_DATA_DIR) + "/" + filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture table: " + path);
    std::vector<FixtureRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        FixtureRow row;
        ss >> row.name;
        std::vector<double> nums;
        double v;
        while (ss >> v) nums.push_back(v);
        if (row.name.empty() || nums.empty())
            throw std::runtime_error("bad fixture line: " + line);
        row.value = nums.back();
        nums.pop_back();
        row.args = std::move(nums);
        rows.push_back(std::move(row));
    }
    return rows;
}
