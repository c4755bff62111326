#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lczmbt::testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string sample(const std::string& name) { return read_file(std::string(LCZMBT_SAMPLES_DIR) + "/" + name); }
inline std::string golden(const std::string& name) { return read_file(std::string(LCZMBT_GOLDEN_DIR) + "/" + name); }

}  // namespace lczmbt::testing
