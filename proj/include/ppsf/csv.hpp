#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ppsf/errors.hpp"

namespace ppsf {

/// %.{precision}g rendering; precision counts significant digits so that
/// near-zero eigenvalues survive serialization. Deterministic for identical
/// doubles, which is what the byte-identical-output contract rests on.
inline std::string format_number(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

/// Line-buffered CSV writer with Unix newlines. Throws io_error on any stream
/// failure, with the path in the message.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& header)
        : path_(path), out_(path, std::ios::binary) {
        if (!out_) throw io_error("cannot open for writing: " + path.string());
        line(header);
    }

    void line(const std::string& s) {
        out_ << s << '\n';
        if (!out_) throw io_error("write failed: " + path_.string());
    }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

} // namespace ppsf
