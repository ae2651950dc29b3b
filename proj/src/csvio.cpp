#include "ergokit/csvio.hpp"

#include <cstdio>
#include <stdexcept>

namespace ergokit {

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), ncols_(columns.size()) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

CsvWriter::~CsvWriter() = default;

std::string CsvWriter::format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void CsvWriter::row(const std::vector<Cell>& cells) {
    if (cells.size() != ncols_)
        throw std::runtime_error("CsvWriter: wrong number of cells");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        if (std::holds_alternative<double>(cells[i]))
            out_ << format_double(std::get<double>(cells[i]));
        else if (std::holds_alternative<long long>(cells[i]))
            out_ << std::get<long long>(cells[i]);
        else
            out_ << std::get<std::string>(cells[i]);
    }
    out_ << '\n';
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_text_file: cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_text_file: cannot open " + path);
    out << content;
}

}  // namespace ergokit
