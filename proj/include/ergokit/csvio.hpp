#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace ergokit {

// CSV with a header row, comma separators, LF endings, floats at 17
// significant digits so every double round-trips.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);
    ~CsvWriter();

    using Cell = std::variant<double, long long, std::string>;
    void row(const std::vector<Cell>& cells);

    static std::string format_double(double x);

private:
    std::ofstream out_;
    std::size_t ncols_;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ergokit
