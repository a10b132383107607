#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace snacs {

inline std::vector<std::string> split_tsv(std::string_view line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

}  // namespace snacs
