// Internal helper shared by the line-oriented file formats (.vocab, .snap):
// whitespace-separated tokens, '#' comments, blank lines skipped.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sbvr2ocl::lines {

struct RawToken {
    std::string text;
    int col = 0;
};

struct RawLine {
    int line = 0;
    std::vector<RawToken> tokens;
};

inline std::vector<RawLine> split_directives(std::string_view source) {
    std::vector<RawLine> lines;
    int line_no = 1;
    size_t i = 0;
    while (i <= source.size()) {
        size_t eol = source.find('\n', i);
        std::string_view line =
            source.substr(i, (eol == std::string_view::npos ? source.size() : eol) - i);
        RawLine rl;
        rl.line = line_no;
        size_t j = 0;
        while (j < line.size()) {
            if (line[j] == '#') break;
            if (line[j] == ' ' || line[j] == '\t' || line[j] == '\r') {
                ++j;
                continue;
            }
            size_t start = j;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
                   line[j] != '#')
                ++j;
            rl.tokens.push_back({std::string(line.substr(start, j - start)), int(start) + 1});
        }
        if (!rl.tokens.empty()) lines.push_back(std::move(rl));
        if (eol == std::string_view::npos) break;
        i = eol + 1;
        ++line_no;
    }
    return lines;
}

} // namespace sbvr2ocl::lines
