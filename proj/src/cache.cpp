#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "nimlab/sg.hpp"

namespace nimlab {

namespace {

constexpr const char* kMagic = "grundy-cache";
constexpr const char* kVersion = "v1";

std::string box_string(const std::vector<int>& box) {
    std::string s;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(box[i]);
    }
    return s;
}

int parse_int(std::string_view text, long long line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
        throw cache_parse_error(line, std::string("bad ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

void save_cache(const SgTable& table, std::ostream& out) {
    out << kMagic << ' ' << kVersion << ' ' << table.rules().name() << " n=" << table.n()
        << " box=" << box_string(table.box()) << '\n';
    table.for_each_canonical([&](std::span<const int> cell, std::int32_t value) {
        for (int c : cell) out << c << ' ';
        out << value << '\n';
    });
}

void save_cache(const SgTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw cache_error("cannot open " + path.string() + " for writing");
    save_cache(table, out);
    if (!out) throw cache_error("write failed: " + path.string());
}

SgTable load_cache(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw cache_header_error("empty cache file");
    std::istringstream hs(header);
    std::string magic, version, variant, nfield, boxfield;
    if (!(hs >> magic >> version >> variant >> nfield >> boxfield) || !(hs >> std::ws).eof()) {
        throw cache_header_error("malformed header: '" + header + "'");
    }
    if (magic != kMagic) throw cache_header_error("not a grundy cache: '" + header + "'");
    if (version != kVersion) {
        throw cache_version_error("unsupported cache version '" + version + "'");
    }
    if (nfield.rfind("n=", 0) != 0 || boxfield.rfind("box=", 0) != 0) {
        throw cache_header_error("malformed header: '" + header + "'");
    }
    int n = parse_int(nfield.substr(2), 1, "pile count");
    GameRules rules = rules_from_name(variant, n);

    std::vector<int> box;
    {
        std::istringstream bs(boxfield.substr(4));
        std::string item;
        while (std::getline(bs, item, ',')) box.push_back(parse_int(item, 1, "box bound"));
    }
    if (box.size() != static_cast<std::size_t>(n) + 1) {
        throw cache_header_error("box has " + std::to_string(box.size()) +
                                 " bounds, expected " + std::to_string(n + 1));
    }

    SgTable table(rules, box);
    long long line_no = 1;
    std::string line;
    bool truncated = false;
    table.for_each_canonical([&](std::span<const int> cell, std::int32_t) {
        if (truncated) return;
        if (!std::getline(in, line)) {
            truncated = true;
            return;
        }
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        std::vector<int> row;
        while (ls >> tok) row.push_back(parse_int(tok, line_no, "cell entry"));
        if (row.size() != cell.size() + 1) {
            throw cache_parse_error(line_no, "expected " + std::to_string(cell.size() + 1) +
                                                 " fields, got " + std::to_string(row.size()));
        }
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (row[i] != cell[i]) {
                throw cache_parse_error(line_no, "cell out of order");
            }
        }
        table.set_components(cell, row.back());
    });
    if (truncated) {
        throw cache_truncated_error("cache ends after " + std::to_string(line_no - 1) +
                                    " rows; table is incomplete");
    }
    if (std::getline(in, line)) {
        throw cache_parse_error(line_no + 1, "trailing content after last cell");
    }
    return table;
}

SgTable load_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cache_error("cannot open " + path.string());
    return load_cache(in);
}

SgTable load_cache_expect(std::istream& in, const GameRules& expected) {
    SgTable table = load_cache(in);
    if (table.rules() != expected) {
        throw cache_variant_error("cache holds " + table.rules().name() + " n=" +
                                  std::to_string(table.n()) + ", expected " + expected.name() +
                                  " n=" + std::to_string(expected.n));
    }
    return table;
}

SgTable load_cache_expect(const std::filesystem::path& path, const GameRules& expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cache_error("cannot open " + path.string());
    return load_cache_expect(in, expected);
}

}  // namespace nimlab
