#include "prab/cli/result_table.hpp"

#include <cstdio>

#include "prab/errors.hpp"

namespace prab::cli {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void ResultTable::write(std::ostream& os) const {
    if (columns.size() != data.size()) throw DimensionMismatch("result table: column count");
    for (const auto& g : data) {
        if (!g.same_grid(data.front())) throw DimensionMismatch("result table: grids differ");
    }
    for (const auto& [k, v] : header) os << "# " << k << ' ' << v << '\n';
    os << 't';
    for (const auto& c : columns) os << ',' << c;
    os << '\n';
    if (data.empty()) return;
    const GridFn& first = data.front();
    for (std::size_t k = 0; k < first.size(); ++k) {
        os << format_number(first.t(k));
        for (const auto& g : data) os << ',' << format_number(g[k]);
        os << '\n';
    }
    if (!os) throw IoError("failed to write result table");
}

}  // namespace prab::cli
