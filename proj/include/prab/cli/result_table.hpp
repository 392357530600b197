#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "prab/grid.hpp"

namespace prab::cli {

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string& bytes);

/// Numbers are written with 17 significant digits so output is byte-stable.
std::string format_number(double x);

/// CSV with a `#`-prefixed header block.
struct ResultTable {
    std::vector<std::pair<std::string, std::string>> header;  ///< key, value
    std::vector<std::string> columns;
    std::vector<GridFn> data;  ///< one per column after t, all on the same grid

    void write(std::ostream& os) const;
};

}  // namespace prab::cli
