#pragma once

#include "cohomotopy/algebra/abelian_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohomotopy::cli {

/// Inclusive integer range; empty when lo > hi.
struct Range {
    int lo = 0;
    int hi = -1;

    static Range parse(const std::string& text);   // "5" or "3..7"
    bool empty() const { return lo > hi; }
};

struct ScanRow {
    char family = 'C';   // 'C' or 'H'
    int n = 0;
    int p = 0;
    int k = 0;
    int m = 0;           // d n - 2p + k + 3
    bool dimension_ok = false;
    bool degree_ok = false;
    std::optional<algebra::FinAbGroup> group;       // pi^m(FP^n; Z_(p)) when resolved
    std::optional<algebra::FinAbGroup> primary;     // its torsion
    std::size_t integral_rank = 0;
};

/// One row per (family, n, prime p, k). Throws RangeTooLarge beyond n <= 64, p <= 31, k <= 64.
std::vector<ScanRow> catalog_scan(char family, Range n, Range p, Range k);

} // namespace cohomotopy::cli
