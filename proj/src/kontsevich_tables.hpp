#pragma once

#include <vector>

namespace mv::detail {

struct RawTableEntry {
    int table;  // 3 or 4
    int g;
    int n;
    const char* kappa;
    const char* terms;  // space-separated "lambda:coef", lambda comma-separated (empty for constants)
};

const std::vector<RawTableEntry>& raw_kontsevich_table();

// Printed entries that contradict both the string recursion and the
// interpolation oracle, with the corrected terms.
struct RawErratum {
    int g;
    int n;
    const char* kappa;
    const char* corrected_terms;
    const char* reason;
};

const std::vector<RawErratum>& raw_kontsevich_errata();

}  // namespace mv::detail
