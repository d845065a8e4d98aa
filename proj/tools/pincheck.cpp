// Build-time check: pin Vol H(2g-2) from H(0) alone and require every
// tabulated row up to the given dimension to agree with the pinned values.

#include "mv/volumes.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    int max_d = argc > 1 ? std::atoi(argv[1]) : 6;
    auto rep = mv::pin_minimal_strata(mv::MinimalStratumVolumeTable::anchored(), max_d);
    for (const auto& s : rep.steps)
        if (s.pinned_g >= 0 || !s.consistent)
            std::cout << s.row << ": " << (s.pinned_g >= 0 ? "pinned Vol H(" + std::to_string(2 * s.pinned_g - 2) + ") = " : "")
                      << s.value.to_string() << (s.consistent ? "" : " INCONSISTENT " + s.detail) << "\n";
    auto builtin = mv::MinimalStratumVolumeTable::builtin();
    bool agree = true;
    for (const auto& [g, e] : rep.table.entries())
        if (builtin.has(g) && !(builtin.get(g) == e.value)) {
            std::cout << "pinned Vol H(" << 2 * g - 2 << ") differs from the built-in value\n";
            agree = false;
        }
    std::cout << "minimal-strata pinning up to d=" << max_d << ": " << (rep.consistent && agree ? "consistent" : "INCONSISTENT")
              << std::endl;
    return rep.consistent && agree ? 0 : 1;
}
