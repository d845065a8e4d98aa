#pragma once

// Kontsevich polynomials N^kappa_{g,n} from the embedded tables or from the
// interpolation oracle, the string recursion at b_{n+1} = 0, and the wall
// recursion producing 2 V^kappa_{g,n} on walls W_Pi.

#include "mv/arith.hpp"
#include "mv/interpolation.hpp"
#include "mv/polynomial.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace mv {

enum class KontsevichSource {
    Table,
    Interpolate,
    // Table when the entry is tabulated, interpolation otherwise.
    Auto,
    // Reported only: one-face entries from the unicellular closed form, used
    // by Table and Auto for untabulated n = 1 entries.
    ClosedForm,
};

KontsevichSource parse_source(const std::string& s);
std::string to_string(KontsevichSource s);

struct KontsevichEntry {
    int g = 0;
    int n = 0;
    std::vector<int> kappa;  // descending
    EvenPolynomial unlabeled;
    EvenPolynomial labeled;  // |Aut kappa| * unlabeled
    KontsevichSource source = KontsevichSource::Table;  // Table, Interpolate or ClosedForm

    nlohmann::ordered_json to_json() const;
};

struct TableKey {
    int table = 3;
    int g = 0;
    int n = 0;
    std::vector<int> kappa;

    int half_edges() const;  // |kappa|
    std::string to_string() const;  // "N_{g,n}^{[..]}"
};

struct TableErratum {
    TableKey key;
    EvenPolynomial printed;    // labeled, as printed
    EvenPolynomial corrected;  // labeled, returned by the table source
    std::string reason;
};

// All tabulated entries, in table order.
const std::vector<TableKey>& table_entries();
bool has_table_entry(int g, int n, const std::vector<int>& kappa);
// Printed entries replaced by corrected values in the table source.
const std::vector<TableErratum>& table_errata();

// Throws std::invalid_argument when the Euler relation fails, Unavailable
// when the table source lacks the entry (one-face entries are always
// available from the closed form).
KontsevichEntry kontsevich_polynomial(int g, int n, const std::vector<int>& kappa,
                                      KontsevichSource source = KontsevichSource::Auto);

struct StringCheck {
    int g = 0;
    int n = 0;  // the identity relates n+1 and n boundary components
    std::vector<int> kappa;
    EvenPolynomial lhs;  // N_{g,n+1}^kappa(b, 0)
    EvenPolynomial rhs;  // sum_i (kappa_i - 2) N_{g,n}^{kappa with kappa_i - 2}(b)
    bool holds = false;
};

// Checks N_{g,n+1}^kappa(b_1..b_n, 0) against the lowered entries; n >= 1.
StringCheck string_recursion_check(int g, int n, const std::vector<int>& kappa,
                                   KontsevichSource source = KontsevichSource::Auto);
// Tabulated entries (g, n+1, kappa) whose string identity only involves
// tabulated entries; returned as (g, n, kappa) arguments of the check.
std::vector<TableKey> string_pairs_in_table();

// 2 V^kappa_{g,n} on the wall, as a polynomial in the free labels of
// wall_plan (the first label of each I_s^1 is eliminated). Lower-order terms
// come from Kontsevich polynomials, recursive wall corrections and
// face-bicolored top-degree parts. The witness must lie on the wall and off
// the lower-dimensional walls; it is used only for sub-walls where the
// recursion's hypotheses fail (brute-force fit there).
EvenPolynomial wall_correction(int g, int n, const std::vector<int>& kappa, const WallPartition& wall,
                               const std::vector<long>& witness, KontsevichSource source = KontsevichSource::Auto);

struct IntersectionNumber {
    std::vector<int> d;
    Rational value;
};

// <tau_d>_{m_*} = coefficient of b^{2d} in the unlabeled polynomial times
// 2^{5g-6+2n-2M} d!, with M = sum_i m_i (i - 1).
std::vector<IntersectionNumber> intersection_number_report(const KontsevichEntry& entry);

}  // namespace mv
