// Tabulated true and completed volumes, as coefficients of pi^d.

#include "mv/volumes.hpp"

namespace mv {

const std::vector<TableOneRow>& table_one_rows() {
    static const std::vector<TableOneRow> rows = [] {
        struct Raw {
            const char* stratum;
            int d;
            const char* vol;
            const char* completed;
        };
        static const Raw raw[] = {
            {"3,-1^3", 4, "5/9", "2/3"},
            {"3,-1^7", 6, "3/4", "3/4"},
            {"3,1,-1^4", 6, "1/3", "7/20"},
            {"5,-1^5", 6, "7/10", "3/4"},
            {"3,1^2,-1", 6, "1/9", "7/60"},
            {"3^2,-1^2", 6, "53/270", "13/60"},
            {"5,1,-1^2", 6, "7/30", "1/4"},
            {"7,-1^3", 6, "27/50", "217/360"},
            {"3,1,-1^8", 8, "3/8", "3/8"},
            {"5,-1^9", 8, "5/8", "5/8"},
            {"3,1^2,-1^5", 8, "13/72", "31/168"},
            {"3^2,-1^6", 8, "13/42", "9/28"},
            {"5,1,-1^6", 8, "3/8", "65/168"},
            {"7,-1^7", 8, "45/56", "5/6"},
            {"3,1^3,-1^2", 8, "23/378", "157/2520"},
            {"3^2,1,-1^3", 8, "104/945", "97/840"},
            {"5,1^2,-1^3", 8, "47/360", "17/126"},
            {"5,3,-1^4", 8, "17/72", "1/4"},
            {"7,1,-1^4", 8, "429/1400", "77/240"},
            {"9,-1^5", 8, "9383/12600", "9383/12600"},
            {"3^2,1^2", 8, "859/22680", "5/126"},
            {"3^3,-1", 8, "4499/68040", "179/2520"},
            {"5,1^3", 8, "49/1080", "71/1512"},
            {"5,3,1,-1", 8, "17/216", "1/12"},
            {"5^2,-1^2", 8, "421/2520", "5/28"},
            {"7,1^2,-1", 8, "143/1400", "77/720"},
            {"7,3,-1^2", 8, "51/280", "211/1080"},
            {"9,1,-1^2", 8, "9383/37800", "21/80"},
            {"11,-1^3", 8, "4506281/7144200", "341/504"},
            {"3,1^2,-1^9", 10, "3/16", "3/16"},
            {"3^2,-1^10", 10, "9/32", "9/32"},
            {"5,1,-1^10", 10, "5/16", "5/16"},
            {"7,-1^11", 10, "35/64", "35/64"},
            {"3,1^3,-1^6", 10, "1159/12096", "391/4032"},
            {"3^2,1,-1^7", 10, "47/288", "1/6"},
            {"5,1^2,-1^7", 10, "113/576", "115/576"},
            {"5,3,-1^8", 10, "139/432", "95/288"},
            {"7,1,-1^8", 10, "5/12", "245/576"},
            {"9,-1^9", 10, "385/432", "175/192"},
            {"3,1^5", 10, "13/1134", "703/60480"},
            {"7,3,1,-1^3", 10, "2027/20160", "67/640"},
        };
        std::vector<TableOneRow> out;
        for (const auto& r : raw) out.push_back({r.stratum, r.d, parse_rational(r.vol), parse_rational(r.completed)});
        return out;
    }();
    return rows;
}

}  // namespace mv
