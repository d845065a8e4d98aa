// Tabulated labeled Kontsevich polynomials. Each term "lambda:coef" stands
// for coef * m_lambda(b_1..b_n), where m_lambda is the monomial symmetric
// polynomial (sum over distinct permutations of the exponent vector), so the
// shorthand "c b_i^2 b_j^2" is c * sum_{i<j} b_i^2 b_j^2.

#include "kontsevich_tables.hpp"

namespace mv::detail {

const std::vector<RawTableEntry>& raw_kontsevich_table() {
    static const std::vector<RawTableEntry> rows = {
        // First printed table
        {3, 0, 3, "3^2", ":2"},
        {3, 0, 2, "3,1", ":1"},
        {3, 1, 1, "3^2", "2:1/24"},
        {3, 0, 4, "3^4", "2:6"},
        {3, 0, 3, "3^3,1", "2:3/2"},
        {3, 0, 2, "3^2,1^2", "2:1/2"},
        {3, 0, 1, "3,1^3", "2:1/4"},
        {3, 1, 2, "3^4", "4:1/16 2,2:1/8"},
        {3, 1, 1, "3^3,1", "4:1/64"},
        {3, 0, 5, "3^6", "4:45/2 2,2:90"},
        {3, 0, 4, "3^5,1", "4:15/4 2,2:15"},
        {3, 0, 3, "3^4,1^2", "4:3/4 2,2:3"},
        {3, 0, 2, "3^3,1^3", "4:3/16 2,2:3/4"},
        {3, 0, 4, "5,3", ":9"},
        {3, 0, 3, "5,1", ":3"},
        {3, 0, 1, "3^2,1^4", "4:1/16"},
        {3, 1, 2, "5,3", "2:1/4"},
        {3, 1, 1, "5,1", "2:1/8"},
        {3, 0, 5, "5,3^3", "2:45"},
        {3, 0, 4, "5,3^2,1", "2:9"},
        {3, 0, 3, "5,3,1^2", "2:9/4"},
        {3, 0, 2, "5,1^3", "2:3/4"},
        {3, 1, 3, "5,3^3", "4:35/64 2,2:3/2"},
        {3, 1, 2, "5,3^2,1", "4:23/192 2,2:3/8"},
        {3, 1, 1, "5,3,1^2", "4:7/192"},
        {3, 2, 1, "5,3^3", "6:19/7680"},
        {3, 0, 6, "5,3^5", "4:465/2 2,2:945"},
        {3, 0, 5, "5,3^4,1", "4:33 2,2:135"},
        {3, 0, 4, "5,3^3,1^2", "4:87/16 2,2:45/2"},
        {3, 0, 2, "5,3,1^4", "4:1/4 2,2:9/8"},
        {3, 0, 5, "7,3", ":60"},
        {3, 0, 4, "7,1", ":15"},
        {3, 0, 3, "5,3^2,1^3", "4:17/16 2,2:9/2"},
        {3, 0, 1, "5,1^5", "4:1/16"},
        {3, 1, 3, "7,3", "2:15/8"},
        {3, 1, 2, "7,1", "2:5/8"},
        {3, 2, 1, "7,3", "4:7/384"},
        {3, 0, 6, "7,3^3", "2:450"},
        {3, 0, 5, "7,3^2,1", "2:75"},
        {3, 0, 4, "7,3,1^2", "2:15"},
        {3, 0, 3, "7,1^3", "2:15/4"},
        {3, 1, 4, "7,3^3", "4:195/32 2,2:75/4"},
        {3, 1, 3, "7,3^2,1", "4:215/192 2,2:15/4"},
        {3, 1, 2, "7,3,1^2", "4:25/96 2,2:15/16"},
        {3, 1, 1, "7,1^3", "4:5/64"},
        {3, 2, 2, "7,3^3", "6:1/32 4,2:95/512"},
        {3, 2, 1, "7,3^2,1", "6:29/4608"},
        {3, 0, 6, "9,3", ":525"},
        {3, 0, 5, "9,1", ":105"},
        {3, 1, 4, "9,3", "2:35/2"},
        {3, 1, 3, "9,1", "2:35/8"},
        {3, 2, 2, "9,3", "4:35/192 2,2:35/64"},
        {3, 2, 1, "9,1", "4:7/128"},
        {3, 0, 7, "9,3^3", "2:11025/2"},
        {3, 0, 6, "9,3^2,1", "2:1575/2"},
        {3, 0, 5, "9,3,1^2", "2:525/4"},
        {3, 0, 4, "9,1^3", "2:105/4"},
        {3, 1, 5, "9,3^3", "4:5145/64 2,2:525/2"},
        {3, 1, 4, "9,3^2,1", "4:805/64 2,2:175/4"},
        {3, 1, 3, "9,3,1^2", "4:455/192 2,2:35/4"},
        {3, 1, 2, "9,1^3", "4:35/64 2,2:35/16"},
        {3, 2, 3, "9,3^3", "6:231/512 4,2:735/256 2,2,2:525/64"},
        {3, 2, 2, "9,3^2,1", "6:119/1536 4,2:805/1536"},
        {3, 2, 1, "9,3,1^2", "6:77/4608"},
        {3, 3, 1, "9,3^3", "8:571/442368"},
        // Second printed table
        {4, 2, 2, "7,5", "4:9/64 2,2:29/64"},
        {4, 2, 1, "5^2", "4:11/640"},
        {4, 1, 4, "7,5", "2:105/8"},
        {4, 1, 3, "5^2", "2:3/2"},
        {4, 0, 6, "7,5", ":450"},
        {4, 0, 5, "5^2", ":54"},
        {4, 0, 7, "9,5", ":4725"},
        {4, 1, 5, "9,5", "2:1155/8"},
        {4, 2, 3, "9,5", "4:49/32 2,2:77/16"},
        {4, 3, 1, "9,5", "6:127/15360"},
        {4, 0, 7, "7^2", ":4500"},
        {4, 1, 5, "7^2", "2:525/4"},
        {4, 2, 3, "7^2", "4:45/32 2,2:145/32"},
        {4, 3, 1, "7^2", "6:53/7168"},
        {4, 0, 7, "11,3", ":5670"},
        {4, 0, 6, "11,1", ":945"},
        {4, 1, 5, "11,3", "2:1575/8"},
        {4, 1, 4, "11,1", "2:315/8"},
        {4, 2, 3, "11,3", "4:273/128 2,2:105/16"},
        {4, 2, 2, "11,1", "4:63/128 2,2:105/64"},
        {4, 3, 1, "11,3", "6:11/1024"},
        {4, 0, 8, "13,3", ":72765"},
        {4, 0, 7, "13,1", ":10395"},
        {4, 1, 6, "13,3", "2:10395/4"},
        {4, 1, 5, "13,1", "2:3465/8"},
        {4, 2, 4, "13,3", "4:231/8 2,2:5775/64"},
        {4, 2, 3, "13,1", "4:693/128 2,2:1156/64"},
        {4, 3, 2, "13,3", "6:77/512 4,2:1001/1024"},
    };
    return rows;
}

const std::vector<RawErratum>& raw_kontsevich_errata() {
    static const std::vector<RawErratum> rows = {
        {2, 3, "13,1", "4:693/128 2,2:1155/64",
         "printed 1156/64; the string recursion from N_{2,4}^{[13,3]} and the counting-function fit both give 1155/64"},
    };
    return rows;
}

}  // namespace mv::detail
