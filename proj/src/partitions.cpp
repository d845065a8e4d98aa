#include "mv/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace mv {

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> sorted_desc(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

OddPartition::OddPartition(std::vector<int> parts, PartitionRole role) : parts_(sorted_desc(std::move(parts))), role_(role) {
    int lo = role_ == PartitionRole::Singularities ? -1 : 1;
    for (int p : parts_) {
        if (p % 2 == 0) throw std::invalid_argument("even part " + std::to_string(p) + " in odd partition");
        if (p < lo) throw std::invalid_argument("part " + std::to_string(p) + " below " + std::to_string(lo));
    }
}

int OddPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int OddPartition::mu(int i) const { return mv::mu(parts_, i); }

OddPartition OddPartition::shifted(int delta) const {
    std::vector<int> p = parts_;
    for (int& x : p) x += delta;
    PartitionRole r = role_;
    if (delta == 2) r = PartitionRole::Valencies;
    if (delta == -2) r = PartitionRole::Singularities;
    return OddPartition(p, r);
}

std::string OddPartition::to_string() const { return format_parts(parts_); }
std::string OddPartition::bracket() const { return "[" + format_parts(parts_) + "]"; }

int mu(const std::vector<int>& parts, int i) { return static_cast<int>(std::count(parts.begin(), parts.end(), i)); }

Integer aut_order(const std::vector<int>& parts) {
    std::map<int, int> m;
    for (int p : parts) ++m[p];
    Integer r = 1;
    for (const auto& [v, c] : m) r *= factorial(c);
    return r;
}

Integer c_kappa(const std::vector<int>& parts) {
    std::map<int, int> m;
    for (int p : parts) ++m[p];
    Integer r = 1;
    for (const auto& [v, c] : m)
        if (v >= 2) r *= factorial(c);
    return r;
}

std::vector<int> parse_parts(const std::string& text) {
    static const std::regex item(R"(\s*([+-]?\d+)\s*(?:\^\s*(\d+))?\s*)");
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    bool any = false;
    while (std::getline(ss, tok, ',')) {
        any = true;
        std::smatch m;
        if (!std::regex_match(tok, m, item)) throw std::invalid_argument("cannot parse part '" + tok + "' in '" + text + "'");
        int v = std::stoi(m[1].str());
        int rep = m[2].matched ? std::stoi(m[2].str()) : 1;
        if (rep < 1) throw std::invalid_argument("repeat count must be positive in '" + tok + "'");
        for (int i = 0; i < rep; ++i) out.push_back(v);
    }
    if (!any || out.empty()) throw std::invalid_argument("empty partition");
    return out;
}

std::string format_parts(std::vector<int> parts) {
    parts = sorted_desc(std::move(parts));
    std::string s;
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!s.empty()) s += ",";
        s += std::to_string(parts[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

OddPartition parse_stratum(const std::string& text) {
    std::string t = text;
    static const std::regex wrapped(R"(\s*Q\s*\((.*)\)\s*)");
    std::smatch m;
    if (std::regex_match(t, m, wrapped)) t = m[1].str();
    return OddPartition(parse_parts(t), PartitionRole::Singularities);
}

GenusDim stratum_genus_dim(const OddPartition& k) {
    int w = k.weight();
    if (((w % 4) + 4) % 4 != 0) throw std::invalid_argument("not a quadratic-differential stratum");
    int g = w / 4 + 1;
    if (g < 0) throw std::invalid_argument("negative genus");
    return {g, 2 * g - 2 + k.length()};
}

bool euler_check(int g, int n, const std::vector<int>& kappa) {
    int w = std::accumulate(kappa.begin(), kappa.end(), 0);
    int l = static_cast<int>(kappa.size());
    return 2 * (2 * g - 2 + n) == w - 2 * l;
}

}  // namespace mv
