// Command-line front end: volumes, completed volumes, stable graphs,
// Kontsevich polynomials, metric counts, square-tiled counts, cylinders and
// the table regression suite.
//
// Exit codes: 0 success, 1 usage or input error, 2 result unavailable.

#include "mv/counting.hpp"
#include "mv/kontsevich.hpp"
#include "mv/partitions.hpp"
#include "mv/stable_graphs.hpp"
#include "mv/volumes.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

using namespace mv;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "text";
    std::string source = "auto";
    std::string minimal_strata;
    bool approx = false;
};

class Disagreement : public Unavailable {
public:
    using Unavailable::Unavailable;
};

MinimalStratumVolumeTable load_table(const Options& o) {
    auto t = MinimalStratumVolumeTable::builtin();
    if (!o.minimal_strata.empty()) t.load_overrides(o.minimal_strata);
    return t;
}

// The sources to evaluate: one, or table and interpolation for "both".
std::vector<KontsevichSource> sources(const Options& o) {
    if (o.source == "both") return {KontsevichSource::Table, KontsevichSource::Interpolate};
    return {parse_source(o.source)};
}

std::string approx_suffix(const Options& o, const PiValue& v) {
    if (!o.approx) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v.approx());
    return std::string("  (approx ") + buf + ", not exact)";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

const char* kCsvHeader = "stratum,d,g,vol_num,vol_den,completed_num,completed_den";

std::string csv_row(const StratumSpec& s, const PiValue& vol, const PiValue& completed) {
    std::ostringstream out;
    out << csv_quote(s.parts_string()) << "," << s.d << "," << s.g << "," << vol.coefficient().get_num().get_str()
        << "," << vol.coefficient().get_den().get_str() << "," << completed.coefficient().get_num().get_str() << ","
        << completed.coefficient().get_den().get_str();
    return out.str();
}

VolumeBreakdown volume_with_sources(const StratumSpec& s, const Options& o, bool with_vol, bool with_true) {
    auto table = load_table(o);
    std::optional<VolumeBreakdown> first;
    for (auto src : sources(o)) {
        VolumeBreakdown b = with_vol ? masur_veech_volume(s, table, src) : completed_volume(s, src, with_true);
        if (with_vol && with_true) {
            auto t = completed_volume(s, src, true);
            b.graphs = t.graphs;
        }
        if (first && (first->completed != b.completed || first->vol != b.vol))
            throw Disagreement("table and interpolation sources disagree for " + s.to_string());
        if (!first) first = b;
    }
    return *first;
}

int cmd_volume(const Options& o, const std::string& stratum) {
    auto s = StratumSpec::parse(stratum);
    auto b = volume_with_sources(s, o, true, false);
    if (o.format == "json") {
        Json j = b.to_json();
        j.erase("graphs");
        j["source"] = o.source;
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << kCsvHeader << "\n" << csv_row(s, *b.vol, b.completed) << "\n";
    } else {
        std::cout << "Vol " << s.to_string() << " = " << b.vol->to_string() << approx_suffix(o, *b.vol) << "\n";
    }
    return 0;
}

int cmd_completed(const Options& o, const std::string& stratum, bool with_true) {
    auto s = StratumSpec::parse(stratum);
    auto b = volume_with_sources(s, o, false, with_true);
    if (o.format == "json") {
        Json j = b.to_json();
        j.erase("expansion");
        j["source"] = o.source;
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << "graph,edges,aut,multiplicity,c_gamma,P,Z,contribution" << (with_true ? ",true_contribution" : "")
                  << "\n";
        for (const auto& c : b.graphs) {
            std::cout << csv_quote(c.graph.to_string()) << "," << c.graph.num_edges() << "," << c.graph.automorphisms
                      << "," << c.multiplicity << "," << to_string(c.c_gamma) << "," << csv_quote(c.P.to_string())
                      << "," << c.Z.to_string() << "," << c.contribution.to_string();
            if (with_true) std::cout << "," << c.true_contribution->to_string();
            std::cout << "\n";
        }
    } else {
        std::cout << s.to_string() << ": g=" << s.g << ", d=" << s.d << ", " << b.graphs.size() << " graph shapes\n";
        for (const auto& c : b.graphs) {
            std::cout << "  " << c.graph.to_string() << "  x" << c.multiplicity << "\n"
                      << "    c_gamma=" << to_string(c.c_gamma) << "  P=" << c.P.to_string() << "  Z=" << c.Z.to_string()
                      << "  contribution=" << c.contribution.to_string();
            if (with_true) std::cout << "  true=" << c.true_contribution->to_string();
            std::cout << "\n";
        }
        std::cout << "completed Vol " << s.to_string() << " = " << b.completed.to_string()
                  << approx_suffix(o, b.completed) << "\n";
    }
    return 0;
}

int cmd_graphs(const Options& o, const std::string& stratum) {
    auto s = StratumSpec::parse(stratum);
    const auto& graphs = enumerate_stable_graphs(s.g, s.kappa());
    if (o.format == "json") {
        Json j;
        j["stratum"] = s.to_string();
        auto arr = Json::array();
        for (const auto& gr : graphs) {
            Json x = gr.to_json();
            x["shape"] = gr.shape;
            arr.push_back(x);
        }
        j["graphs"] = arr;
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << "index,shape,vertices,edges,aut,c_gamma,graph\n";
        for (size_t i = 0; i < graphs.size(); ++i)
            std::cout << i << "," << graphs[i].shape << "," << graphs[i].num_vertices() << "," << graphs[i].num_edges()
                      << "," << graphs[i].automorphisms << "," << to_string(graphs[i].c_gamma()) << ","
                      << csv_quote(graphs[i].to_string()) << "\n";
    } else {
        std::cout << s.to_string() << ": " << graphs.size() << " stable graphs\n";
        for (size_t i = 0; i < graphs.size(); ++i)
            std::cout << "  #" << i << " shape " << graphs[i].shape << ": " << graphs[i].to_string() << "\n";
    }
    return 0;
}

int cmd_kontsevich(const Options& o, int g, int n, const std::string& kappa_text) {
    auto kappa = parse_parts(kappa_text);
    std::optional<KontsevichEntry> first;
    for (auto src : sources(o)) {
        auto e = kontsevich_polynomial(g, n, kappa, src);
        if (first && first->labeled != e.labeled)
            throw Disagreement("table and interpolation disagree for " + TableKey{3, g, n, e.kappa}.to_string());
        if (!first) first = e;
    }
    const auto& e = *first;
    if (o.format == "json") {
        Json j = e.to_json();
        if (o.source == "both") j["source"] = "both";
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << "exponents,labeled,unlabeled\n";
        for (const auto& [ex, c] : e.labeled.terms()) {
            std::string es;
            for (size_t i = 0; i < ex.size(); ++i) es += (i ? " " : "") + std::to_string(ex[i]);
            std::cout << es << "," << to_string(c) << "," << to_string(e.unlabeled.coefficient(ex)) << "\n";
        }
    } else {
        std::string name = TableKey{3, g, n, e.kappa}.to_string();
        std::cout << name << " (" << (o.source == "both" ? "both" : to_string(e.source)) << ") = " << e.labeled.to_string()
                  << "\n";
        std::cout << "unlabeled = " << e.unlabeled.to_string() << "\n";
    }
    return 0;
}

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer '" + item + "' in '" + text + "'");
        }
    }
    return out;
}

int cmd_count_metrics(const Options& o, int g, int n, const std::string& kappa_text, const std::string& b_text) {
    auto kappa = sorted_desc(parse_parts(kappa_text));
    auto b = parse_longs(b_text);
    if (!euler_check(g, n, kappa))
        throw std::invalid_argument("no ribbon graphs with g=" + std::to_string(g) + ", n=" + std::to_string(n) +
                                    ", kappa=[" + format_parts(kappa) + "]");
    for (long x : b)
        if (x < 0) throw std::invalid_argument("perimeters must be nonnegative");
    Rational v = counting_function(g, n, kappa, b);
    if (o.format == "json") {
        Json j;
        j["g"] = g;
        j["n"] = n;
        j["kappa"] = format_parts(kappa);
        j["b"] = b;
        j["value"] = to_string(v);
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << "g,n,kappa,b,value\n"
                  << g << "," << n << "," << csv_quote(format_parts(kappa)) << "," << csv_quote(b_text) << ","
                  << to_string(v) << "\n";
    } else {
        std::cout << to_string(v) << "\n";
    }
    return 0;
}

int cmd_st_count(const Options& o, const std::string& stratum, long N) {
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    auto s = StratumSpec::parse(stratum);
    auto c = square_tiled_count(s, N);
    Rational norm = c.normalized();
    if (o.format == "json") {
        Json j;
        j["stratum"] = s.to_string();
        j["N"] = N;
        j["card"] = to_string(c.total);
        j["normalized"] = to_string(norm);
        auto arr = Json::array();
        for (const auto& x : c.per_graph) {
            Json y;
            y["graph"] = x.graph.to_string();
            y["multiplicity"] = x.multiplicity;
            y["count"] = to_string(x.count);
            arr.push_back(y);
        }
        j["graphs"] = arr;
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << "graph,multiplicity,count\n";
        for (const auto& x : c.per_graph)
            std::cout << csv_quote(x.graph.to_string()) << "," << x.multiplicity << "," << to_string(x.count) << "\n";
    } else {
        std::cout << "card ST(" << s.to_string() << ", 2N) with N=" << N << ": " << to_string(c.total) << "\n";
        for (const auto& x : c.per_graph)
            std::cout << "  " << x.graph.to_string() << "  x" << x.multiplicity << ": " << to_string(x.count) << "\n";
        std::cout << "2d card / N^d = " << to_string(norm);
        if (o.approx) std::cout << "  (approx " << norm.get_d() << " vs pi^" << s.d << " multiple, not exact)";
        std::cout << "\n";
    }
    return 0;
}

int cmd_cylinders(const Options& o, const std::string& stratum, long N) {
    auto s = StratumSpec::parse(stratum);
    CylinderDistribution d =
        N > 0 ? cylinder_distribution_finite(s, N) : cylinder_distribution(s, sources(o).front());
    std::string basis = N > 0 ? "square-tiled counts" : (d.exact_true ? "true contributions" : "completed contributions");
    if (o.format == "json") {
        Json j;
        j["stratum"] = s.to_string();
        j["mode"] = d.mode;
        j["basis"] = basis;
        Json f = Json::object();
        for (const auto& [k, v] : d.frequency) f[std::to_string(k)] = to_string(v);
        j["frequency"] = f;
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << "cylinders,frequency\n";
        for (const auto& [k, v] : d.frequency) std::cout << k << "," << to_string(v) << "\n";
    } else {
        std::cout << s.to_string() << " cylinder distribution (" << d.mode << ", " << basis << ")\n";
        for (const auto& [k, v] : d.frequency) {
            std::cout << "  " << k << (k == 1 ? " cylinder: " : " cylinders: ") << to_string(v);
            if (o.approx) std::cout << "  (approx " << v.get_d() << ")";
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& o, int max_d) {
    auto table = load_table(o);
    auto src = sources(o);
    bool all = true;
    Json rows = Json::array();
    std::vector<std::string> text;
    std::vector<std::string> csv;
    for (const auto& r : table_one_rows()) {
        if (r.d > max_d) continue;
        auto s = StratumSpec::parse(r.stratum);
        Json x;
        x["stratum"] = s.to_string();
        try {
            VolumeBreakdown b;
            for (auto sc : src) b = masur_veech_volume(s, table, sc);
            bool ok_v = *b.vol == PiValue(r.vol, r.d);
            bool ok_c = b.completed == PiValue(r.completed, r.d);
            all = all && ok_v && ok_c;
            x["vol"] = b.vol->to_string();
            x["completed"] = b.completed.to_string();
            x["vol_ok"] = ok_v;
            x["completed_ok"] = ok_c;
            std::string line = std::string(ok_v && ok_c ? "PASS " : "FAIL ") + s.to_string() + "  Vol " +
                               b.vol->to_string() + (ok_v ? "" : " (tabulated " + to_string(r.vol) + ")") +
                               "  completed " + b.completed.to_string() +
                               (ok_c ? "" : " (tabulated " + to_string(r.completed) + ")");
            text.push_back(line);
            csv.push_back(csv_row(s, *b.vol, b.completed));
        } catch (const Unavailable& e) {
            all = false;
            x["error"] = e.what();
            text.push_back("UNAVAILABLE " + s.to_string() + ": " + e.what());
        }
        rows.push_back(x);
    }
    auto pairs = string_pairs_in_table();
    int holds = 0;
    for (const auto& k : pairs) holds += string_recursion_check(k.g, k.n, k.kappa, KontsevichSource::Table).holds;
    all = all && holds == static_cast<int>(pairs.size());

    if (o.format == "json") {
        Json j;
        j["rows"] = rows;
        j["string_pairs"] = pairs.size();
        j["string_holds"] = holds;
        auto er = Json::array();
        for (const auto& e : table_errata()) er.push_back(e.key.to_string() + ": " + e.reason);
        j["errata"] = er;
        j["passed"] = all;
        print_json(j);
    } else if (o.format == "csv") {
        std::cout << kCsvHeader << "\n";
        for (const auto& l : csv) std::cout << l << "\n";
    } else {
        for (const auto& l : text) std::cout << l << "\n";
        std::cout << (holds == static_cast<int>(pairs.size()) ? "PASS" : "FAIL") << " string recursion " << holds << "/"
                  << pairs.size() << " tabulated pairs\n";
        for (const auto& e : table_errata())
            std::cout << "NOTE corrected entry " << e.key.to_string() << ": " << e.reason << "\n";
        std::cout << (all ? "all regressions pass" : "some regressions fail") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Masur-Veech volumes of odd strata of quadratic differentials"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--source", o.source, "Kontsevich polynomials: table, interpolate, both or auto")
        ->check(CLI::IsMember({"table", "interpolate", "both", "auto"}))
        ->capture_default_str();
    app.add_option("--minimal-strata", o.minimal_strata, "JSON file of Vol H(2g-2) overrides, e.g. {\"H(6)\": \"a/b * pi^8\"}");
    app.add_flag("--approx", o.approx, "Append decimal approximations (not exact)");

    std::string stratum;
    int g = 0, n = 0;
    std::string kappa, b;
    long N = 0;
    int max_d = 8;
    bool with_true = false;

    auto* volume = app.add_subcommand("volume", "True Masur-Veech volume");
    volume->add_option("stratum", stratum, "Stratum, e.g. \"3,-1^3\"")->required();
    auto* completed = app.add_subcommand("completed", "Completed volume with per-graph breakdown");
    completed->add_option("stratum", stratum)->required();
    completed->add_flag("--true", with_true, "Also the true per-graph contributions");
    auto* graphs = app.add_subcommand("graphs", "Stable graphs of a stratum");
    graphs->add_option("stratum", stratum)->required();
    auto* kont = app.add_subcommand("kontsevich", "Kontsevich polynomial N_{g,n}^kappa");
    kont->add_option("--g", g)->required();
    kont->add_option("--n", n)->required();
    kont->add_option("--kappa", kappa, "Valencies, e.g. \"5,1\"")->required();
    auto* cm = app.add_subcommand("count-metrics", "Counting function F_{g,n}^kappa(b)");
    cm->add_option("--g", g)->required();
    cm->add_option("--n", n)->required();
    cm->add_option("--kappa", kappa)->required();
    cm->add_option("--b", b, "Perimeters, e.g. 4,2,2")->required();
    auto* st = app.add_subcommand("st-count", "Exact count of square-tiled surfaces with at most N squares");
    st->add_option("stratum", stratum)->required();
    st->add_option("--N", N)->required();
    auto* cyl = app.add_subcommand("cylinders", "Distribution of the number of cylinders");
    cyl->add_option("stratum", stratum)->required();
    cyl->add_option("--N", N, "Use square-tiled counts at this N instead of exact volumes");
    auto* ver = app.add_subcommand("verify", "Regression against the tabulated volumes");
    ver->add_option("--max-d", max_d)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*volume) return cmd_volume(o, stratum);
        if (*completed) return cmd_completed(o, stratum, with_true);
        if (*graphs) return cmd_graphs(o, stratum);
        if (*kont) return cmd_kontsevich(o, g, n, kappa);
        if (*cm) return cmd_count_metrics(o, g, n, kappa, b);
        if (*st) return cmd_st_count(o, stratum, N);
        if (*cyl) return cmd_cylinders(o, stratum, N);
        if (*ver) return cmd_verify(o, max_d);
    } catch (const Unavailable& e) {
        std::cerr << "unavailable: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
