#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <gent/code_search.hpp>
#include <gent/entropy_bounds.hpp>
#include <gent/errors.hpp>
#include <gent/network.hpp>
#include <gent/serialization.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace gent;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct FileInput {
    std::string path;
    std::string content;
    std::uint64_t digest = 0;
};

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

FileInput read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    FileInput f;
    f.path = path;
    f.content = buf.str();
    f.digest = fnv1a64(f.content);
    return f;
}

json input_json(const FileInput& f) {
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(f.digest));
    return json{{"path", f.path}, {"digest", std::string("fnv1a64:") + hex}};
}

json rational_json(const Rational& r) {
    json j;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (num.fits_slong_p())
        j["num"] = num.get_si();
    else
        j["num"] = num.get_str();
    if (den.fits_ulong_p())
        j["den"] = den.get_ui();
    else
        j["den"] = den.get_str();
    j["decimal"] = decimal_string(to_double(r));
    return j;
}

json logvalue_json(const LogValue& v) {
    json j;
    if (v.count.fits_ulong_p())
        j["count"] = v.count.get_ui();
    else
        j["count"] = v.count.get_str();
    j["base"] = v.base;
    j["decimal"] = decimal_string(v.to_double());
    return j;
}

IneqSelector selector_from_flags(const std::string& ineq, const std::string& groups) {
    ZYPolicy policy = groups == "upto2" ? ZYPolicy::SingletonsAndPairs : ZYPolicy::Singletons;
    if (ineq == "shannon") return IneqSelector::shannon();
    if (ineq == "zy") return IneqSelector::zy(policy);
    if (ineq.rfind("file:", 0) == 0) {
        auto file = read_input(ineq.substr(5));
        return IneqSelector::custom_set(load_inequality_set(file.content));
    }
    throw CLI::ValidationError("--ineq", "must be shannon, zy, or file:PATH");
}

std::string rational_text(const Rational& r) {
    return to_string(r) + " (" + decimal_string(to_double(r)) + ")";
}

std::string logvalue_text(const LogValue& v) {
    return to_string(v) + " (" + decimal_string(v.to_double()) + ")";
}

class Reporter {
public:
    Reporter(std::string command, bool as_json) : as_json_(as_json) {
        report_["command"] = std::move(command);
        start_ = std::chrono::steady_clock::now();
    }

    json& report() { return report_; }

    void add_input(const std::string& key, const FileInput& f) {
        report_["inputs"][key] = input_json(f);
    }

    void text_line(const std::string& line) { text_ += line + "\n"; }

    int finish(const std::string& status, int exit_code) {
        report_["status"] = status;
        auto elapsed = std::chrono::steady_clock::now() - start_;
        report_["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        if (as_json_)
            std::cout << report_.dump(2) << "\n";
        else
            std::cout << text_;
        return exit_code;
    }

private:
    bool as_json_;
    json report_;
    std::string text_;
    std::chrono::steady_clock::time_point start_;
};

int run(int argc, char** argv) {
    CLI::App app{"exact guessing numbers, graph entropies, index codes and "
                 "network-coding solvability"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --format after the subcommand
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string graph_path, network_path, ineq = "shannon", groups = "singletons";
    std::string mode;
    int s = 2, tournament_n = 5;
    bool witness = false, report_entropy = false;

    auto* guess = app.add_subcommand("guess", "guessing number g(G,s)");
    guess->add_option("--graph", graph_path)->required();
    guess->add_option("--s", s, "alphabet size")->check(CLI::Range(2, 1024));
    guess->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sandwich"}));
    guess->add_flag("--witness", witness, "include the witness code");

    auto* entropy = app.add_subcommand("entropy", "entropy bound E_S / E_ZY / E_custom");
    entropy->add_option("--graph", graph_path)->required();
    entropy->add_option("--ineq", ineq, "shannon | zy | file:PATH");
    entropy->add_option("--groups", groups)->check(CLI::IsMember({"singletons", "upto2"}));

    auto* index_code = app.add_subcommand("index-code", "minimal index code i(G,s)");
    index_code->add_option("--graph", graph_path)->required();
    index_code->add_option("--s", s)->check(CLI::Range(2, 1024));
    index_code->add_option("--mode", mode)->check(CLI::IsMember({"exact", "construct"}));
    index_code->add_flag("--witness", witness, "include the coloring");

    auto* index_bound = app.add_subcommand("index-bound", "LP lower bound i_S / i_ZY / i_custom");
    index_bound->add_option("--graph", graph_path)->required();
    index_bound->add_option("--ineq", ineq);
    index_bound->add_option("--groups", groups)->check(CLI::IsMember({"singletons", "upto2"}));

    auto* split = app.add_subcommand("split", "minimal split of a graph");
    split->add_option("--graph", graph_path)->required();

    auto* identify_cmd = app.add_subcommand("identify", "merge network source/target pairs");
    identify_cmd->add_option("--network", network_path)->required();

    auto* solve = app.add_subcommand("solve", "multiple-unicast solvability over A");
    solve->add_option("--network", network_path)->required();
    solve->add_option("--s", s)->check(CLI::Range(2, 1024));

    auto* capacity = app.add_subcommand("capacity11", "(1,1) coding capacity");
    capacity->add_option("--network", network_path)->required();
    capacity->add_option("--ineq", ineq);
    capacity->add_option("--groups", groups)->check(CLI::IsMember({"singletons", "upto2"}));

    auto* tournaments = app.add_subcommand("tournaments", "K_n orientation census");
    tournaments->add_option("--n", tournament_n)->check(CLI::Range(2, 6));
    tournaments->add_flag("--report-entropy", report_entropy, "entropy and guessing number per class");
    tournaments->add_option("--s", s)->check(CLI::Range(2, 1024));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    const bool as_json = format == "json";

    if (guess->parsed()) {
        Reporter rep("guess", as_json);
        auto file = read_input(graph_path);
        rep.add_input("graph", file);
        auto g = parse_graph(file.content);
        rep.report()["params"] = {{"s", s}, {"mode", mode.empty() ? "exact" : mode}};
        if (mode == "sandwich") {
            auto res = guessing_number(g, s, GuessMode::Sandwich);
            json r;
            r["exact"] = res.exact;
            if (res.exact) {
                r["count"] = logvalue_json(res.value)["count"];
                r["base"] = s;
                r["decimal"] = decimal_string(res.value.to_double());
                r["value"] = rational_json(*res.upper);
            } else {
                r["lower"] = logvalue_json(res.value);
                r["upper"] = rational_json(*res.upper);
            }
            if (witness) r["code"] = json::parse(code_to_json(res.witness));
            rep.report()["result"] = r;
            rep.text_line("guessing number lower bound " + logvalue_text(res.value) +
                          ", upper bound " + rational_text(*res.upper) +
                          (res.exact ? " (exact)" : " (open interval)"));
            if (!res.exact) return rep.finish("undetermined", kExitBudget);
            return rep.finish("ok", kExitOk);
        }
        auto res = guessing_number(g, s, GuessMode::Exact);
        json r = logvalue_json(res.value);
        if (witness) r["code"] = json::parse(code_to_json(res.witness));
        rep.report()["result"] = r;
        rep.text_line("guessing number " + logvalue_text(res.value));
        return rep.finish("ok", kExitOk);
    }

    if (entropy->parsed() || index_bound->parsed()) {
        bool is_entropy = entropy->parsed();
        Reporter rep(is_entropy ? "entropy" : "index-bound", as_json);
        auto file = read_input(graph_path);
        rep.add_input("graph", file);
        auto g = parse_graph(file.content);
        rep.report()["params"] = {{"ineq", ineq}, {"groups", groups}};
        auto sel = selector_from_flags(ineq, groups);
        Rational value = is_entropy ? entropy_bound(g, sel) : index_code_bound(g, sel);
        rep.report()["result"] = rational_json(value);
        rep.text_line((is_entropy ? "entropy bound " : "index-code bound ") +
                      rational_text(value));
        return rep.finish("ok", kExitOk);
    }

    if (index_code->parsed()) {
        Reporter rep("index-code", as_json);
        auto file = read_input(graph_path);
        rep.add_input("graph", file);
        auto g = parse_graph(file.content);
        rep.report()["params"] = {{"s", s}, {"mode", mode.empty() ? "exact" : mode}};
        auto res = min_index_code(g, s,
                                  mode == "construct" ? IndexMode::UpperBoundOnly
                                                      : IndexMode::Exact);
        json r = logvalue_json(res.length);
        r["colors"] = res.coloring.num_colors;
        if (mode == "construct") r["upper_bound_only"] = true;
        if (witness) r["coloring"] = json::parse(coloring_to_json(res.coloring));
        rep.report()["result"] = r;
        rep.text_line("index code length " + logvalue_text(res.length) + " with " +
                      std::to_string(res.coloring.num_colors) + " messages" +
                      (mode == "construct" ? " (upper bound)" : ""));
        return rep.finish("ok", kExitOk);
    }

    if (split->parsed()) {
        Reporter rep("split", as_json);
        auto file = read_input(graph_path);
        rep.add_input("graph", file);
        auto g = parse_graph(file.content);
        VertexSet b = minimal_split(g);
        auto members = set_members(b);
        rep.report()["result"] = {{"size", members.size()}, {"vertices", members}};
        std::string list;
        for (int v : members) list += (list.empty() ? "" : " ") + std::to_string(v);
        rep.text_line("minimal split size " + std::to_string(members.size()) + " {" + list + "}");
        return rep.finish("ok", kExitOk);
    }

    if (identify_cmd->parsed()) {
        Reporter rep("identify", as_json);
        auto file = read_input(network_path);
        rep.add_input("network", file);
        auto net = parse_network(file.content);
        auto g = identify(net);
        json edges = json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        rep.report()["result"] = {{"nodes", g.n()}, {"edges", edges}};
        rep.text_line(to_text(g));
        return rep.finish("ok", kExitOk);
    }

    if (solve->parsed()) {
        Reporter rep("solve", as_json);
        auto file = read_input(network_path);
        rep.add_input("network", file);
        auto net = parse_network(file.content);
        rep.report()["params"] = {{"s", s}};
        Solvable verdict = is_solvable(net, s);
        json r;
        if (verdict == Solvable::Undetermined)
            r["solvable"] = "undetermined";
        else
            r["solvable"] = verdict == Solvable::Yes;
        rep.report()["result"] = r;
        rep.text_line(std::string("solvable: ") +
                      (verdict == Solvable::Yes   ? "yes"
                       : verdict == Solvable::No  ? "no"
                                                  : "undetermined"));
        if (verdict == Solvable::Undetermined) return rep.finish("undetermined", kExitBudget);
        return rep.finish("ok", kExitOk);
    }

    if (capacity->parsed()) {
        Reporter rep("capacity11", as_json);
        auto file = read_input(network_path);
        rep.add_input("network", file);
        auto net = parse_network(file.content);
        rep.report()["params"] = {{"ineq", ineq}, {"groups", groups}};
        bool cap = coding_capacity_11(net, selector_from_flags(ineq, groups));
        rep.report()["result"] = {{"capacity11", cap}};
        rep.text_line(std::string("capacity (1,1): ") + (cap ? "yes" : "no"));
        return rep.finish("ok", kExitOk);
    }

    if (tournaments->parsed()) {
        Reporter rep("tournaments", as_json);
        rep.report()["params"] = {{"n", tournament_n}};
        auto classes = enumerate_tournaments(tournament_n);
        json r;
        r["classes"] = classes.size();
        if (report_entropy) {
            json list = json::array();
            for (std::size_t i = 0; i < classes.size(); ++i) {
                const auto& t = classes[i];
                json entry;
                entry["id"] = i;
                json edges = json::array();
                for (auto [u, v] : t.edges()) edges.push_back({u, v});
                entry["edges"] = edges;
                Rational es = entropy_bound(t, IneqSelector::shannon());
                entry["entropy"] = rational_json(es);
                entry["entropy_is_integer"] = es.get_den() == 1;
                auto gv = guessing_number(t, s).value;
                entry["guess"] = logvalue_json(gv);
                entry["guess_le_entropy"] = compare(gv, es) <= 0;
                list.push_back(std::move(entry));
            }
            r["report"] = std::move(list);
        }
        rep.report()["result"] = r;
        rep.text_line(std::to_string(classes.size()) + " non-isomorphic tournaments on " +
                      std::to_string(tournament_n) + " vertices");
        return rep.finish("ok", kExitOk);
    }

    return kExitParse;  // unreachable: require_subcommand
}

json error_json(const std::string& status, const std::string& message) {
    return json{{"status", status}, {"error", message}};
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cout << error_json("parse_error", e.what()).dump(2) << "\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        std::cout << error_json("budget", e.what()).dump(2) << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cout << error_json("error", e.what()).dump(2) << "\n";
        return 1;
    }
}
