#include <gent/serialization.hpp>

#include <json.hpp>

#include <stdexcept>

namespace gent {

namespace {

using json = nlohmann::ordered_json;

json word_to_value(const Word& w, int s) {
    if (s <= 10) return word_to_string(w);
    json arr = json::array();
    for (auto c : w.letters) arr.push_back(int(c));
    return arr;
}

Word word_from_value(const json& value, int s) {
    if (value.is_string()) return word_from_string(value.get<std::string>(), s);
    Word w;
    for (const auto& v : value) {
        int x = v.get<int>();
        if (x < 0 || x >= s) throw std::invalid_argument("letter out of alphabet range");
        w.letters.push_back(std::uint8_t(x));
    }
    return w;
}

json tables_to_value(const std::vector<std::vector<std::uint8_t>>& tables) {
    json obj = json::object();
    for (std::size_t v = 0; v < tables.size(); ++v) {
        json arr = json::array();
        for (auto x : tables[v]) arr.push_back(int(x));
        obj[std::to_string(v)] = std::move(arr);
    }
    return obj;
}

std::vector<std::vector<std::uint8_t>> tables_from_value(const json& obj, std::size_t count) {
    std::vector<std::vector<std::uint8_t>> tables(count);
    for (const auto& [key, arr] : obj.items()) {
        std::size_t v = std::stoul(key);
        if (v >= count) throw std::invalid_argument("table vertex id out of range");
        for (const auto& x : arr) tables[v].push_back(std::uint8_t(x.get<int>()));
    }
    return tables;
}

}  // namespace

std::string code_to_json(const Code& code) {
    json j;
    j["n"] = code.n;
    j["s"] = code.s;
    json words = json::array();
    for (const auto& w : code.words) words.push_back(word_to_value(w, code.s));
    j["words"] = std::move(words);
    return j.dump();
}

Code code_from_json(const std::string& text) {
    json j = json::parse(text);
    Code code;
    code.n = j.at("n").get<int>();
    code.s = j.at("s").get<int>();
    for (const auto& v : j.at("words")) {
        Word w = word_from_value(v, code.s);
        if (int(w.letters.size()) != code.n) throw std::invalid_argument("word length mismatch");
        code.words.push_back(std::move(w));
    }
    std::sort(code.words.begin(), code.words.end());
    if (std::adjacent_find(code.words.begin(), code.words.end()) != code.words.end())
        throw std::invalid_argument("duplicate codeword");
    return code;
}

std::string strategy_to_json(const GuessingStrategy& strat) {
    json j;
    j["n"] = strat.n;
    j["s"] = strat.s;
    j["tables"] = tables_to_value(strat.tables);
    return j.dump();
}

GuessingStrategy strategy_from_json(const std::string& text) {
    json j = json::parse(text);
    GuessingStrategy strat;
    strat.n = j.at("n").get<int>();
    strat.s = j.at("s").get<int>();
    strat.tables = tables_from_value(j.at("tables"), std::size_t(strat.n));
    return strat;
}

std::string coloring_to_json(const Coloring& coloring) {
    json j;
    j["n"] = coloring.n;
    j["s"] = coloring.s;
    j["colors"] = coloring.num_colors;
    json map = json::object();
    for (std::size_t idx = 0; idx < coloring.color.size(); ++idx) {
        Word w = word_from_index(idx, coloring.n, coloring.s);
        if (coloring.s <= 10)
            map[word_to_string(w)] = coloring.color[idx];
        else
            map[std::to_string(idx)] = coloring.color[idx];
    }
    j["map"] = std::move(map);
    return j.dump();
}

Coloring coloring_from_json(const std::string& text) {
    json j = json::parse(text);
    Coloring col;
    col.n = j.at("n").get<int>();
    col.s = j.at("s").get<int>();
    col.num_colors = j.at("colors").get<int>();
    col.color.assign(word_space_size(col.n, col.s), -1);
    for (const auto& [key, value] : j.at("map").items()) {
        std::size_t idx = col.s <= 10 ? word_index(word_from_string(key, col.s), col.s)
                                      : std::stoul(key);
        col.color.at(idx) = value.get<int>();
    }
    return col;
}

std::string assignment_to_json(const CodingAssignment& asg) {
    json j;
    j["s"] = asg.s;
    j["tables"] = tables_to_value(asg.tables);
    return j.dump();
}

CodingAssignment assignment_from_json(const std::string& text) {
    json j = json::parse(text);
    CodingAssignment asg;
    asg.s = j.at("s").get<int>();
    std::size_t count = 0;
    for (const auto& [key, value] : j.at("tables").items())
        count = std::max(count, std::stoul(key) + 1);
    asg.tables = tables_from_value(j.at("tables"), count);
    return asg;
}

}  // namespace gent
