#include "hivebr/json_io.hpp"

#include <algorithm>
#include <string>

namespace hivebr {

namespace {

std::vector<Int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw error(errc::invalid_argument, std::string(what) + " must be an array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw error(errc::invalid_argument, std::string(what) + " must contain integers");
        out.push_back(v.get<Int>());
    }
    return out;
}

} // namespace

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    return Partition::from(int_array(j, "partition"));
}

json to_json(const Word& w) {
    bool small = std::all_of(w.letters.begin(), w.letters.end(), [](int x) { return x <= 9; });
    if (small) {
        std::string s;
        for (int x : w.letters) s += static_cast<char>('0' + x);
        return json(s);
    }
    return json(w.letters);
}

Word word_from_json(const json& j) {
    if (j.is_string()) return word_from_digits(j.get<std::string>());
    if (!j.is_array()) throw error(errc::invalid_argument, "word must be a string or array");
    std::vector<int> letters;
    for (const auto& v : j) letters.push_back(v.get<int>());
    return Word(std::move(letters));
}

json to_json(const SkewTableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return json{{"inner", to_json(t.inner())}, {"rows", rows}};
}

SkewTableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("inner") || !j.contains("rows"))
        throw error(errc::invalid_argument, "tableau needs \"inner\" and \"rows\"");
    Partition inner = partition_from_json(j["inner"]);
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["rows"]) {
        std::vector<int> r;
        for (const auto& v : row) r.push_back(v.get<int>());
        rows.push_back(std::move(r));
    }
    std::vector<Int> outer(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        outer[i] = inner.part(i) + static_cast<Int>(rows[i].size());
    return SkewTableau::make(Partition::from(outer), inner, std::move(rows));
}

json to_json(const GTPattern& p) {
    json rows = json::array();
    for (const auto& row : p.rows()) rows.push_back(row);
    return json{{"rows_top_down", rows}};
}

GTPattern gt_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows_top_down"))
        throw error(errc::invalid_argument, "GT pattern needs \"rows_top_down\"");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j["rows_top_down"]) rows.push_back(int_array(row, "GT row"));
    return GTPattern::make(std::move(rows));
}

json to_json(const Hive& h) {
    json rows = json::array();
    for (const auto& row : h.rows()) rows.push_back(row);
    return json{{"m", h.m()}, {"rows_bottom_up", rows}};
}

Hive hive_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows_bottom_up"))
        throw error(errc::invalid_argument, "hive needs \"rows_bottom_up\"");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j["rows_bottom_up"]) rows.push_back(int_array(row, "hive row"));
    Hive h = Hive::make(std::move(rows));
    if (j.contains("m") && j["m"].get<std::size_t>() != h.m())
        throw error(errc::invalid_argument, "hive \"m\" does not match the row count");
    return h;
}

json to_json(const Flag& f) { return json(f.bounds); }

Flag flag_from_json(const json& j) {
    std::vector<int> bounds;
    for (const auto& v : int_array(j, "flag")) bounds.push_back(static_cast<int>(v));
    return Flag(std::move(bounds));
}

json to_json(const BijectionTrace& trace) {
    return json{{"input", to_json(trace.input)},
                {"companion", to_json(trace.companion)},
                {"hive", to_json(trace.hive)},
                {"ne_pattern", to_json(trace.ne_pattern)},
                {"gt_tableau", to_json(trace.gt_tableau)},
                {"contretableau", to_json(trace.contretableau)},
                {"output", to_json(trace.output)}};
}

json to_json(const InstanceReport& report) {
    json per_lambda = json::array();
    for (const auto& lr : report.per_lambda)
        per_lambda.push_back(json{{"lambda", to_json(lr.lambda)},
                                  {"lrs", lr.lrs},
                                  {"lrk", lr.lrk},
                                  {"hives", lr.hives},
                                  {"bijection_ok", lr.image_in_lrk && lr.injective &&
                                                       lr.counts_equal &&
                                                       lr.flagged_set_equal &&
                                                       lr.evacuation_ok}});
    return json{{"n", report.inst.n},
                {"nu", to_json(report.inst.nu)},
                {"mu", to_json(report.inst.mu)},
                {"models",
                 json{{"sundaram", report.sundaram},
                      {"kwon", report.kwon},
                      {"flagged_hive", report.flagged_hive},
                      {"character", report.character}}},
                {"bijection_ok", report.bijection_ok},
                {"per_lambda", per_lambda}};
}

} // namespace hivebr
