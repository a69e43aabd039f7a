#include "dinner/schedule_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace dinner {

using ordered_json = nlohmann::ordered_json;
using nlohmann::json;

const char* to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::MissingField: return "MissingField";
    case ParseErrorKind::InvalidValue: return "InvalidValue";
    case ParseErrorKind::IdOutOfRange: return "IdOutOfRange";
    }
    return "?";
}

namespace {

ordered_json ids_json(const std::vector<int>& ids)
{
    ordered_json a = ordered_json::array();
    for (int v : ids)
        a.push_back(v);
    return a;
}

[[noreturn]] void fail(ParseErrorKind kind, const std::string& msg) { throw ParseError(kind, msg); }

json parse_text(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(ParseErrorKind::Syntax, e.what());
    }
}

void require_object(const json& j, const std::string& what, std::initializer_list<const char*> keys)
{
    if (!j.is_object())
        fail(ParseErrorKind::InvalidValue, what + " must be an object");
    for (const char* k : keys)
        if (!j.contains(k))
            fail(ParseErrorKind::MissingField, what + " is missing \"" + k + "\"");
    if (j.size() != keys.size()) {
        for (const auto& [k, _] : j.items()) {
            bool known = false;
            for (const char* want : keys)
                known = known || k == want;
            if (!known)
                fail(ParseErrorKind::InvalidValue, what + " has unexpected key \"" + k + "\"");
        }
    }
}

int get_int(const json& j, const std::string& what)
{
    if (!j.is_number_integer())
        fail(ParseErrorKind::InvalidValue, what + " must be an integer");
    auto v = j.get<long long>();
    if (v < INT32_MIN || v > INT32_MAX)
        fail(ParseErrorKind::InvalidValue, what + " does not fit in 32 bits");
    return static_cast<int>(v);
}

int get_positive(const json& j, const std::string& what)
{
    int v = get_int(j, what);
    if (v < 1)
        fail(ParseErrorKind::InvalidValue, what + " must be >= 1");
    return v;
}

// Sorted, duplicate-free id list; ids checked against 1..limit.
std::vector<int> get_ids(const json& j, const std::string& what, int limit)
{
    if (!j.is_array())
        fail(ParseErrorKind::InvalidValue, what + " must be an array");
    std::vector<int> ids;
    for (const auto& e : j) {
        int v = get_int(e, what + " entry");
        if (v < 1 || v > limit)
            fail(ParseErrorKind::IdOutOfRange,
                 what + " id " + std::to_string(v) + " outside 1.." + std::to_string(limit));
        if (!ids.empty() && v <= ids.back())
            fail(ParseErrorKind::InvalidValue, what + " must be strictly ascending");
        ids.push_back(v);
    }
    return ids;
}

}  // namespace

std::string encode_schedule(const Schedule& sched)
{
    ordered_json root;
    const Instance& in = sched.instance;
    root["instance"] = {{"t", in.t}, {"s", in.s}, {"c", in.c}, {"sigma", in.sigma}, {"gamma", in.gamma}};
    ordered_json dinners = ordered_json::array();
    for (const Dinner& dn : sched.dinners) {
        ordered_json tables = ordered_json::array();
        for (const TableSeating& tb : dn.tables) {
            ordered_json t;
            t["suppliers"] = ids_json(tb.suppliers);
            t["customers"] = ids_json(tb.customers);
            tables.push_back(std::move(t));
        }
        dinners.push_back(std::move(tables));
    }
    root["dinners"] = std::move(dinners);
    return root.dump();
}

Schedule decode_schedule(std::string_view text)
{
    json root = parse_text(text);
    require_object(root, "schedule", {"instance", "dinners"});
    const json& ji = root["instance"];
    require_object(ji, "instance", {"t", "s", "c", "sigma", "gamma"});

    Schedule sched;
    Instance& in = sched.instance;
    in.t = get_positive(ji["t"], "instance.t");
    in.s = get_positive(ji["s"], "instance.s");
    in.c = get_positive(ji["c"], "instance.c");
    in.sigma = get_positive(ji["sigma"], "instance.sigma");
    in.gamma = get_positive(ji["gamma"], "instance.gamma");

    const json& jd = root["dinners"];
    if (!jd.is_array())
        fail(ParseErrorKind::InvalidValue, "dinners must be an array");
    for (std::size_t d = 0; d < jd.size(); ++d) {
        const json& tables = jd[d];
        std::string where = "dinner " + std::to_string(d + 1);
        if (!tables.is_array())
            fail(ParseErrorKind::InvalidValue, where + " must be an array of tables");
        Dinner dn;
        for (std::size_t ti = 0; ti < tables.size(); ++ti) {
            std::string tw = where + " table " + std::to_string(ti + 1);
            require_object(tables[ti], tw, {"suppliers", "customers"});
            TableSeating tb;
            tb.suppliers = get_ids(tables[ti]["suppliers"], tw + " suppliers", in.s);
            tb.customers = get_ids(tables[ti]["customers"], tw + " customers", in.c);
            dn.tables.push_back(std::move(tb));
        }
        sched.dinners.push_back(std::move(dn));
    }
    return sched;
}

std::string encode_template(const ScheduleTemplate& tpl)
{
    ordered_json root;
    root["name"] = tpl.name;
    root["suppliers"] = tpl.suppliers;
    root["groups"] = tpl.groups;
    ordered_json grid = ordered_json::array();
    for (const auto& row : tpl.grid) {
        ordered_json r = ordered_json::array();
        for (const auto& cell : row)
            r.push_back(ids_json(cell));
        grid.push_back(std::move(r));
    }
    root["grid"] = std::move(grid);
    return root.dump();
}

ScheduleTemplate decode_template(std::string_view text)
{
    json root = parse_text(text);
    require_object(root, "template", {"name", "suppliers", "groups", "grid"});
    ScheduleTemplate tpl;
    if (!root["name"].is_string())
        fail(ParseErrorKind::InvalidValue, "template name must be a string");
    tpl.name = root["name"].get<std::string>();
    tpl.suppliers = get_positive(root["suppliers"], "template suppliers");
    tpl.groups = get_positive(root["groups"], "template groups");
    const json& grid = root["grid"];
    if (!grid.is_array())
        fail(ParseErrorKind::InvalidValue, "template grid must be an array");
    for (const auto& row : grid) {
        if (!row.is_array() || static_cast<int>(row.size()) != tpl.groups)
            fail(ParseErrorKind::InvalidValue, "each grid row must hold one cell per group");
        std::vector<std::vector<int>> r;
        for (const auto& cell : row)
            r.push_back(get_ids(cell, "grid cell", tpl.suppliers));
        tpl.grid.push_back(std::move(r));
    }
    return tpl;
}

namespace {

template <class T>
ordered_json optional_json(const std::optional<T>& v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::int64_t get_int64(const json& j, const std::string& what)
{
    if (!j.is_number_integer())
        fail(ParseErrorKind::InvalidValue, what + " must be an integer");
    return j.get<std::int64_t>();
}

std::optional<std::int64_t> get_optional(const json& j, const std::string& what)
{
    if (j.is_null())
        return std::nullopt;
    return get_int64(j, what);
}

bool get_bool(const json& j, const std::string& what)
{
    if (!j.is_boolean())
        fail(ParseErrorKind::InvalidValue, what + " must be a boolean");
    return j.get<bool>();
}

}  // namespace

std::string encode_bounds(const BoundsReport& r)
{
    ordered_json j;
    j["lb1"] = r.lb1;
    j["lb2"] = r.lb2;
    j["lb3"] = r.lb3;
    j["lb4"] = optional_json(r.lb4);
    j["lb5"] = r.lb5;
    j["lb5_j"] = r.lb5_j;
    j["j_star"] = optional_json(r.j_star);
    j["lb_best"] = r.lb_best;
    j["ub1"] = r.ub1;
    j["ub1_improved"] = optional_json(r.ub1_improved);
    j["ub2"] = optional_json(r.ub2);
    j["ub_eucli"] = r.ub_eucli;
    j["ub_best"] = r.ub_best;
    j["ub1_witnessed"] = r.ub1_witnessed;
    j["ub1_improved_witnessed"] = r.ub1_improved_witnessed;
    return j.dump();
}

BoundsReport decode_bounds(std::string_view text)
{
    const json j = parse_text(text);
    require_object(j, "bounds",
                   {"lb1", "lb2", "lb3", "lb4", "lb5", "lb5_j", "j_star", "lb_best", "ub1", "ub1_improved", "ub2",
                    "ub_eucli", "ub_best", "ub1_witnessed", "ub1_improved_witnessed"});
    BoundsReport r;
    r.lb1 = get_int64(j["lb1"], "lb1");
    r.lb2 = get_int64(j["lb2"], "lb2");
    r.lb3 = get_int64(j["lb3"], "lb3");
    r.lb4 = get_optional(j["lb4"], "lb4");
    r.lb5 = get_int64(j["lb5"], "lb5");
    r.lb5_j = get_int(j["lb5_j"], "lb5_j");
    if (auto js = get_optional(j["j_star"], "j_star"))
        r.j_star = static_cast<int>(*js);
    r.lb_best = get_int64(j["lb_best"], "lb_best");
    r.ub1 = get_int64(j["ub1"], "ub1");
    r.ub1_improved = get_optional(j["ub1_improved"], "ub1_improved");
    r.ub2 = get_optional(j["ub2"], "ub2");
    r.ub_eucli = get_int64(j["ub_eucli"], "ub_eucli");
    r.ub_best = get_int64(j["ub_best"], "ub_best");
    r.ub1_witnessed = get_bool(j["ub1_witnessed"], "ub1_witnessed");
    r.ub1_improved_witnessed = get_bool(j["ub1_improved_witnessed"], "ub1_improved_witnessed");
    return r;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace dinner
