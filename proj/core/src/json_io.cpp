#include "grothlab/json_io.hpp"

#include <json.hpp>

#include "grothlab/errors.hpp"

namespace grothlab {

namespace {

using nlohmann::json;

json cell_array(const Cell& c) { return json::array({c.row, c.col}); }

json cells_array(const std::vector<Cell>& cells) {
    json out = json::array();
    for (const Cell& c : cells) out.push_back(cell_array(c));
    return out;
}

json points_array(const std::set<Point>& points) {
    json out = json::array();
    for (const Point& p : points) out.push_back(p);
    return out;
}

json coefficient_value(const mpz_class& c) {
    if (c.fits_slong_p()) return json(static_cast<std::int64_t>(c.get_si()));
    return json(c.get_str());  // decimal string beyond 64 bits
}

json parsed(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw parse_error(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<Cell> cell_list_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw parse_error(std::string("missing array field \"") + key + "\"");
    std::vector<Cell> cells;
    for (const json& item : j[key]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw parse_error(std::string("entries of \"") + key +
                              "\" must be [row, col] integer pairs");
        cells.push_back(Cell{item[0].get<int>(), item[1].get<int>()});
    }
    return cells;
}

}  // namespace

std::string to_json(const Diagram& d) {
    json j;
    j["n_rows"] = d.n_rows();
    j["n_cols"] = d.n_cols();
    j["cells"] = cells_array(d.cells());
    return j.dump();
}

Diagram diagram_from_json(const std::string& text) {
    const json j = parsed(text);
    try {
        return Diagram(int_field(j, "n_rows"), int_field(j, "n_cols"),
                       cell_list_field(j, "cells"));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

std::string to_json(const PipeDream& p) {
    json j;
    j["n"] = p.n();
    j["crosses"] = cells_array(p.crosses());
    return j.dump();
}

PipeDream pipe_dream_from_json(const std::string& text) {
    const json j = parsed(text);
    try {
        return PipeDream(int_field(j, "n"), cell_list_field(j, "crosses"));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

std::string to_json(const SparsePolynomial& f) {
    json j;
    j["n_vars"] = f.n_vars();
    json terms = json::array();
    for (const auto& [exp, coef] : f.terms()) {
        json term;
        term["exp"] = exp;
        term["coef"] = coefficient_value(coef);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

std::string to_json(const LatticePointSet& s) {
    json j;
    j["dim"] = s.dim();
    j["points"] = points_array(s.points());
    return j.dump();
}

std::string to_json(const CheckReport& report) {
    json j;
    j["claim"] = report.claim;
    j["instance"] = report.instance;
    j["ok"] = report.ok;
    json lhs = json::array();
    for (const Point& p : report.lhs_minus_rhs) lhs.push_back(p);
    json rhs = json::array();
    for (const Point& p : report.rhs_minus_lhs) rhs.push_back(p);
    j["lhs_minus_rhs"] = std::move(lhs);
    j["rhs_minus_lhs"] = std::move(rhs);
    return j.dump();
}

namespace {

json step_object(const RaiseStep& s) {
    json j;
    j["case"] = s.case_id;
    j["tile"] = cell_array(s.tile);
    j["counter_tile"] = s.counter_tile ? cell_array(*s.counter_tile) : json(nullptr);
    json pipes;
    if (s.pipe_i) pipes["i"] = s.pipe_i;
    if (s.pipe_j) pipes["j"] = s.pipe_j;
    if (s.pipe_l) pipes["l"] = s.pipe_l;
    if (s.pipe_m) pipes["m"] = s.pipe_m;
    j["pipes"] = std::move(pipes);
    j["cleared_fakes"] = cells_array(s.cleared_fakes);
    return j;
}

}  // namespace

std::string raise_run_to_json(const Permutation& w, int row, const PipeDream& initial,
                              const RaiseResult& result) {
    json j;
    j["perm"] = w.to_string();
    j["row"] = row;
    j["initial"] = json::parse(to_json(initial));
    j["initial_weight"] = trace(initial).weight();
    j["final"] = json::parse(to_json(result.pipe_dream));
    j["final_weight"] = trace(result.pipe_dream).weight();
    json steps = json::array();
    for (const RaiseStep& s : result.steps) steps.push_back(step_object(s));
    j["steps"] = std::move(steps);
    return j.dump();
}

std::string raise_steps_to_json(const std::vector<RaiseStep>& steps) {
    json arr = json::array();
    for (const RaiseStep& s : steps) arr.push_back(step_object(s));
    return arr.dump();
}

}  // namespace grothlab
