#include "z4forms/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "z4forms/errors.hpp"

namespace z4::io {

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ContractViolation(std::string("JSON document is missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ContractViolation(std::string("field \"") + key + "\" has the wrong type: " + e.what());
    }
}

std::string strip_brackets(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == ' ' || c == '\t'; }),
               text.end());
    if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    return text;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

json to_json(const F2Vector& v) { return v.to_bits(); }

json to_json(const BilinearForm& form) {
    json gram = json::array();
    for (std::size_t i = 0; i < form.dim(); ++i) gram.push_back(form.gram().row(i).to_bits());
    return json{{"dim", form.dim()}, {"gram", gram}};
}

json to_json(const Enhancement& q) {
    std::vector<int> values;
    for (Z4 v : q.basis_values()) values.push_back(v.value());
    return json{{"form", to_json(q.form())}, {"values", values}};
}

json to_json(const UnimodularForm& m) { return json{{"dim", m.dim()}, {"gram", m.gram()}}; }

F2Vector vector_from_json(const json& j) {
    try {
        return F2Vector::from_bits(j.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw ContractViolation(std::string("expected an array of bits: ") + e.what());
    }
}

BilinearForm form_from_json(const json& j) {
    const auto dim = get_field<std::size_t>(j, "dim");
    const auto rows = get_field<std::vector<std::vector<int>>>(j, "gram");
    if (rows.size() != dim) throw ContractViolation("\"gram\" must have \"dim\" rows");
    std::vector<F2Vector> gram;
    for (const auto& r : rows) {
        if (r.size() != dim) throw ContractViolation("\"gram\" must have \"dim\" columns");
        gram.push_back(F2Vector::from_bits(r));
    }
    return BilinearForm(F2Matrix(dim, std::move(gram)));
}

Enhancement enhancement_from_json(const json& j) {
    if (j.is_object() && j.contains("enhancement")) return enhancement_from_json(j.at("enhancement"));
    if (!j.is_object() || !j.contains("form")) throw ContractViolation("JSON document is missing field \"form\"");
    BilinearForm form = form_from_json(j.at("form"));
    std::vector<Z4> values;
    for (int v : get_field<std::vector<int>>(j, "values")) {
        if (v < 0 || v > 3) throw ContractViolation("enhancement values must lie in 0..3");
        values.emplace_back(v);
    }
    return Enhancement(std::move(form), std::move(values));
}

UnimodularForm unimodular_from_json(const json& j) {
    const auto dim = get_field<std::size_t>(j, "dim");
    auto gram = get_field<IntMatrix>(j, "gram");
    if (gram.size() != dim) throw ContractViolation("\"gram\" must have \"dim\" rows");
    return UnimodularForm(std::move(gram));
}

IntVector char_from_json(const json& j) { return get_field<IntVector>(j, "char"); }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractViolation("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ContractViolation("invalid JSON in " + path + ": " + e.what());
    }
}

F2Vector parse_bits(const std::string& text) {
    const std::string body = strip_brackets(text);
    std::vector<int> bits;
    if (body.find(',') != std::string::npos) {
        for (const auto& item : split_commas(body)) {
            if (item != "0" && item != "1") throw ContractViolation("bit entries must be 0 or 1: '" + text + "'");
            bits.push_back(item == "1" ? 1 : 0);
        }
    } else {
        for (char c : body) {
            if (c != '0' && c != '1') throw ContractViolation("bit entries must be 0 or 1: '" + text + "'");
            bits.push_back(c == '1' ? 1 : 0);
        }
    }
    return F2Vector::from_bits(bits);
}

IntVector parse_ints(const std::string& text) {
    const std::string body = strip_brackets(text);
    IntVector out;
    if (body.empty()) return out;
    for (const auto& item : split_commas(body)) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ContractViolation("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    return out;
}

std::string format_values(const std::vector<Z4>& values) {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(values[i].value());
    }
    return s + ")";
}

std::string format_basis(const Subspace& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.basis().size(); ++i) {
        if (i > 0) out += ", ";
        out += s.basis()[i].to_string();
    }
    return out + "]";
}

}  // namespace z4::io
