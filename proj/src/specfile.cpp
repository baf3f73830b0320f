#include "leibniz/specfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace leibniz {

namespace {

using nlohmann::json;

json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

FieldDescriptor field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("field block must be an object with a string 'kind'");
    }
    std::string kind = j["kind"].get<std::string>();
    if (kind == "rationals") return FieldDescriptor::rationals();
    if (kind == "prime") {
        if (!j.contains("p") || !j["p"].is_number_integer()) {
            throw ParseError("prime field block needs an integer 'p'");
        }
        return FieldDescriptor::prime(j["p"].get<std::int64_t>());
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

json field_to_json(const FieldDescriptor& f) {
    json j;
    if (f.is_rationals()) {
        j["kind"] = "rationals";
    } else {
        j["kind"] = "prime";
        j["p"] = f.p();
    }
    return j;
}

Scalar scalar_from_json(const FieldDescriptor& f, const json& j) {
    if (!j.is_string()) throw ParseError("scalars must be strings in the scalar text syntax");
    return Scalar::parse(f, j.get<std::string>());
}

std::size_t index_from_json(const json& j, const char* what, std::size_t dim) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    std::int64_t v = j.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > dim) {
        throw ParseError(std::string(what) + " out of range 1.." + std::to_string(dim));
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

LoadedAlgebra load_algebra(std::istream& in) {
    json root = parse_json(in);
    if (!root.is_object() || !root.contains("field") || !root.contains("algebra")) {
        throw ParseError("algebra file needs 'field' and 'algebra' blocks");
    }
    FieldDescriptor f = field_from_json(root["field"]);
    const json& a = root["algebra"];
    if (!a.is_object() || !a.contains("kind") || !a["kind"].is_string()) {
        throw ParseError("algebra block must be an object with a string 'kind'");
    }
    std::string kind = a["kind"].get<std::string>();

    if (kind == "cyclic") {
        if (!a.contains("n") || !a["n"].is_number_integer() || a["n"].get<std::int64_t>() < 1) {
            throw ParseError("cyclic algebra needs a positive integer 'n'");
        }
        std::size_t n = a["n"].get<std::size_t>();
        if (!a.contains("alpha") || !a["alpha"].is_array() || a["alpha"].size() != n - 1) {
            throw ParseError("cyclic algebra needs an 'alpha' array of length n-1");
        }
        std::vector<Scalar> alpha;
        alpha.reserve(n - 1);
        for (const auto& item : a["alpha"]) alpha.push_back(scalar_from_json(f, item));
        return LoadedAlgebra{build_cyclic(CyclicSpec{f, n, std::move(alpha)})};
    }

    if (kind == "table") {
        if (!a.contains("dim") || !a["dim"].is_number_integer() || a["dim"].get<std::int64_t>() < 1) {
            throw ParseError("table algebra needs a positive integer 'dim'");
        }
        std::size_t dim = a["dim"].get<std::size_t>();
        LeibnizAlgebra::Tensor tensor;
        if (a.contains("brackets")) {
            if (!a["brackets"].is_array()) throw ParseError("'brackets' must be an array");
            for (const auto& entry : a["brackets"]) {
                if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") ||
                    !entry.contains("value")) {
                    throw ParseError("bracket entries need 'left', 'right' and 'value'");
                }
                std::size_t i = index_from_json(entry["left"], "'left'", dim);
                std::size_t j = index_from_json(entry["right"], "'right'", dim);
                if (!entry["value"].is_array() || entry["value"].size() != dim) {
                    throw ParseError("bracket 'value' must be a coordinate array of length dim");
                }
                CoordVec value;
                value.reserve(dim);
                for (const auto& item : entry["value"]) value.push_back(scalar_from_json(f, item));
                if (tensor.count({i, j})) throw ParseError("duplicate bracket entry");
                tensor[{i, j}] = std::move(value);
            }
        }
        return LoadedAlgebra{LeibnizAlgebra::from_table(f, dim, std::move(tensor))};
    }

    throw ParseError("unknown algebra kind '" + kind + "'");
}

LoadedAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_algebra(in);
}

std::string cyclic_to_json(const CyclicAlgebra& algebra) {
    json root;
    root["field"] = field_to_json(algebra.field());
    json a;
    a["kind"] = "cyclic";
    a["n"] = algebra.n();
    json alpha = json::array();
    for (const auto& s : algebra.spec().alpha) alpha.push_back(s.to_string());
    a["alpha"] = std::move(alpha);
    root["algebra"] = std::move(a);
    return root.dump(2) + "\n";
}

std::string table_to_json(const LeibnizAlgebra& algebra) {
    json root;
    root["field"] = field_to_json(algebra.field());
    json a;
    a["kind"] = "table";
    a["dim"] = algebra.dim();
    json brackets = json::array();
    for (const auto& [key, value] : algebra.tensor()) {
        json entry;
        entry["left"] = key.first;
        entry["right"] = key.second;
        json coords = json::array();
        for (const auto& s : value) coords.push_back(s.to_string());
        entry["value"] = std::move(coords);
        brackets.push_back(std::move(entry));
    }
    a["brackets"] = std::move(brackets);
    root["algebra"] = std::move(a);
    return root.dump(2) + "\n";
}

std::string algebra_to_json(const LoadedAlgebra& algebra) {
    return algebra.is_cyclic() ? cyclic_to_json(algebra.cyclic())
                               : table_to_json(std::get<LeibnizAlgebra>(algebra.value));
}

Matrix load_map(std::istream& in, const FieldDescriptor& f, std::size_t dim) {
    json root = parse_json(in);
    if (!root.is_object() || !root.contains("matrix") || !root["matrix"].is_array()) {
        throw ParseError("map file needs a 'matrix' array");
    }
    const json& rows = root["matrix"];
    if (rows.size() != dim) {
        throw ParseError("map must have " + std::to_string(dim) + " rows");
    }
    Matrix m(f, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || rows[i].size() != dim) {
            throw ParseError("map rows must have " + std::to_string(dim) + " entries");
        }
        for (std::size_t j = 0; j < dim; ++j) m.set(i, j, scalar_from_json(f, rows[i][j]));
    }
    return m;
}

Matrix load_map_file(const std::string& path, const FieldDescriptor& f, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_map(in, f, dim);
}

std::string map_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    json root;
    root["matrix"] = std::move(rows);
    return root.dump(2) + "\n";
}

}  // namespace leibniz
