#ifndef LEIBNIZ_SPECFILE_HPP
#define LEIBNIZ_SPECFILE_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "leibniz/cyclic.hpp"

namespace leibniz {

/// A parsed algebra file. Cyclic inputs keep their classification; table
/// inputs are validated general algebras.
struct LoadedAlgebra {
    std::variant<CyclicAlgebra, LeibnizAlgebra> value;

    bool is_cyclic() const { return std::holds_alternative<CyclicAlgebra>(value); }
    const CyclicAlgebra& cyclic() const { return std::get<CyclicAlgebra>(value); }
    const LeibnizAlgebra& algebra() const {
        return is_cyclic() ? cyclic().algebra() : std::get<LeibnizAlgebra>(value);
    }
    const FieldDescriptor& field() const { return algebra().field(); }
};

/// Reads the JSON algebra format:
///   {"field": {"kind":"rationals"} | {"kind":"prime","p":3},
///    "algebra": {"kind":"cyclic","n":3,"alpha":["0","1"]}
///              | {"kind":"table","dim":2,"brackets":[
///                    {"left":1,"right":1,"value":["0","1"]}]}}
/// Scalars are strings in the scalar text syntax, indices are 1-based, and
/// omitted brackets are zero. Throws ParseError / BadSpec on malformed
/// input; a table that fails the Leibniz identity does not load.
LoadedAlgebra load_algebra(std::istream& in);
LoadedAlgebra load_algebra_file(const std::string& path);

/// Writes the same format; loading the output reproduces the input algebra
/// with bit-exact scalars.
std::string algebra_to_json(const LoadedAlgebra& algebra);
std::string cyclic_to_json(const CyclicAlgebra& algebra);
std::string table_to_json(const LeibnizAlgebra& algebra);

/// Reads a map file {"matrix": [["1","0"],["0","1"]]}: rows of scalar
/// strings; column j is the image of the j-th basis vector.
Matrix load_map(std::istream& in, const FieldDescriptor& f, std::size_t dim);
Matrix load_map_file(const std::string& path, const FieldDescriptor& f, std::size_t dim);

std::string map_to_json(const Matrix& m);

}  // namespace leibniz

#endif
