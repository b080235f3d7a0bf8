#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qcap/concat.hpp"
#include "qcap/stabilizer.hpp"

namespace qcap {

/// Reads a code description of the form
///   {"n": 3, "generators": ["ZZI", "ZIZ"],
///    "logical_x": "XXX", "logical_z": "ZII"}
/// The logicals may be omitted together, in which case they are derived
/// from the generators. Throws std::invalid_argument on malformed input or
/// an invalid code.
StabilizerCode read_code_json(std::istream& in);
StabilizerCode load_code_json(const std::string& path);

/// Textual code spec: "cat:<p>", "rotcat:<p>" or "file:<path.json>".
struct CodeSpec {
    enum class Kind { Cat, RotatedCat, File };
    Kind kind = Kind::Cat;
    int p = 1;
    std::string path;
    std::string label;  // the original spec text
};

CodeSpec parse_code_spec(std::string_view spec);
StabilizerCode make_code(const CodeSpec& spec);
ConcatLevel make_level(const CodeSpec& spec);

}  // namespace qcap
