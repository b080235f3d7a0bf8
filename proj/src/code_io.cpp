#include "qcap/code_io.hpp"

#include <charconv>
#include <fstream>

#include "json.hpp"

namespace qcap {

StabilizerCode read_code_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("code file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("generators")) {
        throw std::invalid_argument("code file needs an object with \"n\" and \"generators\"");
    }

    StabilizerCode code;
    code.n = j.at("n").get<int>();
    for (const auto& s : j.at("generators")) {
        code.generators.push_back(PauliOperator::from_string(s.get<std::string>()));
    }

    const bool has_x = j.contains("logical_x"), has_z = j.contains("logical_z");
    if (has_x != has_z) {
        throw std::invalid_argument("provide both logical_x and logical_z, or neither");
    }
    if (has_x) {
        code.logical_x = PauliOperator::from_string(j.at("logical_x").get<std::string>());
        code.logical_z = PauliOperator::from_string(j.at("logical_z").get<std::string>());
    } else {
        std::tie(code.logical_x, code.logical_z) = derive_logicals(code.n, code.generators);
    }
    if (auto err = validate(code)) {
        throw std::invalid_argument("invalid code: " + *err);
    }
    return code;
}

StabilizerCode load_code_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open code file: " + path);
    }
    return read_code_json(in);
}

CodeSpec parse_code_spec(std::string_view spec) {
    CodeSpec out;
    out.label = std::string(spec);
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("code spec must be cat:<p>, rotcat:<p> or file:<path>");
    }
    const std::string_view head = spec.substr(0, colon);
    const std::string_view rest = spec.substr(colon + 1);
    if (head == "file") {
        out.kind = CodeSpec::Kind::File;
        out.path = std::string(rest);
        if (out.path.empty()) throw std::invalid_argument("file: spec needs a path");
        return out;
    }
    if (head == "cat") {
        out.kind = CodeSpec::Kind::Cat;
    } else if (head == "rotcat") {
        out.kind = CodeSpec::Kind::RotatedCat;
    } else {
        throw std::invalid_argument("unknown code spec \"" + out.label + "\"");
    }
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out.p);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || out.p < 1) {
        throw std::invalid_argument("bad block size in code spec \"" + out.label + "\"");
    }
    return out;
}

StabilizerCode make_code(const CodeSpec& spec) {
    switch (spec.kind) {
        case CodeSpec::Kind::Cat: return cat_code(spec.p);
        case CodeSpec::Kind::RotatedCat: return rotated_cat_code(spec.p);
        case CodeSpec::Kind::File: return load_code_json(spec.path);
    }
    throw std::logic_error("unreachable");
}

ConcatLevel make_level(const CodeSpec& spec) {
    const bool symmetric = spec.kind != CodeSpec::Kind::File;
    return ConcatLevel{make_code(spec), symmetric};
}

}  // namespace qcap
