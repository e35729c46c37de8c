#include "srtz/matrix_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "srtz/error.hpp"

namespace srtz {

namespace {

using nlohmann::json;

json to_object(const ToeplitzSpec& spec)
{
    return json{{"p", spec.field().degree()},
                {"poly", spec.field().poly()},
                {"omega", spec.omega()},
                {"n", spec.n()},
                {"exponents", std::vector<Exponent>(spec.exponents().begin(), spec.exponents().end())}};
}

template <typename T>
T field_of(const json& obj, const char* key)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        throw FormatError(std::string("matrix file: missing field \"") + key + "\"");
    if (!it->is_number_unsigned())
        throw FormatError(std::string("matrix file: field \"") + key + "\" must be a non-negative integer");
    return it->get<T>();
}

ToeplitzSpec from_object(const json& obj)
{
    if (!obj.is_object())
        throw FormatError("matrix file: expected an object");
    const auto p = field_of<unsigned>(obj, "p");
    const auto poly = field_of<std::uint32_t>(obj, "poly");
    const auto omega = field_of<std::uint32_t>(obj, "omega");
    const auto n = field_of<std::size_t>(obj, "n");
    const auto it = obj.find("exponents");
    if (it == obj.end() || !it->is_array())
        throw FormatError("matrix file: \"exponents\" must be an array");
    std::vector<Exponent> exps;
    for (const auto& e : *it) {
        if (!e.is_number_unsigned())
            throw FormatError("matrix file: exponents must be non-negative integers");
        exps.push_back(e.get<Exponent>());
    }
    if (n == 0 || exps.size() != n - 1)
        throw FormatError("matrix file: expected n - 1 = " + std::to_string(n == 0 ? 0 : n - 1) + " exponents, got " +
                          std::to_string(exps.size()));
    auto field = make_field(p, poly);
    if (!field->contains(omega))
        throw FormatError("matrix file: omega outside the field");
    return ToeplitzSpec(std::move(field), static_cast<Element>(omega), std::move(exps));
}

} // namespace

std::string to_json(const ToeplitzSpec& spec)
{
    return to_object(spec).dump() + "\n";
}

std::string to_json(const std::vector<ToeplitzSpec>& specs)
{
    if (specs.size() == 1)
        return to_json(specs.front());
    json arr = json::array();
    for (const auto& s : specs)
        arr.push_back(to_object(s));
    return arr.dump(2) + "\n";
}

std::vector<ToeplitzSpec> parse_matrices(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("matrix file: ") + e.what());
    }
    std::vector<ToeplitzSpec> out;
    if (doc.is_array()) {
        if (doc.empty())
            throw FormatError("matrix file: empty array");
        for (const auto& obj : doc)
            out.push_back(from_object(obj));
    } else {
        out.push_back(from_object(doc));
    }
    return out;
}

std::vector<ToeplitzSpec> read_matrices(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrices(ss.str());
}

ToeplitzSpec read_matrix(const std::filesystem::path& path)
{
    auto specs = read_matrices(path);
    if (specs.size() != 1)
        throw FormatError(path.string() + ": expected one matrix, found " + std::to_string(specs.size()));
    return std::move(specs.front());
}

void write_matrices(const std::filesystem::path& path, const std::vector<ToeplitzSpec>& specs)
{
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot write " + path.string());
    out << to_json(specs);
    if (!out)
        throw FormatError("write failed: " + path.string());
}

} // namespace srtz
