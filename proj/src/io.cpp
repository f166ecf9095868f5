#include "l2k/io.hpp"

#include "l2k/errors.hpp"
#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace l2k {

namespace detail {

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const Json& field(const Json& obj, const char* key, std::string_view where)
{
    if (!obj.is_object()) throw ParseError(std::string(where) + ": expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
    return *it;
}

std::string string_field(const Json& obj, const char* key, std::string_view where)
{
    const Json& v = field(obj, key, where);
    if (!v.is_string()) throw ParseError(std::string(where) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

std::uint64_t unsigned_value(const Json& v, std::string_view where)
{
    if (!v.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    const auto s = v.get<std::int64_t>();
    if (s < 0) throw ParseError(std::string(where) + ": expected a nonnegative integer");
    return static_cast<std::uint64_t>(s);
}

Rational rational_from_json(const Json& v, std::string_view where)
{
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) throw ParseError(std::string(where) + ": rational must be a \"p/q\" string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

Scalar scalar_from_json(const Json& v, std::string_view where)
{
    if (v.is_object()) {
        const Rational re = v.contains("re") ? rational_from_json(v["re"], where) : Rational(0);
        const Rational im = v.contains("im") ? rational_from_json(v["im"], where) : Rational(0);
        for (const auto& [key, _] : v.items())
            if (key != "re" && key != "im") throw ParseError(std::string(where) + ": unexpected key \"" + key + "\"");
        return {re, im};
    }
    return rational_from_json(v, where);
}

Json scalar_to_json(const Scalar& s)
{
    if (s.is_real()) return s.re().str();
    return Json{{"re", s.re().str()}, {"im", s.im().str()}};
}

CayleyTable cayley_from_json(const Json& table)
{
    if (!table.is_array()) throw ParseError("cayley must be an array of rows");
    CayleyTable cayley;
    for (const auto& row : table) {
        if (!row.is_array()) throw ParseError("cayley rows must be arrays");
        auto& out = cayley.emplace_back();
        for (const auto& e : row) {
            const std::uint64_t g = unsigned_value(e, "cayley entry");
            if (g > UINT32_MAX) throw ValidationError("cayley entry out of range");
            out.push_back(static_cast<std::uint32_t>(g));
        }
    }
    return cayley;
}

AlgebraPtr algebra_from_json(const Json& doc)
{
    const std::string kind = string_field(doc, "kind", "algebra");
    if (kind == "multi_matrix") {
        const Json& blocks = field(doc, "blocks", "multi_matrix");
        const Json& weights = field(doc, "weights", "multi_matrix");
        if (!blocks.is_array() || !weights.is_array()) throw ParseError("multi_matrix: blocks and weights must be arrays");
        std::vector<std::size_t> n;
        for (const auto& b : blocks) n.push_back(unsigned_value(b, "multi_matrix block"));
        std::vector<Rational> t;
        for (const auto& w : weights) t.push_back(rational_from_json(w, "multi_matrix weight"));
        if (n.size() != t.size()) throw ParseError("multi_matrix: blocks and weights differ in length");
        return multi_matrix_algebra(n, t);
    }
    if (kind == "group") {
        const CayleyTable cayley = cayley_from_json(field(doc, "cayley", "group"));
        const std::string name = doc.contains("name") ? string_field(doc, "name", "group") : std::string();
        return group_algebra(cayley, name);
    }
    if (kind == "tensor") return tensor_algebra(algebra_from_json(field(doc, "left", "tensor")),
                                                algebra_from_json(field(doc, "right", "tensor")));
    throw ParseError("algebra: unknown kind \"" + kind + "\"");
}

}  // namespace detail

AlgebraPtr parse_algebra(std::string_view text)
{
    return detail::algebra_from_json(detail::parse_json(text));
}

std::string read_text_file(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot read " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraPtr load_algebra(const std::filesystem::path& file)
{
    return parse_algebra(read_text_file(file));
}

Scalar parse_scalar(std::string_view text)
{
    return detail::scalar_from_json(detail::parse_json(text), "scalar");
}

std::string scalar_to_text(const Scalar& s)
{
    return detail::scalar_to_json(s).dump();
}

}  // namespace l2k
