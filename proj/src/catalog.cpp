#include "l2k/catalog.hpp"

#include "l2k/errors.hpp"
#include "l2k/io.hpp"
#include "json_io.hpp"

#include <limits>
#include <stdexcept>

namespace l2k {

ExtendedReal::ExtendedReal(Rational value) : value_(std::move(value))
{
    if (value_.sign() < 0) throw std::invalid_argument("ExtendedReal: negative value " + value_.str());
}

ExtendedReal ExtendedReal::infinity()
{
    ExtendedReal x;
    x.infinite_ = true;
    return x;
}

const Rational& ExtendedReal::value() const
{
    if (infinite_) throw std::logic_error("ExtendedReal: infinite value has no finite part");
    return value_;
}

std::string ExtendedReal::str() const
{
    return infinite_ ? "inf" : value_.str();
}

ExtendedReal ExtendedReal::parse(std::string_view text)
{
    if (text == "inf") return infinity();
    return {Rational::parse(text)};
}

ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b)
{
    if (a.infinite_ || b.infinite_) return ExtendedReal::infinity();
    return {a.value_ + b.value_};
}

ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (a.infinite_ || b.infinite_) return ExtendedReal::infinity();
    return {a.value_ * b.value_};
}

std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b)
{
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
}

BettiSequence BettiSequence::single(std::size_t degree, ExtendedReal value)
{
    BettiSequence s;
    s.set(degree, std::move(value));
    return s;
}

BettiSequence BettiSequence::from_values(const std::vector<Rational>& values)
{
    BettiSequence s;
    for (std::size_t n = 0; n < values.size(); ++n) s.set(n, values[n]);
    return s;
}

ExtendedReal BettiSequence::at(std::size_t degree) const
{
    const auto it = values_.find(degree);
    return it == values_.end() ? ExtendedReal() : it->second;
}

void BettiSequence::set(std::size_t degree, ExtendedReal value)
{
    if (value.is_zero())
        values_.erase(degree);
    else
        values_[degree] = std::move(value);
}

std::size_t BettiSequence::length() const
{
    return values_.empty() ? 0 : values_.rbegin()->first + 1;
}

std::string BettiSequence::str() const
{
    detail::Json j = detail::Json::object();
    for (const auto& [n, v] : values_) j[std::to_string(n)] = v.str();
    return j.dump();
}

BettiSequence convolve(const BettiSequence& s, const BettiSequence& t)
{
    std::map<std::size_t, ExtendedReal> acc;
    for (const auto& [k, x] : s.support())
        for (const auto& [l, y] : t.support()) acc[k + l] = acc[k + l] + x * y;
    BettiSequence out;
    for (auto& [n, v] : acc) out.set(n, std::move(v));
    return out;
}

namespace {

DescriptorPtr make(auto value)
{
    return std::make_shared<const QuantumGroupDescriptor>(QuantumGroupDescriptor{std::move(value)});
}

constexpr std::uint64_t kMaxCount = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

}  // namespace

DescriptorPtr finite_qg(std::uint64_t dim)
{
    if (dim < 1 || dim > kMaxCount) throw ValidationError("finite_qg: dimension must be at least 1");
    return make(FiniteQG{dim});
}

DescriptorPtr cocommutative_finite(CayleyTable group)
{
    validate_cayley(group);
    return make(CocommutativeFinite{std::move(group)});
}

DescriptorPtr free_group_dual(std::uint64_t generators)
{
    if (generators < 2 || generators > kMaxCount) throw ValidationError("free_group_dual: needs at least 2 generators");
    return make(FreeGroupDual{generators});
}

DescriptorPtr finite_dim_algebra(AlgebraPtr algebra, std::size_t max_degree)
{
    if (!algebra) throw std::invalid_argument("finite_dim_algebra: null algebra");
    return make(FiniteDimAlgebra{std::move(algebra), {}, {}, max_degree});
}

DescriptorPtr product(DescriptorPtr left, DescriptorPtr right)
{
    if (!left || !right) throw std::invalid_argument("product: null arm");
    return make(Product{std::move(left), std::move(right)});
}

DescriptorPtr coamenable_infinite()
{
    return make(CoamenableInfinite{});
}

BettiSequence betti_of(const DescriptorPtr& d, std::uint64_t ceiling)
{
    if (!d) throw std::invalid_argument("betti_of: null descriptor");
    struct Visitor {
        std::uint64_t ceiling;
        BettiSequence operator()(const FiniteQG& q) const
        {
            return BettiSequence::single(0, Rational(1, static_cast<std::int64_t>(q.dim)));
        }
        BettiSequence operator()(const CocommutativeFinite& c) const
        {
            return BettiSequence::single(0, Rational(1, static_cast<std::int64_t>(c.group.size())));
        }
        BettiSequence operator()(const FreeGroupDual& f) const
        {
            return BettiSequence::single(1, Rational(static_cast<std::int64_t>(f.generators) - 1));
        }
        BettiSequence operator()(const FiniteDimAlgebra& a) const
        {
            return BettiSequence::from_values(betti_numbers(a.algebra, a.max_degree, ceiling, false).values);
        }
        BettiSequence operator()(const Product& p) const
        {
            return convolve(betti_of(p.left, ceiling), betti_of(p.right, ceiling));
        }
        BettiSequence operator()(const CoamenableInfinite&) const { return {}; }
    };
    return std::visit(Visitor{ceiling}, d->value);
}

std::vector<ExtendedReal> fixed_point_classify(const Rational& c)
{
    if (c.sign() <= 0 || c >= Rational(1)) throw std::invalid_argument("fixed_point_classify: c must lie in (0, 1)");
    // A finite x with x = c·x has (1 - c)·x = 0, so x = 0; ∞ is checked directly.
    std::vector<ExtendedReal> out;
    for (const ExtendedReal& x : {ExtendedReal(0), ExtendedReal::infinity()})
        if (ExtendedReal(c) * x == x) out.push_back(x);
    return out;
}

DescriptorPtr rational_first_betti(std::uint64_t p, std::uint64_t q)
{
    if (p < 1 || q < 1) throw std::invalid_argument("rational_first_betti: p and q must be positive");
    if (p == q) return free_group_dual(2);
    if (p >= kMaxCount) throw std::invalid_argument("rational_first_betti: p too large");
    return product(finite_qg(q), free_group_dual(p + 1));
}

namespace {

using detail::Json;

DescriptorPtr descriptor_from_json(const Json& doc, const std::filesystem::path& base_dir)
{
    const std::string kind = detail::string_field(doc, "kind", "descriptor");
    if (kind == "finite_qg") return finite_qg(detail::unsigned_value(detail::field(doc, "dim", kind), "finite_qg dim"));
    if (kind == "free_group_dual")
        return free_group_dual(detail::unsigned_value(detail::field(doc, "k", kind), "free_group_dual k"));
    if (kind == "coamenable_infinite") return coamenable_infinite();
    if (kind == "product")
        return product(descriptor_from_json(detail::field(doc, "left", kind), base_dir),
                       descriptor_from_json(detail::field(doc, "right", kind), base_dir));
    if (kind == "cocommutative_finite") {
        return cocommutative_finite(detail::cayley_from_json(detail::field(doc, "cayley", kind)));
    }
    if (kind == "finite_dim_algebra") {
        FiniteDimAlgebra a;
        if (doc.contains("max_degree")) a.max_degree = detail::unsigned_value(doc["max_degree"], "max_degree");
        if (doc.contains("file")) {
            a.file = detail::string_field(doc, "file", kind);
            std::filesystem::path p(a.file);
            if (p.is_relative()) p = base_dir / p;
            a.algebra = load_algebra(p);
        } else {
            const Json& inline_doc = detail::field(doc, "algebra", kind);
            a.document = inline_doc.dump();
            a.algebra = detail::algebra_from_json(inline_doc);
        }
        return make(std::move(a));
    }
    throw ParseError("descriptor: unknown kind \"" + kind + "\"");
}

Json descriptor_to_json(const DescriptorPtr& d)
{
    struct Visitor {
        Json operator()(const FiniteQG& q) const { return {{"kind", "finite_qg"}, {"dim", q.dim}}; }
        Json operator()(const CocommutativeFinite& c) const
        {
            return {{"kind", "cocommutative_finite"}, {"cayley", c.group}};
        }
        Json operator()(const FreeGroupDual& f) const { return {{"kind", "free_group_dual"}, {"k", f.generators}}; }
        Json operator()(const FiniteDimAlgebra& a) const
        {
            Json j{{"kind", "finite_dim_algebra"}};
            if (!a.file.empty())
                j["file"] = a.file;
            else if (!a.document.empty())
                j["algebra"] = Json::parse(a.document);
            else
                throw std::invalid_argument("descriptor_to_text: algebra " + a.algebra->name() + " has no document");
            j["max_degree"] = a.max_degree;
            return j;
        }
        Json operator()(const Product& p) const
        {
            return {{"kind", "product"}, {"left", descriptor_to_json(p.left)}, {"right", descriptor_to_json(p.right)}};
        }
        Json operator()(const CoamenableInfinite&) const { return {{"kind", "coamenable_infinite"}}; }
    };
    return std::visit(Visitor{}, d->value);
}

}  // namespace

DescriptorPtr parse_descriptor(std::string_view text, const std::filesystem::path& base_dir)
{
    return descriptor_from_json(detail::parse_json(text), base_dir);
}

DescriptorPtr load_descriptor(const std::filesystem::path& file)
{
    return parse_descriptor(read_text_file(file), file.parent_path());
}

std::string descriptor_to_text(const DescriptorPtr& d)
{
    return descriptor_to_json(d).dump();
}

std::string describe(const DescriptorPtr& d)
{
    struct Visitor {
        std::string operator()(const FiniteQG& q) const { return "FiniteQG(" + std::to_string(q.dim) + ")"; }
        std::string operator()(const CocommutativeFinite& c) const
        {
            return "CocommutativeFinite(|G|=" + std::to_string(c.group.size()) + ")";
        }
        std::string operator()(const FreeGroupDual& f) const
        {
            return "FreeGroupDual(" + std::to_string(f.generators) + ")";
        }
        std::string operator()(const FiniteDimAlgebra& a) const { return "FiniteDimAlgebra(" + a.algebra->name() + ")"; }
        std::string operator()(const Product& p) const { return "(" + describe(p.left) + " x " + describe(p.right) + ")"; }
        std::string operator()(const CoamenableInfinite&) const { return "CoamenableInfinite"; }
    };
    return std::visit(Visitor{}, d->value);
}

}  // namespace l2k
