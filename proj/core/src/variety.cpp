#include "cobord/variety.hpp"

#include <nlohmann/json.hpp>

#include "cobord/errors.hpp"

namespace cobord {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int as_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string("expected an integer for ") + what + ", got " + j.dump());
    return j.get<int>();
}

const json& pair_at(const json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(what) + " expects a two-element array, got " + j.dump());
    return j;
}

std::vector<VarietyExpr> list_of(const json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " expects an array, got " + j.dump());
    std::vector<VarietyExpr> out;
    for (const auto& item : j)
        out.push_back(VarietyExpr::from_json(item));
    return out;
}

}  // namespace

std::optional<int> VarietyExpr::dimension() const
{
    return std::visit(
        Overloaded{
            [](const expr::Point&) -> std::optional<int> { return 0; },
            [](const expr::Proj& n) -> std::optional<int> { return n.n; },
            [](const expr::Hyp& h) -> std::optional<int> { return h.n; },
            [](const expr::CompInt& c) -> std::optional<int> { return c.n; },
            [](const expr::Milnor& m) -> std::optional<int> { return m.m + m.n - 1; },
            [](const expr::Product& p) -> std::optional<int> {
                int total = 0;
                for (const auto& f : p.factors) {
                    auto d = f.dimension();
                    if (!d)
                        return std::nullopt;
                    total += *d;
                }
                return total;
            },
            [](const expr::DisjointUnion& u) -> std::optional<int> {
                std::optional<int> common;
                for (const auto& part : u.parts) {
                    auto d = part.dimension();
                    if (!d || (common && *common != *d))
                        return std::nullopt;
                    common = d;
                }
                return common;
            },
            [](const expr::Scaled& s) -> std::optional<int> { return s.inner->dimension(); },
        },
        node_);
}

int VarietyExpr::max_dimension() const
{
    return std::visit(Overloaded{
                          [](const expr::Product& p) {
                              int total = 0;
                              for (const auto& f : p.factors)
                                  total += f.max_dimension();
                              return total;
                          },
                          [](const expr::DisjointUnion& u) {
                              int best = 0;
                              for (const auto& part : u.parts)
                                  best = std::max(best, part.max_dimension());
                              return best;
                          },
                          [](const expr::Scaled& s) { return s.inner->max_dimension(); },
                          [this](const auto&) { return *dimension(); },
                      },
                      node_);
}

json VarietyExpr::to_json() const
{
    return std::visit(Overloaded{
                          [](const expr::Point&) { return json("point"); },
                          [](const expr::Proj& n) { return json{{"proj", n.n}}; },
                          [](const expr::Hyp& h) { return json{{"hyp", {h.degree, h.n}}}; },
                          [](const expr::CompInt& c) { return json{{"ci", {c.degrees, c.n}}}; },
                          [](const expr::Milnor& m) { return json{{"milnor", {m.m, m.n}}}; },
                          [](const expr::Product& p) {
                              json arr = json::array();
                              for (const auto& f : p.factors)
                                  arr.push_back(f.to_json());
                              return json{{"prod", arr}};
                          },
                          [](const expr::DisjointUnion& u) {
                              json arr = json::array();
                              for (const auto& part : u.parts)
                                  arr.push_back(part.to_json());
                              return json{{"union", arr}};
                          },
                          [](const expr::Scaled& s) {
                              return json{{"scaled", json::array({s.factor, s.inner->to_json()})}};
                          },
                      },
                      node_);
}

std::string VarietyExpr::to_string() const { return to_json().dump(); }

VarietyExpr VarietyExpr::from_json(const json& j)
{
    if (j.is_string()) {
        if (j.get<std::string>() == "point")
            return point();
        throw ParseError("unknown variety " + j.dump());
    }
    if (!j.is_object() || j.size() != 1)
        throw ParseError("a variety is \"point\" or a single-key object, got " + j.dump());
    const std::string key = j.begin().key();
    const json& value = j.begin().value();
    if (key == "point")
        return point();
    if (key == "proj") {
        const int n = as_int(value, "proj");
        if (n < 0)
            throw ParseError("proj needs n >= 0");
        return proj(n);
    }
    if (key == "hyp") {
        const auto& v = pair_at(value, "hyp");
        const int d = as_int(v[0], "hyp degree");
        const int n = as_int(v[1], "hyp dimension");
        if (d < 1 || n < 0)
            throw ParseError("hyp needs degree >= 1 and n >= 0");
        return hyp(d, n);
    }
    if (key == "ci") {
        const auto& v = pair_at(value, "ci");
        if (!v[0].is_array() || v[0].empty())
            throw ParseError("ci expects a nonempty degree list");
        std::vector<int> degrees;
        for (const auto& d : v[0]) {
            degrees.push_back(as_int(d, "ci degree"));
            if (degrees.back() < 1)
                throw ParseError("ci degrees must be >= 1");
        }
        const int n = as_int(v[1], "ci dimension");
        if (n < 0)
            throw ParseError("ci needs n >= 0");
        return comp_int(std::move(degrees), n);
    }
    if (key == "milnor") {
        const auto& v = pair_at(value, "milnor");
        const int m = as_int(v[0], "milnor m");
        const int n = as_int(v[1], "milnor n");
        if (m < 0 || m > n || n < 1)
            throw ParseError("milnor needs 0 <= m <= n and n >= 1");
        return milnor(m, n);
    }
    if (key == "prod")
        return product(list_of(value, "prod"));
    if (key == "union")
        return disjoint_union(list_of(value, "union"));
    if (key == "scaled") {
        const auto& v = pair_at(value, "scaled");
        if (!v[0].is_number_integer())
            throw ParseError("scaled expects an integer factor");
        return scaled(v[0].get<long long>(), from_json(v[1]));
    }
    throw ParseError("unknown variety constructor \"" + key + "\"");
}

VarietyExpr VarietyExpr::parse(std::string_view text)
{
    json j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded()) {
        // Bare keyword without quotes, e.g. point on a command line.
        if (text == "point")
            return point();
        throw ParseError("malformed variety JSON: " + std::string(text));
    }
    return from_json(j);
}

}  // namespace cobord
