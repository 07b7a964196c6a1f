#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cobord {

class VarietyExpr;

namespace expr {

struct Point {};
/// Projective space P^n.
struct Proj {
    int n;
};
/// Smooth hypersurface of degree d and dimension n in P^{n+1}.
struct Hyp {
    int degree;
    int n;
};
/// Smooth complete intersection of the given degrees, dimension n, in
/// P^{n + #degrees}.
struct CompInt {
    std::vector<int> degrees;
    int n;
};
/// Milnor hypersurface H_{m,n}: a (1,1)-divisor in P^m x P^n.
struct Milnor {
    int m;
    int n;
};
struct Product {
    std::vector<VarietyExpr> factors;
};
struct DisjointUnion {
    std::vector<VarietyExpr> parts;
};
/// Formal integer multiple of a class.
struct Scaled {
    long long factor;
    std::shared_ptr<const VarietyExpr> inner;
};

}  // namespace expr

/// Expression tree over the standard variety constructors.
class VarietyExpr {
public:
    using Node = std::variant<expr::Point, expr::Proj, expr::Hyp, expr::CompInt, expr::Milnor, expr::Product,
                              expr::DisjointUnion, expr::Scaled>;

    VarietyExpr() : node_(expr::Point{}) {}
    VarietyExpr(Node node) : node_(std::move(node)) {}

    static VarietyExpr point() { return VarietyExpr(Node(expr::Point{})); }
    static VarietyExpr proj(int n) { return VarietyExpr(Node(expr::Proj{n})); }
    static VarietyExpr hyp(int degree, int n) { return VarietyExpr(Node(expr::Hyp{degree, n})); }
    static VarietyExpr comp_int(std::vector<int> degrees, int n) { return VarietyExpr(Node(expr::CompInt{std::move(degrees), n})); }
    static VarietyExpr milnor(int m, int n) { return VarietyExpr(Node(expr::Milnor{m, n})); }
    static VarietyExpr product(std::vector<VarietyExpr> factors) { return VarietyExpr(Node(expr::Product{std::move(factors)})); }
    static VarietyExpr disjoint_union(std::vector<VarietyExpr> parts)
    {
        return VarietyExpr(Node(expr::DisjointUnion{std::move(parts)}));
    }
    static VarietyExpr scaled(long long factor, VarietyExpr inner)
    {
        return VarietyExpr(Node(expr::Scaled{factor, std::make_shared<const VarietyExpr>(std::move(inner))}));
    }

    const Node& node() const { return node_; }

    /// Pure dimension; empty for mixed-dimensional or empty unions.
    std::optional<int> dimension() const;
    /// Largest dimension of any component (0 for an empty union).
    int max_dimension() const;

    /// Canonical compact text: the JSON grammar without whitespace.
    std::string to_string() const;

    /// Grammar: "point" | {"proj":n} | {"hyp":[d,n]} | {"ci":[[d1,..],n]} |
    /// {"milnor":[m,n]} | {"prod":[..]} | {"union":[..]} | {"scaled":[k,e]}.
    /// Throws ParseError on malformed input.
    static VarietyExpr from_json(const nlohmann::json& j);
    static VarietyExpr parse(std::string_view text);
    nlohmann::json to_json() const;

private:
    Node node_;
};

}  // namespace cobord
