#include "cobord/json_io.hpp"

namespace cobord::io {

json to_json(const Partition& alpha) { return alpha.parts(); }

Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("partition must be an array, got " + j.dump());
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 1)
            throw ParseError("partition parts must be positive integers, got " + j.dump());
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

namespace {

json modulus_json(std::optional<int> m) { return m ? json(*m) : json(nullptr); }

template <class Poly>
json terms_json(const Poly& poly)
{
    json terms = json::array();
    for (const auto& [m, c] : poly.terms())
        terms.push_back({{"partition", to_json(m.to_partition())}, {"coeff", c.get_str()}});
    return terms;
}

}  // namespace

json to_json(const BPoly& poly) { return {{"modulus", modulus_json(poly.modulus())}, {"terms", terms_json(poly)}}; }

BPoly bpoly_from_json(const json& j, int truncation)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial needs a \"terms\" array");
    std::optional<int> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        if (!j["modulus"].is_number_integer())
            throw ParseError("modulus must be an integer or null");
        modulus = j["modulus"].get<int>();
    }
    BPoly out(truncation, modulus);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("partition") || !t.contains("coeff"))
            throw ParseError("term needs \"partition\" and \"coeff\"");
        const Partition alpha = partition_from_json(t["partition"]);
        if (alpha.weight() > truncation)
            throw TruncationError("term " + alpha.to_string() + " beyond truncation " + std::to_string(truncation));
        mpz_class c;
        const json& cj = t["coeff"];
        if (cj.is_string()) {
            if (c.set_str(cj.get<std::string>(), 10) != 0)
                throw ParseError("bad coefficient " + cj.dump());
        } else if (cj.is_number_integer()) {
            c = static_cast<long>(cj.get<long long>());
        } else {
            throw ParseError("coefficient must be a decimal string or integer");
        }
        out.add_term(alpha, c);
    }
    return out;
}

json dim_to_json(const std::optional<int>& d) { return d ? json(*d) : json("-inf"); }

std::optional<int> dim_from_json(const json& j)
{
    if (j.is_string() && j.get<std::string>() == "-inf")
        return std::nullopt;
    if (!j.is_number_integer())
        throw ParseError("expected an integer or \"-inf\", got " + j.dump());
    return j.get<int>();
}

json to_json(const BasisId& id, const GeneratorBasis* basis)
{
    json out{{"flavor", id.flavor == BasisId::Flavor::Base ? "base" : "adapted"}};
    if (id.flavor == BasisId::Flavor::Adapted) {
        out["p"] = id.p;
        out["r"] = id.r;
    }
    if (basis) {
        json signs = json::array();
        for (int i = 1; i <= basis->truncation(); ++i)
            signs.push_back(basis->sign(i));
        out["signs"] = signs;
    }
    return out;
}

json to_json(const GenPoly& g, const GeneratorBasis* basis)
{
    return {{"modulus", modulus_json(g.modulus())},
            {"basis", to_json(g.basis(), basis)},
            {"terms", terms_json(g.poly())}};
}

json to_json(const CobordismClass& z, const std::optional<VarietyExpr>& variety, const GenPoly* coords,
             const GeneratorBasis* basis)
{
    json out;
    out["variety"] = variety ? variety->to_json() : json(nullptr);
    out["dim"] = z.dim() ? json(*z.dim()) : json(nullptr);
    out["truncation"] = z.truncation();
    out["image"] = to_json(z.image());
    if (coords)
        out["gen_coords"] = to_json(*coords, basis);
    return out;
}

CobordismClass class_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("image") || !j.contains("truncation"))
        throw ParseError("class needs \"image\" and \"truncation\"");
    const int truncation = j["truncation"].get<int>();
    std::optional<int> dim;
    if (j.contains("dim") && !j["dim"].is_null())
        dim = j["dim"].get<int>();
    return CobordismClass(bpoly_from_json(j["image"], truncation), dim);
}

json to_json(const GroupDescriptor& group)
{
    return {{"p", group.p()}, {"exponents", group.exponents()}, {"rank", group.rank()}, {"order", group.order()}};
}

json to_json(const BoundReport& report)
{
    json out;
    out["class"] = report.class_summary;
    out["group"] = to_json(report.group);
    out["in_Ipr"] = report.in_Ipr;
    out["forced_fixed_point"] = !report.in_Ipr;
    out["reduced"] = to_json(report.reduced);
    out["lower_bound"] = dim_to_json(report.lower_bound);
    if (report.certificate)
        out["certificate"] = {{"partition", to_json(*report.certificate)},
                              {"coeff", report.certificate_coeff.get_str()}};
    else
        out["certificate"] = nullptr;
    return out;
}

json to_json(const ActionWitness& w)
{
    return {{"variety", w.variety.to_json()},
            {"group", to_json(w.group)},
            {"fixed_dim", dim_to_json(w.fixed_dim)},
            {"provenance", w.provenance}};
}

json to_json(const MPoly& f)
{
    const char* key = f.kind() == MVarKind::A ? "a" : "p";
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json mono = json::array();
        for (const auto& [v, e] : m)
            mono.push_back({{key, {v.i, v.g.label()}}, {"exp", e}});
        terms.push_back({{"monomial", mono}, {"coeff", to_json(c)}});
    }
    return {{"kind", key}, {"terms", terms}};
}

}  // namespace cobord::io
