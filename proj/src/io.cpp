#include "gradix/io.hpp"

#include "gradix/error.hpp"

#include <fstream>
#include <sstream>

namespace gradix::io {

namespace fs = std::filesystem;

const json& need(const json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
    return obj.at(key);
}

int as_int(const json& v, const char* what)
{
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return v.get<int>();
}

Node Loader::load(const fs::path& file)
{
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    json v;
    try {
        v = json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw InputError(file.string() + ": " + e.what());
    }
    Node n{v, file.parent_path(), json::object()};
    if (v.is_object() && v.contains("refs")) {
        if (!v["refs"].is_object()) throw InputError(file.string() + ": \"refs\" must be an object");
        n.refs = v["refs"];
    }
    return n;
}

Node Loader::resolve(const Node& parent, const json& v)
{
    if (!v.is_string()) return Node{v, parent.dir, parent.refs};
    std::string path = v.get<std::string>();
    if (parent.refs.contains(path)) path = parent.refs[path].get<std::string>();
    return load(parent.dir / path);
}

FieldSpec Loader::field(const json& v)
{
    if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s == "Q") return FieldSpec::rationals();
        if (s.size() > 1 && s[0] == 'F') {
            try {
                return FieldSpec::prime(std::stoll(s.substr(1)));
            } catch (const std::invalid_argument&) {
            }
        }
        throw InputError("unknown field \"" + s + "\"");
    }
    auto kind = need(v, "kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") return FieldSpec::prime(need(v, "p").get<std::int64_t>());
    throw InputError("unknown field kind \"" + kind + "\"");
}

Scalar Loader::scalar(const FieldSpec& f, const json& v)
{
    if (v.is_number_integer()) return Scalar::from_int(f, v.get<long>());
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    throw InputError("scalar must be an integer or a string \"a/b\"");
}

FiniteGroup Loader::group(const json& v)
{
    if (v.is_string() && v.get<std::string>() == "trivial") return FiniteGroup::trivial();
    if (v.contains("cyclic")) return FiniteGroup::cyclic(as_int(v["cyclic"], "cyclic order"));
    if (v.contains("product")) {
        const auto& p = v["product"];
        if (!p.is_array() || p.empty()) throw InputError("\"product\" needs a list of groups");
        FiniteGroup g = group(p[0]);
        for (std::size_t i = 1; i < p.size(); ++i) g = FiniteGroup::direct_product(g, group(p[i]));
        return g;
    }
    int n = as_int(need(v, "order"), "group order");
    if (n < 1 || n > kMaxGroupOrder) throw ValidationError("group order " + std::to_string(n) + " out of range");
    return FiniteGroup(n, need(v, "mult").get<std::vector<std::vector<int>>>());
}

GroupoidPtr Loader::parse_groupoid(const json& v)
{
    if (v.contains("pair")) return FiniteGroupoid::pair_groupoid(as_int(v["pair"], "pair"));
    if (v.contains("pair_on")) return FiniteGroupoid::pair_groupoid_on(v["pair_on"].get<std::vector<int>>());
    if (v.contains("group") && !v.contains("blocks")) {
        std::vector<int> objs = v.contains("objects") ? v["objects"].get<std::vector<int>>() : std::vector<int>{0};
        return FiniteGroupoid::product_groupoid(objs, group(v["group"]));
    }
    if (v.contains("raw")) {
        const auto& r = v["raw"];
        RawGroupoid raw;
        raw.objects = need(r, "objects").get<std::vector<int>>();
        for (const auto& m : need(r, "morphisms")) raw.morphisms.emplace_back(m.at(0).get<int>(), m.at(1).get<int>());
        for (const auto& c : need(r, "compose")) raw.compose.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
        return FiniteGroupoid::from_composition_table(raw).groupoid;
    }
    std::vector<ConnectedBlock> blocks;
    for (const auto& b : need(v, "blocks"))
        blocks.push_back({need(b, "objects").get<std::vector<int>>(), b.contains("group") ? group(b["group"]) : FiniteGroup::trivial()});
    return FiniteGroupoid::make(std::move(blocks));
}

GroupoidPtr Loader::groupoid(const Node& n)
{
    auto key = n.value.dump();
    auto it = groupoids_.find(key);
    if (it != groupoids_.end()) return it->second;
    auto G = parse_groupoid(n.value);
    groupoids_.emplace(key, G);
    return G;
}

Morphism Loader::morphism(const FiniteGroupoid& G, const json& v)
{
    if (!v.is_array() || (v.size() != 2 && v.size() != 3)) throw InputError("morphism must be [target, elem, source] or [target, source]");
    int t = as_int(v[0], "morphism target");
    int s = as_int(v[v.size() - 1], "morphism source");
    if (!G.has_object(t) || !G.has_object(s)) throw ValidationError("morphism " + v.dump() + " names an unknown object");
    if (v.size() == 2) {
        if (G.block_of(t) != G.block_of(s)) throw ValidationError("morphism " + v.dump() + " joins different components");
        return G.make_morphism(t, G.group_of(G.block_of(t)).identity(), s);
    }
    return G.make_morphism(t, as_int(v[1], "morphism element"), s);
}

static std::vector<Morphism> all_morphisms(const FiniteGroupoid& G)
{
    return G.morphisms();
}

RingPtr Loader::ring(const Node& n)
{
    const auto& v = n.value;
    auto key = n.dir.string() + "|" + v.dump();
    auto it = rings_.find(key);
    if (it != rings_.end()) return it->second;

    RingPtr D;
    if (v.contains("group_ring") || v.contains("twisted_group_ring")) {
        bool twisted = v.contains("twisted_group_ring");
        const auto& g = twisted ? v["twisted_group_ring"] : v["group_ring"];
        auto f = field(need(g, "field"));
        auto G = groupoid(resolve(n, json{{"group", need(g, "group")}}));
        std::vector<FactorEntry> fac;
        if (twisted)
            for (const auto& e : need(g, "factor"))
                fac.push_back({G->make_morphism(0, as_int(e.at(0), "factor element"), 0), G->make_morphism(0, as_int(e.at(1), "factor element"), 0),
                               scalar(f, e.at(2))});
        D = twisted ? GradedDivisionRing::build(G, f, all_morphisms(*G), fac) : GradedDivisionRing::build_untwisted(G, f, all_morphisms(*G));
    } else if (v.contains("prime_block")) {
        const auto& p = v["prime_block"];
        auto H = ring(resolve(n, need(p, "H")));
        std::map<int, Morphism> sigma;
        for (const auto& e : need(p, "sigma")) {
            int f = as_int(e.at(0), "object");
            if (!sigma.emplace(f, morphism(H->groupoid(), e.at(1))).second) throw ValidationError("prime_block: object " + std::to_string(f) + " given twice");
        }
        D = GradedDivisionRing::matrix_form_inverse(H, sigma);
    } else if (v.contains("direct_sum")) {
        std::vector<RingPtr> parts;
        for (const auto& p : v["direct_sum"]) parts.push_back(ring(resolve(n, p)));
        D = GradedDivisionRing::direct_sum(parts);
    } else {
        auto f = field(need(v, "field"));
        auto G = groupoid(resolve(n, need(v, "groupoid")));
        std::vector<Morphism> support;
        const auto& s = need(v, "support");
        if (s.is_string() && s.get<std::string>() == "all")
            support = all_morphisms(*G);
        else
            for (const auto& m : s) support.push_back(morphism(*G, m));
        if (!v.contains("factor") || (v["factor"].is_string() && v["factor"].get<std::string>() == "ones")) {
            D = GradedDivisionRing::build_untwisted(G, f, support);
        } else {
            std::vector<FactorEntry> fac;
            for (const auto& e : v["factor"]) fac.push_back({morphism(*G, e.at(0)), morphism(*G, e.at(1)), scalar(f, e.at(2))});
            D = GradedDivisionRing::build(G, f, support, fac);
        }
    }
    rings_.emplace(key, D);
    return D;
}

MatrixRingPtr Loader::matrix_ring(const Node& n)
{
    const auto& v = n.value;
    if (!v.contains("sigma")) return as_matrix_ring(ring(n));
    auto D = ring(resolve(n, need(v, "D")));
    std::vector<std::vector<Morphism>> sigma;
    for (const auto& s : v["sigma"]) {
        std::vector<Morphism> set;
        if (s.is_array() && !s.empty() && s[0].is_array())
            for (const auto& m : s) set.push_back(morphism(D->groupoid(), m));
        else
            set.push_back(morphism(D->groupoid(), s));
        sigma.push_back(set);
    }
    return MatrixRing::build(D, sigma);
}

std::variant<MatrixRingPtr, SemisimpleRingSpec> Loader::ring_or_spec(const Node& n)
{
    const auto& v = n.value;
    if (v.contains("blocks") && v["blocks"].is_array() && !v["blocks"].empty() && v["blocks"][0].contains("D")) {
        std::vector<SpecBlock> blocks;
        for (const auto& b : v["blocks"]) {
            SpecBlock sb;
            sb.D = ring(resolve(n, need(b, "D")));
            sb.base = as_int(need(b, "base"), "base object");
            for (const auto& m : need(b, "sigma")) sb.sigma.push_back(morphism(sb.D->groupoid(), m));
            blocks.push_back(std::move(sb));
        }
        return SemisimpleRingSpec::make(std::move(blocks));
    }
    return matrix_ring(n);
}

SemisimpleRingSpec Loader::ring_spec(const Node& n)
{
    auto r = ring_or_spec(n);
    if (auto* s = std::get_if<SemisimpleRingSpec>(&r)) return *s;
    return wedderburn_decompose(std::get<MatrixRingPtr>(r));
}

std::variant<HomogeneousMatrix, HomSpaceMatrix> Loader::matrix(const Node& n)
{
    const auto& v = n.value;
    if (v.contains("ring")) {
        auto R = matrix_ring(resolve(n, v["ring"]));
        const auto& F = R->ring()->field();
        auto deg = morphism(R->ring()->groupoid(), need(v, "degree"));
        HomogeneousMatrix::Entries e;
        for (const auto& x : need(v, "entries")) {
            int i = as_int(x.at(0), "row index"), j = as_int(x.at(1), "column index");
            if (i < 1 || i > R->size() || j < 1 || j > R->size()) throw ArgumentError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
            e[{i - 1, j - 1}] += scalar(F, x.at(2));
        }
        return HomogeneousMatrix(R, deg, e);
    }
    auto D = ring(resolve(n, need(v, "D")));
    std::vector<Morphism> alpha, beta;
    for (const auto& m : need(v, "alpha")) alpha.push_back(morphism(D->groupoid(), m));
    for (const auto& m : need(v, "beta")) beta.push_back(morphism(D->groupoid(), m));
    HomSpaceMatrix A(D, alpha, beta);
    if (v.contains("entries"))
        for (const auto& x : v["entries"]) {
            int i = as_int(x.at(0), "row index"), j = as_int(x.at(1), "column index");
            if (i < 1 || i > A.rows() || j < 1 || j > A.cols()) throw ArgumentError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
            A.set(i - 1, j - 1, A.at(i - 1, j - 1) + scalar(D->field(), x.at(2)));
        }
    return A;
}

HomSpaceMatrix Loader::hom_matrix(const Node& n)
{
    auto m = matrix(n);
    if (auto* h = std::get_if<HomSpaceMatrix>(&m)) return *h;
    const auto& A = std::get<HomogeneousMatrix>(m);
    if (A.is_zero()) {
        // zero entries: keep the degree from the file to size the block
        auto R = A.ring();
        auto deg = morphism(R->ring()->groupoid(), need(n.value, "degree"));
        const auto& G = R->ring()->groupoid();
        std::vector<Morphism> alpha, beta;
        for (int i : R->index_set(deg.target)) alpha.push_back(G.compose_or_throw(*R->with_source(i, deg.target), deg));
        for (int j : R->index_set(deg.source)) beta.push_back(*R->with_source(j, deg.source));
        return HomSpaceMatrix(R->ring(), alpha, beta);
    }
    return rectangular_block(A, A.degree()->target, A.degree()->source).block;
}

HomSpaceMatrix Loader::column(const Node& n, const RingPtr& D, const std::vector<Morphism>& alpha)
{
    const auto& v = n.value;
    auto tau = morphism(D->groupoid(), need(v, "tau"));
    HomSpaceMatrix b(D, alpha, {tau});
    for (const auto& x : need(v, "entries")) {
        int i = as_int(x.at(0), "row index");
        if (i < 1 || i > b.rows()) throw ArgumentError("right-hand side entry " + std::to_string(i) + " out of range");
        b.set(i - 1, 0, b.at(i - 1, 0) + scalar(D->field(), x.at(1)));
    }
    return b;
}

ModulePtr Loader::module(const Node& n)
{
    const auto& v = n.value;
    auto D = ring(resolve(n, need(v, "D")));
    std::vector<Morphism> shifts;
    for (const auto& m : need(v, "shifts")) shifts.push_back(morphism(D->groupoid(), m));
    return GradedModule::make(D, shifts);
}

std::vector<HomogeneousVector> Loader::vectors(const Node& n, const ModulePtr& M)
{
    const json& list = n.value.is_array() ? n.value : need(n.value, "vectors");
    const auto& D = *M->ring();
    std::vector<HomogeneousVector> out;
    for (const auto& x : list) {
        std::map<int, Scalar> e;
        for (const auto& p : need(x, "entries")) {
            int i = as_int(p.at(0), "vector index");
            if (i < 1 || i > M->pdim()) throw ArgumentError("vector entry " + std::to_string(i) + " out of range");
            auto c = scalar(D.field(), p.at(1));
            auto it = e.find(i - 1);
            if (it == e.end())
                e.emplace(i - 1, c);
            else
                it->second += c;
        }
        out.push_back(HomogeneousVector::make(M, morphism(D.groupoid(), need(x, "degree")), e));
    }
    return out;
}

bool Loader::is_raw_category(const Node& n) const
{
    return n.value.is_object() && n.value.contains("raw");
}

MatrixFormCategory Loader::category(const Node& n)
{
    const auto& v = n.value;
    MatrixFormCategory C;
    C.objects = need(v, "objects").get<std::vector<std::string>>();
    for (const auto& f : need(v, "division_rings")) C.rings.push_back(field(f));
    const auto& dims = need(v, "dims");
    for (const auto& name : C.objects) {
        if (!dims.contains(name)) throw InputError("dims missing for object \"" + name + "\"");
        const auto& d = dims[name];
        C.dims.push_back(d.is_array() ? d.get<std::vector<int>>() : std::vector<int>{as_int(d, "dimension")});
    }
    for (const auto& [name, d] : dims.items())
        if (std::find(C.objects.begin(), C.objects.end(), name) == C.objects.end()) throw InputError("dims given for unknown object \"" + name + "\"");
    C.validate();
    return C;
}

RawCategory Loader::raw_category(const Node& n)
{
    const auto& r = need(n.value, "raw");
    RawCategory C;
    C.field = field(need(r, "field"));
    C.objects = need(r, "objects").get<std::vector<std::string>>();
    auto obj = [&](const json& x) {
        auto s = x.get<std::string>();
        auto it = std::find(C.objects.begin(), C.objects.end(), s);
        if (it == C.objects.end()) throw InputError("unknown object \"" + s + "\"");
        return static_cast<int>(it - C.objects.begin());
    };
    for (const auto& h : need(r, "homs")) C.homs.push_back({obj(need(h, "from")), obj(need(h, "to")), as_int(need(h, "dim"), "dim")});
    auto lin = [&](const json& x) {
        std::vector<std::pair<int, Scalar>> out;
        for (const auto& p : x) out.emplace_back(as_int(p.at(0), "basis index") - 1, scalar(C.field, p.at(1)));
        return out;
    };
    auto ref = [&](const json& x) { return std::array<int, 2>{as_int(x.at(0), "hom index") - 1, as_int(x.at(1), "basis index") - 1}; };
    if (r.contains("compose"))
        for (const auto& c : r["compose"]) C.compose.push_back({ref(need(c, "f")), ref(need(c, "g")), lin(need(c, "result"))});
    C.identities.resize(C.objects.size());
    if (r.contains("identities"))
        for (const auto& [name, x] : r["identities"].items()) C.identities[obj(json(name))] = lin(x);
    return C;
}

}  // namespace gradix::io
