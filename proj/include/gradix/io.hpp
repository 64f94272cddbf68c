#pragma once

#include "gradix/category.hpp"
#include "gradix/linalg.hpp"
#include "gradix/module.hpp"
#include "gradix/structure.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <variant>

namespace gradix::io {

using json = nlohmann::json;

// A parsed node together with the directory that relative references resolve against.
struct Node {
    json value;
    std::filesystem::path dir;
    json refs;  // name -> relative path, inherited from the enclosing file
};

// Parses spec files. Equal groupoid and ring specs map to the same shared object,
// so rings loaded from different files can be compared.
class Loader {
public:
    // InputError on I/O or JSON syntax errors.
    Node load(const std::filesystem::path& file);
    // A string in place of an object is a reference: a key of "refs" or a path.
    Node resolve(const Node& parent, const json& v);

    FieldSpec field(const json& v);
    GroupoidPtr groupoid(const Node& n);
    Morphism morphism(const FiniteGroupoid& G, const json& v);
    Scalar scalar(const FieldSpec& f, const json& v);
    RingPtr ring(const Node& n);
    MatrixRingPtr matrix_ring(const Node& n);
    // matrix ring, semisimple spec {"blocks": [...]}, or a bare graded division ring
    SemisimpleRingSpec ring_spec(const Node& n);
    std::variant<MatrixRingPtr, SemisimpleRingSpec> ring_or_spec(const Node& n);

    // {"ring", "degree", "entries"} or {"D", "alpha", "beta", "entries"}; entries 1-based.
    std::variant<HomogeneousMatrix, HomSpaceMatrix> matrix(const Node& n);
    HomSpaceMatrix hom_matrix(const Node& n);
    // {"tau", "entries": [[i, c]]} as a column in [alpha][tau]
    HomSpaceMatrix column(const Node& n, const RingPtr& D, const std::vector<Morphism>& alpha);

    ModulePtr module(const Node& n);
    std::vector<HomogeneousVector> vectors(const Node& n, const ModulePtr& M);

    bool is_raw_category(const Node& n) const;
    MatrixFormCategory category(const Node& n);
    RawCategory raw_category(const Node& n);

private:
    GroupoidPtr parse_groupoid(const json& v);
    FiniteGroup group(const json& v);

    std::map<std::string, GroupoidPtr> groupoids_;
    std::map<std::string, RingPtr> rings_;
};

// Typed accessors that turn JSON shape errors into InputError.
const json& need(const json& obj, const char* key);
int as_int(const json& v, const char* what);

}  // namespace gradix::io
