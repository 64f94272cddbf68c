#include "gradix/cli.hpp"

#include "gradix/error.hpp"
#include "gradix/io.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace gradix::cli {

using io::json;

namespace {

struct Context {
    io::Loader loader;
    bool as_json = false;
    long seed = 0;
    int rank_bound = -1;
    int coboundary_bound = 12;
    std::ostringstream text;
    json result = json::object();
};

std::string yes(bool b)
{
    return b ? "true" : "false";
}

json mjson(const Morphism& m)
{
    return json::array({m.target, m.elem, m.source});
}

json mlist(const std::vector<Morphism>& v)
{
    json a = json::array();
    for (const auto& m : v) a.push_back(mjson(m));
    return a;
}

std::string mlist_str(const FiniteGroupoid& G, const std::vector<Morphism>& v)
{
    std::string s;
    for (const auto& m : v) s += (s.empty() ? "" : " ") + G.str(m);
    return s;
}

json matrix_json(const HomSpaceMatrix& A)
{
    json e = json::array();
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (!A.at(i, j).is_zero()) e.push_back(json::array({i + 1, j + 1, A.at(i, j).str()}));
    return {{"alpha", mlist(A.alpha())}, {"beta", mlist(A.beta())}, {"entries", e}};
}

void print_matrix(std::ostream& os, const HomSpaceMatrix& A)
{
    const auto& G = A.ring()->groupoid();
    os << "  alpha: " << mlist_str(G, A.alpha()) << "\n";
    os << "  beta:  " << mlist_str(G, A.beta()) << "\n";
    for (int i = 0; i < A.rows(); ++i) {
        os << "  [";
        for (int j = 0; j < A.cols(); ++j) os << " " << (A.has_slot(i, j) ? A.at(i, j).str() : ".");
        os << " ]\n";
    }
}

std::string object_kind(const json& v)
{
    if (!v.is_object()) return "unknown";
    if (v.contains("sigma")) return "matrix_ring";
    if (v.contains("blocks") && v["blocks"].is_array() && !v["blocks"].empty() && v["blocks"][0].contains("D")) return "spec";
    if (v.contains("division_rings")) return "category";
    if (v.contains("raw") && v["raw"].is_object() && v["raw"].contains("homs")) return "raw_category";
    if (v.contains("shifts")) return "module";
    if (v.contains("entries")) return "matrix";
    for (const char* k : {"field", "group_ring", "twisted_group_ring", "prime_block", "direct_sum"})
        if (v.contains(k)) return "ring";
    return "groupoid";
}

std::string plural(std::size_t n, const std::string& w)
{
    return std::to_string(n) + " " + w + (n == 1 ? "" : "s");
}

void block_table(Context& c, const SemisimpleRingSpec& spec)
{
    const auto& G = *spec.groupoid();
    json blocks = json::array();
    auto summ = spec.summability();
    for (std::size_t j = 0; j < spec.blocks().size(); ++j) {
        const auto& b = spec.blocks()[j];
        json counts = json::object();
        std::string cs;
        for (const auto& [e, js] : summ) {
            auto K = spec.K(static_cast<int>(j), e);
            if (K.empty()) continue;
            counts[std::to_string(e)] = K.size();
            cs += (cs.empty() ? "" : " ") + std::to_string(e) + ":" + std::to_string(K.size());
        }
        c.text << "block " << j + 1 << ": base " << b.base << ", |K| = " << b.sigma.size() << ", support group order " << b.D->support().size()
               << ", per-object counts " << cs << "\n";
        c.text << "  sigma: " << mlist_str(G, b.sigma) << "\n";
        blocks.push_back({{"base", b.base},
                          {"K", b.sigma.size()},
                          {"support_order", b.D->support().size()},
                          {"counts", counts},
                          {"sigma", mlist(b.sigma)},
                          {"origin", b.origin}});
    }
    c.result["blocks"] = blocks;
}

void cmd_validate(Context& c, const std::string& path)
{
    auto n = c.loader.load(path);
    auto kind = object_kind(n.value);
    c.result["kind"] = kind;
    if (kind == "groupoid") {
        auto G = c.loader.groupoid(n);
        auto objs = G->objects();
        c.text << "groupoid: " << plural(G->blocks().size(), "block") << ", " << plural(objs.size(), "object") << "\n";
        c.result["blocks"] = G->blocks().size();
        c.result["objects"] = objs;
        c.result["morphisms"] = G->size();
    } else if (kind == "ring") {
        auto D = c.loader.ring(n);
        auto cls = D->primality_classes();
        c.text << "graded division ring over " << D->field().name() << ": " << plural(D->support().size(), "support morphism") << ", "
               << plural(D->objects().size(), "object") << " in Gamma'_0, " << plural(cls.size(), "primality class") << "\n";
        c.result["field"] = D->field().name();
        c.result["support"] = mlist(D->support());
        c.result["gamma0"] = D->objects();
        c.result["primality_classes"] = cls;
    } else if (kind == "matrix_ring") {
        auto R = c.loader.matrix_ring(n);
        c.text << "matrix ring: " << plural(R->size(), "index") << " over " << R->ring()->field().name() << ", sigma matricial\n";
        c.result["size"] = R->size();
    } else if (kind == "spec") {
        auto s = c.loader.ring_spec(n);
        c.text << "semisimple spec: " << plural(s.blocks().size(), "block") << "\n";
        c.result["blocks"] = s.blocks().size();
    } else if (kind == "category") {
        auto C = c.loader.category(n);
        c.text << "category: " << plural(C.objects.size(), "object") << ", " << plural(C.rings.size(), "division ring") << "\n";
        c.result["objects"] = C.objects.size();
    } else if (kind == "raw_category") {
        auto R = ring_of_category(c.loader.raw_category(n));
        c.text << "category: " << plural(R.objects(), "object") << ", axioms hold\n";
        c.result["objects"] = R.objects();
    } else if (kind == "module") {
        auto M = c.loader.module(n);
        c.text << "module: pdim " << M->pdim() << "\n";
        c.result["pdim"] = M->pdim();
    } else if (kind == "matrix") {
        auto A = c.loader.hom_matrix(n);
        c.text << "matrix: " << A.rows() << " x " << A.cols() << "\n";
        c.result["shape"] = {A.rows(), A.cols()};
    } else {
        throw InputError("cannot tell what kind of object " + path + " holds");
    }
}

RankReport do_rank(Context& c, const HomSpaceMatrix& A)
{
    RankOptions opt;
    opt.brute_force_bound = c.rank_bound;
    return rank_all(A, opt);
}

void cmd_rank(Context& c, const std::string& path)
{
    auto A = c.loader.hom_matrix(c.loader.load(path));
    auto r = do_rank(c, A);
    if (r.rho_i)
        c.text << "rho_r=rho_c=rho=rho_i=" << r.rho << "\n";
    else
        c.text << "rho_r=rho_c=rho=" << r.rho << " (rho_i skipped: size above the brute-force bound)\n";
    if (r.rho_r_alternative) c.text << "rho_r under the alternative signature: " << *r.rho_r_alternative << "\n";
    c.text << "elimination steps: " << r.steps.size() << "\n";
    const auto& G = A.ring()->groupoid();
    for (const auto& s : r.steps) c.text << "  " << describe(s, G) << "\n";
    c.result["rho_r"] = r.rho_r;
    c.result["rho_c"] = r.rho_c;
    c.result["rho"] = r.rho;
    c.result["rho_i"] = r.rho_i ? json(*r.rho_i) : json(nullptr);
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back(describe(s, G));
    c.result["steps"] = steps;
    if (r.B) {
        c.result["B"] = matrix_json(*r.B);
        c.result["C"] = matrix_json(*r.C);
    }
}

void cmd_invert(Context& c, const std::string& path)
{
    auto A = c.loader.hom_matrix(c.loader.load(path));
    auto inv = invert_square(A);
    c.result["invertible"] = inv.has_value();
    if (!inv) {
        int r = rho_r(A);
        c.text << "not invertible (rank " << r << " < " << A.rows() << ")\n";
        c.result["rank"] = r;
        return;
    }
    c.text << "inverse (left and right verified):\n";
    print_matrix(c.text, *inv);
    c.result["inverse"] = matrix_json(*inv);
}

void cmd_solve(Context& c, const std::string& mpath, const std::string& bpath)
{
    auto A = c.loader.hom_matrix(c.loader.load(mpath));
    auto b = c.loader.column(c.loader.load(bpath), A.ring(), A.alpha());
    auto sol = solve(A, b);
    c.result["solvable"] = sol.has_value();
    if (!sol) {
        c.text << "no solution\n";
        return;
    }
    c.text << (sol->unique ? "unique solution:\n" : "solution (free variables set to 0):\n");
    print_matrix(c.text, sol->x);
    c.result["unique"] = sol->unique;
    c.result["x"] = matrix_json(sol->x);
}

void report_flags(Context& c, const ClassificationFlags& f, const FiniteGroupoid& G)
{
    auto w = [](bool b, const std::string& s) { return b || s.empty() ? std::string() : " (witness: " + s + ")"; };
    c.text << "gr-semisimple: " << yes(f.gr_semisimple) << ", gamma0-artinian: " << yes(f.gamma0_artinian) << "\n";
    c.text << "gr-simple: " << yes(f.gr_simple) << w(f.gr_simple, f.simple_witness) << "\n";
    c.text << "pfm: " << yes(f.pfm) << w(f.pfm, f.pfm_witness) << ", gr-division: " << yes(f.gr_division)
           << w(f.gr_division, f.division_witness) << "\n";
    c.text << "ipbn: " << yes(f.ipbn) << w(f.ipbn, f.ipbn_witness) << "\n";
    c.result["flags"] = {{"gr_semisimple", f.gr_semisimple}, {"gamma0_artinian", f.gamma0_artinian}, {"gr_simple", f.gr_simple},
                         {"pfm", f.pfm},                     {"gr_division", f.gr_division},         {"ipbn", f.ipbn}};
    json wit = json::object();
    if (!f.simple_witness.empty()) wit["gr_simple"] = f.simple_witness;
    if (!f.pfm_witness.empty()) wit["pfm"] = f.pfm_witness;
    if (f.pfm) wit["pfm_objects"] = f.pfm_objects;
    if (!f.division_witness.empty()) wit["gr_division"] = f.division_witness;
    if (!f.ipbn) wit["ipbn"] = {{"left", mlist(f.ipbn_left)}, {"right", mlist(f.ipbn_right)}};
    c.result["witnesses"] = wit;
    (void)G;
}

void cmd_classify(Context& c, const std::string& path)
{
    auto spec = c.loader.ring_spec(c.loader.load(path));
    auto f = classify(spec);
    report_flags(c, f, *spec.groupoid());
    block_table(c, spec);
}

void cmd_decompose(Context& c, const std::string& path)
{
    auto n = c.loader.load(path);
    auto r = c.loader.ring_or_spec(n);
    SemisimpleRingSpec spec = std::holds_alternative<SemisimpleRingSpec>(r) ? std::get<SemisimpleRingSpec>(r)
                                                                           : wedderburn_decompose(std::get<MatrixRingPtr>(r));
    c.text << plural(spec.blocks().size(), "gr-simple block") << "\n";
    block_table(c, spec);
    if (auto* R = std::get_if<MatrixRingPtr>(&r)) {
        bool ok = !dimension_audit(*R, spec);
        c.text << "dimension audit: " << (ok ? "passed" : "FAILED") << "\n";
        c.result["audit"] = ok;
    }
}

void cmd_iso(Context& c, const std::string& a, const std::string& b)
{
    auto sa = c.loader.ring_spec(c.loader.load(a));
    auto sb = c.loader.ring_spec(c.loader.load(b));
    if (sa.groupoid() != sb.groupoid()) throw ArgumentError("the two rings are graded by different groupoids");
    IsoOptions opt;
    opt.coboundary_bound = c.coboundary_bound;
    auto res = iso_spec(sa, sb, opt);
    const auto& G = *sa.groupoid();
    c.text << to_string(res.status) << (res.reason.empty() ? "" : ": " + res.reason) << "\n";
    c.result["status"] = to_string(res.status);
    if (!res.reason.empty()) c.result["reason"] = res.reason;
    if (res.status != IsoStatus::isomorphic) return;
    json certs = json::array();
    for (std::size_t j = 0; j < res.certs.size(); ++j) {
        const auto& cert = res.certs[j];
        std::string pi;
        for (int p : cert.pi) pi += (pi.empty() ? "" : " ") + std::to_string(p + 1);
        c.text << "block " << j + 1 << " -> " << res.block_map[j] + 1 << ": tau = " << G.str(cert.tau) << ", pi = (" << pi << ")\n";
        json cj = json::object();
        for (const auto& [m, s] : cert.c) cj[G.str(m)] = s.str();
        json pij = json::array();
        for (int p : cert.pi) pij.push_back(p + 1);
        certs.push_back({{"block", j + 1}, {"image", res.block_map[j] + 1}, {"tau", mjson(cert.tau)}, {"pi", pij}, {"u", mlist(cert.u)}, {"c", cj}});
    }
    c.result["certificates"] = certs;
}

void cmd_module(Context& c, const std::string& path, const std::string& vpath)
{
    auto M = c.loader.module(c.loader.load(path));
    const auto& G = M->ring()->groupoid();
    c.text << "pdim: " << M->pdim() << "\n";
    c.text << "shifts: " << mlist_str(G, M->shifts()) << "\n";
    json g0 = json::object();
    std::string gs;
    for (const auto& [e, n] : M->gamma0_dimension()) {
        g0[std::to_string(e)] = n;
        gs += (gs.empty() ? "" : " ") + std::to_string(e) + ":" + std::to_string(n);
    }
    c.text << "Gamma0-dimension: " << gs << "\n";
    c.result["pdim"] = M->pdim();
    c.result["gamma0_dimension"] = g0;
    if (vpath.empty()) return;
    auto v = c.loader.vectors(c.loader.load(vpath), M);
    int span = pdim_of_span(M, v);
    auto keep = basis_from_generators(M, v);
    for (auto& k : keep) ++k;
    c.text << "pdim of span: " << span << "\n";
    c.text << "pdim of quotient: " << M->pdim() - span << "\n";
    c.text << "pseudo-independent: " << yes(span == static_cast<int>(v.size())) << "\n";
    std::string ks;
    for (int k : keep) ks += (ks.empty() ? "" : " ") + std::to_string(k);
    c.text << "pseudo-basis of span from vectors: " << ks << "\n";
    c.result["span_pdim"] = span;
    c.result["quotient_pdim"] = M->pdim() - span;
    c.result["independent"] = span == static_cast<int>(v.size());
    c.result["basis"] = keep;
}

void cmd_category_classify(Context& c, const std::string& path)
{
    auto n = c.loader.load(path);
    if (c.loader.is_raw_category(n))
        throw PreconditionError("classification needs matrix-form data; raw categories can only be validated and turned into rings");
    auto C = c.loader.category(n);
    auto f = classify_category(C);
    auto w = [](bool b, const std::string& s) { return b || s.empty() ? std::string() : " (witness: " + s + ")"; };
    std::string fo;
    for (int A : f.free_objects) fo += (fo.empty() ? "" : ", ") + C.objects[A];
    c.text << "semisimple: " << yes(f.semisimple) << "\n";
    c.text << "simple artinian: " << yes(f.simple_artinian) << w(f.simple_artinian, f.simple_witness) << "\n";
    c.text << "all functors free: " << yes(f.all_functors_free) << (f.all_functors_free ? " (objects: " + fo + ")" : w(false, f.free_witness)) << "\n";
    c.text << "division: " << yes(f.division) << w(f.division, f.division_witness) << "\n";
    c.text << "simple division: " << yes(f.simple_division) << "\n";

    auto spec = category_to_semisimple_spec(C);
    auto rf = classify(spec);
    bool agree = rf.pfm == f.all_functors_free && rf.gr_division == f.division && rf.gr_simple == f.simple_artinian;
    c.text << "ring-side flags agree: " << yes(agree) << "\n";
    json fos = json::array();
    for (int A : f.free_objects) fos.push_back(C.objects[A]);
    c.result["flags"] = {{"semisimple", f.semisimple},
                         {"simple_artinian", f.simple_artinian},
                         {"all_functors_free", f.all_functors_free},
                         {"division", f.division},
                         {"simple_division", f.simple_division}};
    c.result["free_objects"] = fos;
    c.result["ring_side_agrees"] = agree;
    if (f.division) {
        json comps = json::array();
        for (const auto& g : division_components(C)) {
            json names = json::array();
            for (int A : g) names.push_back(C.objects[A]);
            comps.push_back(names);
        }
        c.result["division_components"] = comps;
    }
    if (!agree) throw std::logic_error("category flags disagree with the ring-side classification");
}

void cmd_category_to_ring(Context& c, const std::string& path)
{
    auto n = c.loader.load(path);
    RawCategory raw = c.loader.is_raw_category(n) ? c.loader.raw_category(n) : to_raw_category(c.loader.category(n));
    auto R = ring_of_category(raw);
    c.text << "ring of the category over " << R.field().name() << ", graded by the pair groupoid on " << plural(R.objects(), "object") << "\n";
    json comps = json::array();
    for (int A = 0; A < R.objects(); ++A)
        for (int B = 0; B < R.objects(); ++B) {
            int d = R.component_dimension(A, B);
            if (d == 0) continue;
            c.text << "  R_(" << R.names()[A] << "," << R.names()[B] << ") = Hom(" << R.names()[B] << ", " << R.names()[A] << "): dim " << d << "\n";
            comps.push_back({{"degree", {A + 1, B + 1}}, {"dim", d}});
        }
    c.result["field"] = R.field().name();
    c.result["components"] = comps;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    Context c;
    CLI::App app{"gradix: graded rings over finite groupoids"};
    app.require_subcommand(1);
    std::string emit = "text";
    app.add_option("--emit", emit, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", c.seed, "seed for sampled checks");
    app.add_option("--rank-bound", c.rank_bound, "largest minor size for the brute-force rank");
    app.add_option("--coboundary-bound", c.coboundary_bound, "largest support for the coboundary search");

    std::string f1, f2;
    auto* validate = app.add_subcommand("validate", "check every invariant of a spec file");
    validate->add_option("file", f1)->required();
    auto* rank = app.add_subcommand("rank", "all four ranks of a matrix");
    rank->add_option("file", f1)->required();
    auto* invert = app.add_subcommand("invert", "inverse of a square matrix");
    invert->add_option("file", f1)->required();
    auto* solvec = app.add_subcommand("solve", "solve A x = b");
    solvec->add_option("matrix", f1)->required();
    solvec->add_option("rhs", f2)->required();
    auto* classifyc = app.add_subcommand("classify", "classification flags with witnesses");
    classifyc->add_option("file", f1)->required();
    auto* decompose = app.add_subcommand("decompose", "gr-simple block decomposition");
    decompose->add_option("file", f1)->required();
    auto* iso = app.add_subcommand("iso", "isomorphism test");
    iso->add_option("first", f1)->required();
    iso->add_option("second", f2)->required();
    auto* modulec = app.add_subcommand("module", "pseudo-dimension of a module or a span");
    modulec->add_option("file", f1)->required();
    modulec->add_option("vectors", f2);
    auto* category = app.add_subcommand("category", "categories in matrix form");
    category->require_subcommand(1);
    auto* cat_classify = category->add_subcommand("classify", "category flags");
    cat_classify->add_option("file", f1)->required();
    auto* cat_ring = category->add_subcommand("to-ring", "ring of the category");
    cat_ring->add_option("file", f1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    c.as_json = emit == "json";
    std::string command;
    try {
        if (*validate) {
            command = "validate";
            cmd_validate(c, f1);
        } else if (*rank) {
            command = "rank";
            cmd_rank(c, f1);
        } else if (*invert) {
            command = "invert";
            cmd_invert(c, f1);
        } else if (*solvec) {
            command = "solve";
            cmd_solve(c, f1, f2);
        } else if (*classifyc) {
            command = "classify";
            cmd_classify(c, f1);
        } else if (*decompose) {
            command = "decompose";
            cmd_decompose(c, f1);
        } else if (*iso) {
            command = "iso";
            cmd_iso(c, f1, f2);
        } else if (*modulec) {
            command = "module";
            cmd_module(c, f1, f2);
        } else if (*cat_classify) {
            command = "category classify";
            cmd_category_classify(c, f1);
        } else if (*cat_ring) {
            command = "category to-ring";
            cmd_category_to_ring(c, f1);
        }
    } catch (const Error& e) {
        err << "gradix: " << e.what() << "\n";
        return e.exit_code();
    } catch (const json::exception& e) {
        err << "gradix: input error: malformed spec: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "gradix: internal error: " << e.what() << "\n";
        return 1;
    }
    if (c.as_json) {
        json doc = {{"schema", "gradix/1"}, {"command", command}, {"seed", c.seed}, {"result", c.result}};
        out << doc.dump(2) << "\n";
    } else {
        out << c.text.str();
    }
    return 0;
}

}  // namespace gradix::cli
