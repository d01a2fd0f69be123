// kakimizu - command line front end: generate, check, dismantle, homology,
// hull, fixpoint, fixcomplex, bench
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "kakimizu/dismantle.hpp"
#include "kakimizu/group_action.hpp"
#include "kakimizu/homology.hpp"
#include "kakimizu/io.hpp"

namespace kk = kakimizu;

namespace {

struct CommonOpts {
    uint64_t seed = 1;
    int columns = 3;
    int max_height = 3;
    int count = 5;
    int base = 0;
    int max_dim = -1;
    int jobs = 1;
    int cap_vertices = kk::kDefaultVertexCap;
    std::string axioms = "all";
    std::string out_path;
};

const std::vector<std::string> kCheckNames = {
    "ball_retention",        "chain_bound",
    "change_of_basis",       "domination_monotonicity",
    "domination_same_layer", "domination_same_projection",
    "order_acyclicity",      "order_comparability",
    "order_distance_rule",   "projection_decrement"};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        kk::write_text_file(out_path, text);
}

// Loads a projection structure from a family or table file. Raw families are
// closed on the fly with a note so checks always see a conforming domain.
kk::ProjectionStructure load_structure(const std::string& path, int cap_vertices) {
    kk::FileKind kind = kk::sniff_kind(path);
    if (kind == kk::FileKind::height_family) {
        kk::HeightFamily fam = kk::parse_height_family(path);
        if (!kk::is_convex_closed(fam)) {
            size_t before = fam.members.size();
            fam = kk::close_convex(fam);
            std::cout << "note: input family closed from " << before << " to "
                      << fam.members.size() << " members\n";
        }
        if ((int)fam.members.size() > cap_vertices)
            throw kk::input_error("instance exceeds the vertex cap; raise --cap-vertices");
        return kk::from_family(fam);
    }
    if (kind == kk::FileKind::proj_table) {
        kk::ProjectionStructure ps = kk::parse_projection_table(path);
        if (ps.n() > cap_vertices)
            throw kk::input_error("instance exceeds the vertex cap; raise --cap-vertices");
        return ps;
    }
    throw kk::input_error(path + ": need a height family or projection table");
}

// Runs exactly the named check; grouped checks share their scan but only the
// requested report is returned.
kk::CheckReport run_named_check(const kk::ProjectionStructure& ps, const std::string& name,
                                int jobs) {
    if (name == "projection_decrement") return kk::verify_projection_decrement(ps, jobs);
    if (name == "ball_retention") return kk::verify_ball_retention(ps, jobs);
    if (name == "change_of_basis") return kk::verify_change_of_basis(ps, jobs);
    if (name == "chain_bound") return kk::chain_bound_report(ps);
    if (name.rfind("order_", 0) == 0)
        for (auto& rep : kk::verify_order_axioms(ps, jobs))
            if (rep.name == name) return rep;
    if (name.rfind("domination_", 0) == 0)
        for (auto& rep : kk::verify_domination(ps, jobs))
            if (rep.name == name) return rep;
    std::string known;
    for (const auto& n : kCheckNames) known += " " + n;
    throw kk::input_error("unknown check '" + name + "'; expected 'all' or one of" + known);
}

std::vector<kk::CheckReport> run_selected_checks(const kk::ProjectionStructure& ps,
                                                 const std::string& axioms, int jobs) {
    if (axioms == "all") return kk::run_all_checks(ps, jobs);
    return {run_named_check(ps, axioms, jobs)};
}

int cmd_gen(const CommonOpts& o) {
    kk::HeightFamily fam = kk::generate_random(o.columns, o.count, o.max_height, o.seed,
                                               o.cap_vertices);
    emit(kk::serialize_height_family(fam), o.out_path);
    return 0;
}

int cmd_check(const CommonOpts& o, const std::string& path) {
    kk::ProjectionStructure ps = load_structure(path, o.cap_vertices);
    auto reports = run_selected_checks(ps, o.axioms, o.jobs);
    bool all_pass = true;
    for (const auto& rep : reports) {
        std::cout << rep.line() << "\n";
        all_pass = all_pass && rep.pass;
    }
    return all_pass ? 0 : 1;
}

void print_dismantling(const kk::DismantlingOrder& d) {
    std::cout << "order";
    for (int v : d.order) std::cout << " " << v;
    std::cout << "\n";
    for (size_t i = 0; i < d.witness.size(); ++i)
        std::cout << "witness " << i << " " << d.witness[i] << "\n";
    std::cout << "PASS dismantling\n";
}

int cmd_dismantle(const CommonOpts& o, const std::string& path) {
    if (kk::sniff_kind(path) == kk::FileKind::flag_complex) {
        kk::FlagComplex c = kk::parse_flag_complex(path);
        if (c.vertex_count > o.cap_vertices)
            throw kk::input_error("instance exceeds the vertex cap; raise --cap-vertices");
        auto d = kk::greedy_dismantle(c);
        if (!d) {
            std::cout << "FAIL dismantling no vertex is dominated\n";
            return 1;
        }
        print_dismantling(*d);
        return 0;
    }
    kk::ProjectionStructure ps = load_structure(path, o.cap_vertices);
    if (o.base < 0 || o.base >= ps.n())
        throw kk::input_error("--base is out of range for this instance");
    print_dismantling(kk::projection_dismantle(ps, o.base));
    return 0;
}

int cmd_homology(const CommonOpts& o, const std::string& path) {
    kk::FileKind kind = kk::sniff_kind(path);
    kk::FlagComplex c;
    if (kind == kk::FileKind::flag_complex)
        c = kk::parse_flag_complex(path);
    else if (kind == kk::FileKind::height_family)
        c = kk::parse_height_family(path).graph;
    else
        throw kk::input_error(path + ": need a flag complex or height family");
    if (c.vertex_count > o.cap_vertices)
        throw kk::input_error("instance exceeds the vertex cap; raise --cap-vertices");
    auto prof = kk::reduced_homology(c, o.max_dim);
    for (size_t k = 0; k < prof.betti.size(); ++k)
        std::cout << "betti " << k << " = " << prof.betti[k] << "\n";
    for (size_t k = 0; k < prof.torsion.size(); ++k) {
        if (prof.torsion[k].empty()) continue;
        std::cout << "torsion " << k << " =";
        for (const auto& d : prof.torsion[k]) std::cout << " " << d;
        std::cout << "\n";
    }
    std::cout << "point " << (prof.trivial() ? "yes" : "no") << "\n";
    return 0;
}

int cmd_hull(const CommonOpts& o, bool base_given, const std::string& path) {
    kk::HeightFamily fam = kk::parse_height_family(path);
    if (base_given && (o.base < 0 || o.base >= (int)fam.members.size()))
        throw kk::input_error("--base is out of range for this family");
    kk::HeightFamily closed = base_given
                                  ? kk::close_sigma_convex(fam, fam.members[o.base])
                                  : kk::close_convex(fam);
    std::cerr << "hull: " << fam.members.size() << " -> " << closed.members.size()
              << " members\n";
    emit(kk::serialize_height_family(closed), o.out_path);
    return 0;
}

int cmd_fixpoint(const CommonOpts& o, const std::string& family_path,
                 const std::string& action_path) {
    kk::ProjectionStructure ps = load_structure(family_path, o.cap_vertices);
    kk::GroupAction act = kk::parse_action(action_path);
    if (o.base < 0 || o.base >= ps.n())
        throw kk::input_error("--base is out of range for this instance");
    kk::FixpointResult res = kk::find_invariant_simplex(ps, act, o.base);
    std::cout << "orbit diameter " << res.orbit_diameter << "\n";
    std::cout << "hull diameter " << res.hull_diameter << " over " << res.hull.size()
              << " vertices\n";
    for (size_t i = 0; i < res.trace.size(); ++i) {
        const auto& st = res.trace[i];
        std::cout << "step " << i + 1 << " removed";
        for (int v : st.removed) std::cout << " " << v;
        std::cout << " diameter " << st.diam_before << " -> " << st.diam_after << " chain "
                  << st.chain_before << " -> " << st.chain_after << "\n";
    }
    std::cout << "invariant clique";
    for (int v : res.clique) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "PASS fixpoint\n";
    return 0;
}

int cmd_fixcomplex(const CommonOpts& o, bool base_given, const std::string& family_path,
                   const std::string& action_path) {
    kk::ProjectionStructure ps = load_structure(family_path, o.cap_vertices);
    kk::GroupAction act = kk::parse_action(action_path);
    auto action_rep = kk::check_action(ps, act);
    std::cout << action_rep.line() << "\n";
    if (!action_rep.pass) return 1;
    kk::FixComplex fc = kk::fix_complex(ps.complex, act);
    for (size_t i = 0; i < fc.orbits.size(); ++i) {
        std::cout << "fix vertex " << i << " =";
        for (int v : fc.orbits[i]) std::cout << " " << v;
        std::cout << "\n";
    }
    for (auto [u, v] : fc.complex.edges) std::cout << "fix edge " << u << " " << v << "\n";
    if (!o.out_path.empty()) kk::write_text_file(o.out_path, kk::serialize_flag_complex(fc.complex));
    if (base_given) {
        if (o.base < 0 || o.base >= (int)fc.orbits.size())
            throw kk::input_error("--base is out of range for the fix complex");
        print_dismantling(kk::fix_dismantle(ps, act, fc.orbits[o.base]));
    }
    return 0;
}

int cmd_bench(const CommonOpts& o, const std::vector<int>& sizes) {
    std::cout << "check,size,seed,cases,millis,status\n";
    for (int size : sizes) {
        if (size < 1) throw kk::input_error("bench sizes must be positive");
        kk::HeightFamily fam;
        bool capped = size > o.cap_vertices;
        if (!capped) {
            try {
                fam = kk::generate_random(o.columns, size, o.max_height, o.seed,
                                          o.cap_vertices);
            } catch (const kk::input_error&) {
                capped = true;
            }
        }
        if (capped) {
            for (const auto& name : kCheckNames)
                std::cout << name << "," << size << "," << o.seed << ",0,0,SKIPPED(cap)\n";
            continue;
        }
        kk::ProjectionStructure ps = kk::from_family(fam);
        for (const auto& name : kCheckNames) {
            auto start = std::chrono::steady_clock::now();
            kk::CheckReport rep = run_named_check(ps, name, o.jobs);
            auto stop = std::chrono::steady_clock::now();
            long long ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
            std::cout << name << "," << size << "," << o.seed << "," << rep.cases << ","
                      << ms << "," << (rep.pass ? "OK" : "FAIL") << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"height-function model of the Kakimizu complex: generators, "
                 "lemma checkers, dismantling, homology, fixed points"};
    app.require_subcommand(1);
    CommonOpts o;
    if (const char* env = std::getenv("KAKIMIZU_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) o.jobs = j;  // --jobs still wins when given
    }
    std::string path, action_path;
    std::vector<int> sizes;

    auto* gen = app.add_subcommand("gen", "generate a random convex-closed family");
    gen->add_option("--seed", o.seed);
    gen->add_option("--columns", o.columns);
    gen->add_option("--max-height", o.max_height);
    gen->add_option("--count", o.count);
    gen->add_option("--cap-vertices", o.cap_vertices);
    gen->add_option("-o,--out", o.out_path);

    auto* check = app.add_subcommand("check", "run the lemma checkers on an instance");
    check->add_option("file", path)->required();
    check->add_option("--axioms", o.axioms);
    check->add_option("--jobs", o.jobs);
    check->add_option("--cap-vertices", o.cap_vertices);

    auto* dis = app.add_subcommand("dismantle", "dismantle an instance with a certificate");
    dis->add_option("file", path)->required();
    dis->add_option("--base", o.base);
    dis->add_option("--cap-vertices", o.cap_vertices);

    auto* hom = app.add_subcommand("homology", "reduced integral homology");
    hom->add_option("file", path)->required();
    hom->add_option("--max-dim", o.max_dim);
    hom->add_option("--cap-vertices", o.cap_vertices);

    auto* hull = app.add_subcommand("hull", "convex closure of a height family");
    hull->add_option("file", path)->required();
    auto* hull_base = hull->add_option("--base", o.base);
    hull->add_option("-o,--out", o.out_path);

    auto* fixp = app.add_subcommand("fixpoint", "run the invariant-simplex engine");
    fixp->add_option("family", path)->required();
    fixp->add_option("action", action_path)->required();
    fixp->add_option("--base", o.base);
    fixp->add_option("--cap-vertices", o.cap_vertices);

    auto* fixc = app.add_subcommand("fixcomplex", "build the fixed-point-set complex");
    fixc->add_option("family", path)->required();
    fixc->add_option("action", action_path)->required();
    auto* fixc_base = fixc->add_option("--base", o.base);
    fixc->add_option("-o,--out", o.out_path);
    fixc->add_option("--cap-vertices", o.cap_vertices);

    auto* bench = app.add_subcommand("bench", "time the checkers over generated sizes");
    bench->add_option("sizes", sizes)->required();
    bench->add_option("--seed", o.seed);
    bench->add_option("--columns", o.columns);
    bench->add_option("--max-height", o.max_height);
    bench->add_option("--jobs", o.jobs);
    bench->add_option("--cap-vertices", o.cap_vertices);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (check->parsed()) return cmd_check(o, path);
        if (dis->parsed()) return cmd_dismantle(o, path);
        if (hom->parsed()) return cmd_homology(o, path);
        if (hull->parsed()) return cmd_hull(o, hull_base->count() > 0, path);
        if (fixp->parsed()) return cmd_fixpoint(o, path, action_path);
        if (fixc->parsed()) return cmd_fixcomplex(o, fixc_base->count() > 0, path, action_path);
        if (bench->parsed()) return cmd_bench(o, sizes);
    } catch (const kk::structural_error& e) {
        std::cout << "FAIL " << e.what() << "\n";
        return 1;
    } catch (const kk::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kk::model_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
