// Acceptance gate: one line per criterion, nonzero exit when any fails.
// argv[1] names the CLI binary, argv[2] the fixture directory.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <kakimizu/dismantle.hpp>
#include <kakimizu/group_action.hpp>
#include <kakimizu/homology.hpp>
#include <kakimizu/io.hpp>
#include <kakimizu/projection.hpp>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace kakimizu;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int pick_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) hc = 2;
    return (int)std::min(hc, 8u);
}

int family_diameter(const std::vector<HeightFunction>& members) {
    int d = 0;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            d = std::max(d, kakimizu_distance(members[i], members[j]).d);
    return d;
}

bool run_cmd(const std::string& cmd) { return std::system(cmd.c_str()) == 0; }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <cli-binary> <fixture-dir>\n");
        return 2;
    }
    const std::string cli = argv[1];
    const std::string fix = argv[2];
    const int jobs = pick_jobs();
    bool all_pass = true;

    auto report = [&](int k, const Outcome& o) {
        std::printf("%s criterion %d %s\n", o.pass ? "PASS" : "FAIL", k, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) all_pass = false;
    };
    auto guarded = [&](int k, const std::function<Outcome()>& fn) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        report(k, o);
    };

    // the criterion-1 corpus feeds criteria 2, 4 and 5
    std::vector<HeightFamily> corpus;

    guarded(1, [&]() -> Outcome {
        auto t0 = std::chrono::steady_clock::now();
        long long passes = 0;
        int max_n = 0;
        for (int i = 0; i < 100; ++i) {
            int m = 2 + i % 3;
            int h = 2 + i % 4;
            int count = 3 + i % 5;
            auto fam = generate_random(m, count, h, 1000 + (uint64_t)i, 300);
            if (!is_convex_closed(fam))
                return {false, "family " + std::to_string(i) + " is not convex-closed"};
            if (fam.graph.vertex_count > 300)
                return {false, "family " + std::to_string(i) + " exceeds 300 vertices"};
            auto ps = from_family(fam);
            for (const auto& rep : run_all_checks(ps, jobs)) {
                if (!rep.pass)
                    return {false, "family " + std::to_string(i) + ": " + rep.line()};
                ++passes;
            }
            max_n = std::max(max_n, fam.graph.vertex_count);
            corpus.push_back(std::move(fam));
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > 600.0) return {false, "checker sweep took too long"};
        std::ostringstream os;
        os << "100 families (largest " << max_n << " vertices), " << passes
           << " checker passes in " << (int)(secs + 0.5) << "s";
        return {true, os.str()};
    });

    guarded(2, [&]() -> Outcome {
        if (corpus.size() != 100) return {false, "corpus unavailable"};
        long long certs = 0, points = 0;
        for (size_t i = 0; i < corpus.size(); ++i) {
            const auto& fam = corpus[i];
            auto ps = from_family(fam);
            for (int s = 0; s < ps.n(); ++s) {
                auto d = projection_dismantle(ps, s);
                auto rep = verify_dismantling(ps.complex, d);
                if (!rep.pass)
                    return {false, "family " + std::to_string(i) + " base " +
                                       std::to_string(s) + ": " + rep.line()};
                ++certs;
            }
            auto greedy = greedy_dismantle(fam.graph);
            if (!greedy)
                return {false, "greedy found no dismantling for family " + std::to_string(i)};
            if (!verify_dismantling(fam.graph, *greedy).pass)
                return {false, "greedy certificate failed on family " + std::to_string(i)};
            if (!is_homology_point(fam.graph))
                return {false, "family " + std::to_string(i) + " is not a homology point"};
            ++points;
        }
        std::ostringstream os;
        os << certs << " projection dismantlings verified, greedy agreement and trivial "
           << "homology on all " << points << " families";
        return {true, os.str()};
    });

    guarded(3, [&]() -> Outcome {
        auto c4 = parse_flag_complex(fix + "/c4.fc");
        auto c5 = parse_flag_complex(fix + "/c5.fc");
        if (greedy_dismantle(c4)) return {false, "the four-cycle was dismantled"};
        if (greedy_dismantle(c5)) return {false, "the five-cycle was dismantled"};
        auto prof = reduced_homology(c4);
        if (prof.betti.size() != 2 || prof.betti[0] != 0 || prof.betti[1] != 1)
            return {false, "four-cycle homology is off"};
        if (!prof.torsion[0].empty() || !prof.torsion[1].empty())
            return {false, "four-cycle homology has spurious torsion"};
        IntegerMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(1, 1) = 3;
        auto snf = smith_normal_form(m);
        if (snf.rank != 2 || snf.divisors != std::vector<BigInt>{1, 6})
            return {false, "diag(2,3) did not reduce to (1,6)"};
        return {true, "cycles resist dismantling, betti_1(C4) = 1, snf(diag(2,3)) = (1,6)"};
    });

    guarded(4, [&]() -> Outcome {
        if (corpus.size() != 100) return {false, "corpus unavailable"};
        double max_ratio = 0.0;
        long long rows = 0;
        for (size_t i = 0; i < corpus.size(); ++i) {
            auto stats = chain_length_stats(from_family(corpus[i]));
            if (!stats.pass)
                return {false, "chain bound violated in family " + std::to_string(i)};
            max_ratio = std::max(max_ratio, stats.max_ratio);
            rows += (long long)stats.rows.size();
        }
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "l <= (L+1)^n across %lld sphere rows, max observed ratio %.4f",
                      rows, max_ratio);
        return {true, buf};
    });

    guarded(5, [&]() -> Outcome {
        if (corpus.size() != 100) return {false, "corpus unavailable"};
        SeededRng rng(555);
        int trials = 0, attempts = 0;
        while (trials < 120 && attempts < 600) {
            ++attempts;
            const auto& fam = corpus[(size_t)attempts % corpus.size()];
            int n = (int)fam.members.size();
            if (n < 2) continue;
            int k = 2 + rng.below(3);
            VertexSet pick;
            for (int t = 0; t < k; ++t) {
                int v = rng.below(n);
                if (!std::count(pick.begin(), pick.end(), v)) pick.push_back(v);
            }
            if ((int)pick.size() < 2) continue;
            std::vector<HeightFunction> seed;
            for (int v : pick) seed.push_back(fam.members[v]);
            int before = family_diameter(seed);
            auto hull = close_convex(make_family(fam.columns, seed));
            int after = family_diameter(hull.members);
            if (after != before)
                return {false, "hull diameter " + std::to_string(after) +
                                   " differs from seed diameter " + std::to_string(before)};
            ++trials;
        }
        if (trials < 100)
            return {false, "only " + std::to_string(trials) + " hull trials completed"};
        return {true, std::to_string(trials) + " random seed sets hulled at constant diameter"};
    });

    guarded(6, [&]() -> Outcome {
        int fams_done = 0, multi_fix = 0;
        long long fix_certs = 0, sum_checks = 0, steps = 0;
        for (int attempt = 0; attempt < 400 && fams_done < 20; ++attempt) {
            // symmetrize a random draw under one transposition and close it;
            // the closure stays invariant, so the induced permutation acts
            HeightFamily sym;
            std::vector<int> vperm;
            try {
                int m = 2 + attempt % 2;
                std::vector<int> perm = (m == 2) ? std::vector<int>{1, 0}
                                                 : std::vector<int>{0, 2, 1};
                auto base = generate_random(m, 3 + attempt % 3, 2 + attempt % 2,
                                            40000 + (uint64_t)attempt, 80);
                std::vector<HeightFunction> members;
                for (const auto& f : base.members) {
                    members.push_back(f);
                    members.push_back(permute_columns(f, perm));
                }
                sym = close_convex(make_family(m, members));
                if ((int)sym.members.size() > 150) continue;
                if (column_symmetries(sym).size() < 2)
                    return {false, "symmetrized closure lost its column symmetry"};
                vperm = induced_vertex_permutation(sym, perm);
                bool ident = true;
                for (size_t v = 0; v < vperm.size(); ++v) ident &= (vperm[v] == (int)v);
                if (ident) continue;
            } catch (const input_error&) {
                continue;  // generator hit its size cap, try the next seed
            }

            auto ps = from_family(sym);
            GroupAction a{{vperm}};
            auto arep = check_action(ps, a);
            if (!arep.pass) return {false, "action check failed: " + arep.line()};

            for (int seed : {0, ps.n() / 2}) {
                auto res = find_invariant_simplex(ps, a, seed);
                if (!is_invariant(a, res.clique))
                    return {false, "final clique not invariant"};
                for (size_t x = 0; x < res.clique.size(); ++x)
                    for (size_t y = x + 1; y < res.clique.size(); ++y)
                        if (!ps.complex.adjacent(res.clique[x], res.clique[y]))
                            return {false, "final set is not a clique"};
                if (res.hull_diameter != res.orbit_diameter)
                    return {false, "hull changed the orbit diameter"};
                for (const auto& st : res.trace) {
                    bool less = st.diam_after < st.diam_before ||
                                (st.diam_after == st.diam_before &&
                                 st.chain_after < st.chain_before);
                    if (!less) return {false, "a fixpoint step failed to decrease"};
                    ++steps;
                }
            }

            auto fc = fix_complex(ps.complex, a);
            if (fc.orbits.size() >= 2) {
                ++multi_fix;
                for (const auto& Sigma : fc.orbits) {
                    auto d = fix_dismantle(ps, a, Sigma);
                    if (!verify_dismantling(fc.complex, d).pass)
                        return {false, "fix dismantling certificate failed"};
                    ++fix_certs;
                }
                for (size_t x = 0; x < fc.orbits.size(); ++x)
                    for (size_t y = 0; y < fc.orbits.size(); ++y) {
                        if (x == y) continue;
                        auto vr = verify_distance_sum_decrease(ps, a, fc.orbits[x],
                                                               fc.orbits[y]);
                        if (!vr.pass)
                            return {false, "distance sums failed: " + vr.line()};
                        ++sum_checks;
                    }
            }
            ++fams_done;
        }
        if (fams_done < 20)
            return {false, "only " + std::to_string(fams_done) + " symmetric families built"};
        if (multi_fix < 1) return {false, "no fix complex had two or more vertices"};
        std::ostringstream os;
        os << fams_done << " symmetric families, " << steps << " decreasing steps, "
           << multi_fix << " multi-vertex fix complexes, " << fix_certs
           << " fix dismantlings, " << sum_checks << " distance-sum checks";
        return {true, os.str()};
    });

    guarded(7, [&]() -> Outcome {
        long long agreements = 0;
        auto compare = [&](const HeightFamily& fam,
                           const ProjectionStructure& ps) -> std::string {
            int n = ps.n();
            for (int s = 0; s < n; ++s)
                for (int r = 0; r < n; ++r) {
                    if (s == r) continue;
                    int direct = fam.index_of(project(fam.members[s], fam.members[r]));
                    if (ps.project_vertex(s, r) != direct)
                        return "proj mismatch at (" + std::to_string(s) + "," +
                               std::to_string(r) + ")";
                    ++agreements;
                }
            for (int s = 0; s < n; ++s)
                for (auto [u, v] : ps.complex.edges)
                    for (int dir = 0; dir < 2; ++dir) {
                        int x = dir ? v : u, y = dir ? u : v;
                        bool direct =
                            order_less(fam.members[s], fam.members[x], fam.members[y]);
                        if (ps.less(s, x, y) != direct)
                            return "ord mismatch at base " + std::to_string(s);
                        ++agreements;
                    }
            return "";
        };

        auto f1 = parse_height_family(fix + "/f1.hf");
        auto model = from_family(f1);
        auto err = compare(f1, model);
        if (!err.empty()) return {false, "f1.hf model: " + err};

        auto table = parse_projection_table(fix + "/f1.pt");
        if (table.proj_tab != model.proj_tab)
            return {false, "f1.pt proj table differs from the model"};
        err = compare(f1, table);
        if (!err.empty()) return {false, "f1.pt table: " + err};

        for (uint64_t seed : {71u, 72u, 73u, 74u, 75u}) {
            auto fam = generate_random(2 + (int)(seed % 3), 5, 3, seed);
            err = compare(fam, from_family(fam));
            if (!err.empty())
                return {false, "seed " + std::to_string(seed) + ": " + err};
        }
        return {true, std::to_string(agreements) + " entries agree across implementations"};
    });

    guarded(8, [&]() -> Outcome {
        const std::string t = "/tmp/kakimizu_acceptance_";
        const std::string genflags = " gen --seed 7 --columns 3 --count 5 --max-height 3 -o ";
        if (!run_cmd(cli + genflags + t + "a.hf") || !run_cmd(cli + genflags + t + "b.hf"))
            return {false, "gen run failed"};
        if (read_text_file(t + "a.hf") != read_text_file(t + "b.hf"))
            return {false, "gen output differs between identical runs"};

        if (!run_cmd(cli + " check --axioms all " + t + "a.hf > " + t + "r1.txt") ||
            !run_cmd(cli + " check --axioms all " + t + "a.hf > " + t + "r2.txt") ||
            !run_cmd(cli + " check --axioms all --jobs 4 " + t + "a.hf > " + t + "r3.txt"))
            return {false, "check run failed"};
        auto r1 = read_text_file(t + "r1.txt");
        if (r1 != read_text_file(t + "r2.txt"))
            return {false, "check reports differ between identical runs"};
        if (r1 != read_text_file(t + "r3.txt"))
            return {false, "check reports depend on the job count"};

        if (!run_cmd(cli + " dismantle --base 0 " + t + "a.hf > " + t + "d1.txt") ||
            !run_cmd(cli + " dismantle --base 0 " + t + "a.hf > " + t + "d2.txt"))
            return {false, "dismantle run failed"};
        if (read_text_file(t + "d1.txt") != read_text_file(t + "d2.txt"))
            return {false, "dismantle reports differ between identical runs"};
        return {true, "instance files and reports are byte-identical across reruns"};
    });

    return all_pass ? 0 : 1;
}
