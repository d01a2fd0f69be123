#include "kakimizu/io.hpp"

#include <fstream>
#include <sstream>

namespace kakimizu {

namespace {

struct LineReader {
    std::istringstream in;
    std::string name;
    int lineno = 0;
    std::vector<std::string> tokens;

    LineReader(const std::string& text, std::string n) : in(text), name(std::move(n)) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error(name + ":" + std::to_string(lineno) + ": " + msg);
    }

    // next nonblank line split into tokens; false at end of input
    bool next() {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            tokens.clear();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    int as_int(const std::string& tok) const {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
        return value;
    }

    void expect_magic(const std::string& magic) {
        if (!next() || tokens.size() != 2 || tokens[0] != magic || tokens[1] != "v1")
            fail("expected magic line '" + magic + " v1'");
    }
};

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw input_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw input_error(path + ": cannot open file for writing");
    f << content;
    if (!f) throw input_error(path + ": write failed");
}

FileKind sniff_kind(const std::string& path) {
    LineReader r(read_text_file(path), path);
    if (!r.next() || r.tokens.empty()) r.fail("empty file, expected a magic line");
    const std::string& m = r.tokens[0];
    if (m == "%flagcomplex") return FileKind::flag_complex;
    if (m == "%heightfamily") return FileKind::height_family;
    if (m == "%action") return FileKind::action;
    if (m == "%projtable") return FileKind::proj_table;
    r.fail("unknown magic '" + m + "'");
}

FlagComplex parse_flag_complex_text(const std::string& text, const std::string& name) {
    LineReader r(text, name);
    r.expect_magic("%flagcomplex");
    if (!r.next() || r.tokens.size() != 2 || r.tokens[0] != "vertices")
        r.fail("expected 'vertices N'");
    int n = r.as_int(r.tokens[1]);
    if (n < 0) r.fail("vertex count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    while (r.next()) {
        if (r.tokens[0] != "edge" || r.tokens.size() != 3)
            r.fail("expected 'edge u v'");
        edges.push_back({r.as_int(r.tokens[1]), r.as_int(r.tokens[2])});
    }
    try {
        return build_graph(n, edges);
    } catch (const input_error& e) {
        throw input_error(name + ": " + e.what());
    }
}

FlagComplex parse_flag_complex(const std::string& path) {
    return parse_flag_complex_text(read_text_file(path), path);
}

std::string serialize_flag_complex(const FlagComplex& c) {
    std::ostringstream out;
    out << "%flagcomplex v1\n";
    out << "vertices " << c.vertex_count << "\n";
    for (auto [u, v] : c.edges) out << "edge " << u << " " << v << "\n";
    return out.str();
}

HeightFamily parse_height_family_text(const std::string& text, const std::string& name) {
    LineReader r(text, name);
    r.expect_magic("%heightfamily");
    if (!r.next() || r.tokens.size() != 2 || r.tokens[0] != "columns")
        r.fail("expected 'columns M'");
    int m = r.as_int(r.tokens[1]);
    if (m < 1) r.fail("column count must be at least 1");
    std::vector<HeightFunction> members;
    while (r.next()) {
        if (r.tokens[0] != "vertex") r.fail("expected 'vertex <id> <heights...>'");
        if ((int)r.tokens.size() != m + 2)
            r.fail("vertex line needs an id and exactly " + std::to_string(m) + " heights");
        int id = r.as_int(r.tokens[1]);
        if (id != (int)members.size())
            r.fail("vertex ids must be dense and ascending; expected " +
                   std::to_string(members.size()));
        HeightFunction f(m);
        for (int i = 0; i < m; ++i) f[i] = r.as_int(r.tokens[i + 2]);
        int lo = *std::min_element(f.begin(), f.end());
        if (lo != 0)
            r.fail("height function is not normalized; subtract its minimum value " +
                   std::to_string(lo));
        if (!members.empty() && !(members.back() < f))
            r.fail("members must be listed in strictly increasing lexicographic order");
        members.push_back(std::move(f));
    }
    if (members.empty()) r.fail("family needs at least one vertex line");
    try {
        return make_family(m, std::move(members));
    } catch (const input_error& e) {
        throw input_error(name + ": " + e.what());
    }
}

HeightFamily parse_height_family(const std::string& path) {
    return parse_height_family_text(read_text_file(path), path);
}

std::string serialize_height_family(const HeightFamily& fam) {
    std::ostringstream out;
    out << "%heightfamily v1\n";
    out << "columns " << fam.columns << "\n";
    for (size_t i = 0; i < fam.members.size(); ++i) {
        out << "vertex " << i;
        for (int h : fam.members[i]) out << " " << h;
        out << "\n";
    }
    return out.str();
}

GroupAction parse_action_text(const std::string& text, const std::string& name) {
    LineReader r(text, name);
    r.expect_magic("%action");
    GroupAction a;
    while (r.next()) {
        if (r.tokens[0] != "generator" || r.tokens.size() < 2)
            r.fail("expected 'generator <images...>'");
        std::vector<int> g;
        for (size_t i = 1; i < r.tokens.size(); ++i) g.push_back(r.as_int(r.tokens[i]));
        if (!a.generators.empty() && a.generators.front().size() != g.size())
            r.fail("generators must all have the same length");
        std::vector<char> hit(g.size(), 0);
        for (int v : g) {
            if (v < 0 || v >= (int)g.size() || hit[v])
                r.fail("generator is not a permutation");
            hit[v] = 1;
        }
        a.generators.push_back(std::move(g));
    }
    return a;
}

GroupAction parse_action(const std::string& path) {
    return parse_action_text(read_text_file(path), path);
}

std::string serialize_action(const GroupAction& a) {
    std::ostringstream out;
    out << "%action v1\n";
    for (const auto& g : a.generators) {
        out << "generator";
        for (int v : g) out << " " << v;
        out << "\n";
    }
    return out.str();
}

ProjectionStructure parse_projection_table_text(const std::string& text,
                                                const std::string& name) {
    LineReader r(text, name);
    r.expect_magic("%projtable");
    if (!r.next() || r.tokens.size() != 2 || r.tokens[0] != "vertices")
        r.fail("expected 'vertices N'");
    int n = r.as_int(r.tokens[1]);
    if (n < 1) r.fail("vertex count must be positive");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> proj(n, std::vector<int>(n, -1));
    std::unordered_map<uint64_t, char> ord;
    bool saw_proj = false;
    auto in_range = [&](int v) { return v >= 0 && v < n; };
    while (r.next()) {
        const std::string& kw = r.tokens[0];
        if (kw == "edge") {
            if (saw_proj || !ord.empty()) r.fail("edge lines must precede proj and ord lines");
            if (r.tokens.size() != 3) r.fail("expected 'edge u v'");
            edges.push_back({r.as_int(r.tokens[1]), r.as_int(r.tokens[2])});
        } else if (kw == "proj") {
            if (r.tokens.size() != 4) r.fail("expected 'proj s r v'");
            int s = r.as_int(r.tokens[1]), rho = r.as_int(r.tokens[2]),
                v = r.as_int(r.tokens[3]);
            if (!in_range(s) || !in_range(rho) || !in_range(v))
                r.fail("proj entry out of range");
            if (s == rho) r.fail("proj is undefined on the diagonal");
            if (proj[s][rho] != -1) r.fail("duplicate proj entry");
            proj[s][rho] = v;
            saw_proj = true;
        } else if (kw == "ord") {
            if (r.tokens.size() != 5) r.fail("expected 'ord s u v {0|1}'");
            int s = r.as_int(r.tokens[1]), u = r.as_int(r.tokens[2]),
                v = r.as_int(r.tokens[3]), b = r.as_int(r.tokens[4]);
            if (!in_range(s) || !in_range(u) || !in_range(v))
                r.fail("ord entry out of range");
            if (b != 0 && b != 1) r.fail("ord value must be 0 or 1");
            uint64_t key = ord_key(n, s, u, v);
            if (ord.count(key)) r.fail("duplicate ord entry");
            ord.emplace(key, (char)b);
        } else {
            r.fail("expected 'edge', 'proj' or 'ord'");
        }
    }
    FlagComplex c;
    try {
        c = build_graph(n, edges);
    } catch (const input_error& e) {
        throw input_error(name + ": " + e.what());
    }
    for (int s = 0; s < n; ++s)
        for (int rho = 0; rho < n; ++rho)
            if (s != rho && proj[s][rho] == -1)
                r.fail("missing proj entry (" + std::to_string(s) + "," +
                       std::to_string(rho) + ")");
    for (int s = 0; s < n; ++s)
        for (auto [u, v] : c.edges) {
            if (!ord.count(ord_key(n, s, u, v)))
                r.fail("missing ord entry (" + std::to_string(s) + "," +
                       std::to_string(u) + "," + std::to_string(v) + ")");
            if (!ord.count(ord_key(n, s, v, u)))
                r.fail("missing ord entry (" + std::to_string(s) + "," +
                       std::to_string(v) + "," + std::to_string(u) + ")");
        }
    if ((long long)ord.size() != (long long)n * 2 * (long long)c.edges.size())
        r.fail("ord entries must cover adjacent pairs only");
    return from_table(std::move(c), std::move(proj), std::move(ord));
}

ProjectionStructure parse_projection_table(const std::string& path) {
    return parse_projection_table_text(read_text_file(path), path);
}

std::string serialize_projection_table(const ProjectionStructure& ps) {
    std::ostringstream out;
    int n = ps.n();
    out << "%projtable v1\n";
    out << "vertices " << n << "\n";
    for (auto [u, v] : ps.complex.edges) out << "edge " << u << " " << v << "\n";
    for (int s = 0; s < n; ++s)
        for (int rho = 0; rho < n; ++rho)
            if (s != rho)
                out << "proj " << s << " " << rho << " " << ps.project_vertex(s, rho)
                    << "\n";
    for (int s = 0; s < n; ++s)
        for (auto [u, v] : ps.complex.edges) {
            out << "ord " << s << " " << u << " " << v << " " << (ps.less(s, u, v) ? 1 : 0)
                << "\n";
            out << "ord " << s << " " << v << " " << u << " " << (ps.less(s, v, u) ? 1 : 0)
                << "\n";
        }
    return out.str();
}

}  // namespace kakimizu
