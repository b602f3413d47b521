#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "folia/forcing.hpp"
#include "folia/io.hpp"
#include "folia/oracle.hpp"

namespace {

using namespace folia;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string radius_text(const SpectralRadius& r) {
    if (r.exact_zero) return "exact 0";
    if (r.exact_one) return "exact 1";
    return fmt(r.value);
}

std::string sign_name(Sign s) { return s == Sign::Positive ? "positive" : "negative"; }

std::string label_name(MatrixLabel l) {
    switch (l) {
        case MatrixLabel::Strong: return "strong";
        case MatrixLabel::Left: return "left";
        default: return "right";
    }
}

void print_witness(const IntersectionWitness& w) {
    std::cout << "witness phi=" << w.phi.id.str() << " sign=" << sign_name(w.sign)
              << " t1=" << w.t1 << " (flanks " << w.a1 << "," << w.b1 << ")"
              << " t2=" << w.t2 << " (flanks " << w.a2 << "," << w.b2 << ")";
    if (w.deck != 0) std::cout << " deck=" << w.deck;
    std::cout << "\n";
}

void print_matrix(const IncidenceMatrix& P) {
    std::cout << label_name(P.label) << " (" << P.dim << "x" << P.dim << ")\n";
    for (const std::string& row : render(P)) std::cout << "  " << row << "\n";
}

void print_certificate(const std::string& name, const AdmissiblePath& a) {
    std::cout << name << ": order " << (a.mode == OrderMode::Exact ? "= " : "<= ") << a.order
              << ", leaves:";
    for (const ChordId& id : a.path.leaves) std::cout << " " << id.str();
    std::cout << "\n";
    if (a.disjunction)
        std::cout << "  disjunction: {" << a.disjunction->first << ", " << a.disjunction->second
                  << "}\n";
    for (const std::string& line : a.provenance) std::cout << "  - " << line << "\n";
}

TransversePath resolve_path(const Chart& chart, const PathFile& pf) {
    return validate_path(chart, pf.leaves);
}

int run_force_script(const Chart& chart, const std::string& script) {
    std::ifstream in(script);
    if (!in) fail("BadFile", "cannot open " + script);
    std::vector<std::string> order;
    std::map<std::string, AdmissiblePath> certs;
    auto get = [&](const std::string& name) -> AdmissiblePath& {
        auto it = certs.find(name);
        if (it == certs.end()) fail("BadFile", "unknown certificate " + name);
        return it->second;
    };
    auto put = [&](const std::string& name, AdmissiblePath a) {
        if (!certs.count(name)) order.push_back(name);
        certs[name] = std::move(a);
    };
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cmd;
        if (!(ls >> cmd) || cmd[0] == '#') continue;
        if (cmd == "declare") {
            std::string name, file, mode;
            long n = 0;
            if (!(ls >> name >> file >> n >> mode) || (mode != "exact" && mode != "atmost"))
                fail("BadFile", "declare NAME PATHFILE ORDER exact|atmost");
            PathFile pf = load_path(file);
            put(name, declare_admissible(resolve_path(chart, pf), n,
                                         mode == "exact" ? OrderMode::Exact : OrderMode::AtMost));
        } else if (cmd == "cross") {
            std::string o1, o2, a, b;
            if (!(ls >> o1 >> o2 >> a >> b)) fail("BadFile", "cross OUT1 OUT2 A B");
            const AdmissiblePath &pa = get(a), &pb = get(b);
            auto w = crosses_transversally(pa.path, pb.path);
            if (!w) fail("StaleWitness", a + " and " + b + " have no transverse intersection");
            auto [r1, r2] = force_cross(pa, pb, *w);
            put(o1, std::move(r1));
            put(o2, std::move(r2));
        } else if (cmd == "self-power") {
            std::string op, orm, a;
            long q = 0;
            if (!(ls >> op >> orm >> a >> q)) fail("BadFile", "self-power OUT_POW OUT_REM A Q");
            const AdmissiblePath& pa = get(a);
            auto ws = self_witnesses(pa.path, max_self_deck(pa.path));
            if (ws.empty()) fail("StaleWitness", a + " has no transverse self-intersection");
            auto [pow, rem] = self_power(pa, ws.front(), q);
            put(op, std::move(pow));
            put(orm, std::move(rem));
        } else if (cmd == "reduce") {
            std::string out, a;
            if (!(ls >> out >> a)) fail("BadFile", "reduce OUT A");
            put(out, remove_self_intersections(get(a)));
        } else {
            fail("BadFile", "unknown force step: " + cmd);
        }
    }
    for (const std::string& name : order) print_certificate(name, certs.at(name));
    return 0;
}

struct Expected {
    int diagram;
    MatrixLabel label;
    std::string radius;
    double numeric;  // only meaningful for inexact expectations
};

int run_examples() {
    // Pinned fixture values; Example 4 has no published radii and prints
    // computed values only.
    std::vector<Expected> expected = {
        {1, MatrixLabel::Left, "exact 1", 1.0},
        {1, MatrixLabel::Right, "exact 1", 1.0},
        {2, MatrixLabel::Left, "", 1.4655712318767682},
        {2, MatrixLabel::Right, "exact 0", 0.0},
        {3, MatrixLabel::Strong, "", std::sqrt(2.0)},
    };
    bool all_ok = true;
    for (int which = 1; which <= 4; ++which) {
        CrossingDiagram d = example_diagram(which);
        MatrixTriple t = build_matrices(d);
        for (const IncidenceMatrix* P : {&t.strong, &t.left, &t.right}) {
            SpectralRadius r = spectral_radius(*P);
            double bound = entropy_lower_bound(*P, 1);
            std::string flag = "-";
            for (const Expected& e : expected) {
                if (e.diagram != which || e.label != P->label) continue;
                bool ok = e.radius.empty() ? std::fabs(r.value - e.numeric) <= 1e-9
                                           : radius_text(r) == e.radius;
                flag = ok ? "OK" : "FAIL";
                if (!ok) all_ok = false;
            }
            std::cout << "example " << which << " " << label_name(P->label)
                      << ": radius " << radius_text(r) << ", bound " << fmt(bound) << " [" << flag
                      << "]\n";
        }
    }
    {
        CrossingDiagram d = example_diagram(3);
        double bound = entropy_lower_bound(build_matrices(d).strong, 1);
        bool ok = std::fabs(bound - std::log(2.0) / 2) <= 1e-9;
        if (!ok) all_ok = false;
        std::cout << "example 3 strong entropy bound " << fmt(bound) << " vs log(2)/2 ["
                  << (ok ? "OK" : "FAIL") << "]\n";
    }
    std::cout << (all_ok ? "all fixtures OK" : "fixture mismatch") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"folia: chord-arrangement toolkit for transverse-path forcing"};
    app.require_subcommand(1);

    std::string chart_file, path_file, path2_file, loop_file, diagram_file, script_file;
    std::string matrix_name = "strong";
    long window = 0, length = 6, base_order = 1, max_n = 5;
    long cap = 1000000;
    double tol = 1e-12;
    bool parallel = false;

    auto add_chart = [&](CLI::App* c) {
        c->add_option("--chart", chart_file, "chart file")->required();
    };
    auto add_path = [&](CLI::App* c) { c->add_option("--path", path_file, "path file")->required(); };
    auto add_diagram = [&](CLI::App* c) {
        c->add_option("--diagram", diagram_file, "diagram file")->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "validate a path file against a chart");
    add_chart(validate);
    add_path(validate);

    CLI::App* equiv = app.add_subcommand("equiv", "compare two paths up to equivalence");
    add_chart(equiv);
    add_path(equiv);
    equiv->add_option("--path2", path2_file, "second path file")->required();

    CLI::App* intersect = app.add_subcommand("intersect", "transverse intersection witnesses");
    add_chart(intersect);
    add_path(intersect);
    intersect->add_option("--path2", path2_file, "second path file")->required();

    CLI::App* selfx = app.add_subcommand("self-intersect", "transverse self-intersection witnesses");
    add_chart(selfx);
    add_path(selfx);
    selfx->add_option("--window", window, "max deck power to scan");

    CLI::App* force = app.add_subcommand("force", "run a forcing script");
    add_chart(force);
    force->add_option("--script", script_file, "script file")->required();

    CLI::App* lstats = app.add_subcommand("loop-stats", "loop invariants");
    add_chart(lstats);
    lstats->add_option("--loop", loop_file, "loop file (periodic path)")->required();
    lstats->add_option("--window", window, "scan window");

    CLI::App* pbr = app.add_subcommand("pb-reduce", "reduce a recurrent path to a simple loop");
    add_chart(pbr);
    pbr->add_option("--loop", loop_file, "loop file (periodic path)")->required();

    CLI::App* subshift = app.add_subcommand("subshift", "incidence matrices of a crossing diagram");
    add_diagram(subshift);

    CLI::App* entropy = app.add_subcommand("entropy", "spectral radii and entropy bounds");
    add_diagram(entropy);
    entropy->add_option("--tol", tol, "iteration tolerance");
    entropy->add_option("--order", base_order, "base admissibility order n");

    CLI::App* words = app.add_subcommand("words", "admissible words of a fixed length");
    add_diagram(words);
    words->add_option("--matrix", matrix_name, "strong|left|right");
    words->add_option("--length", length, "word length");
    words->add_option("--order", base_order, "base order per switch");
    words->add_option("--cap", cap, "enumeration cap");

    CLI::App* palin = app.add_subcommand("palindrome-growth",
                                         "loop-class counts of the built-in block decomposition");
    palin->add_option("--cap", max_n, "largest half-length n");

    app.add_subcommand("oracle-sweep", "exhaustive oracle cross-validation");
    app.add_subcommand("examples", "run the built-in worked examples");
    app.add_flag("--parallel", parallel, "enable parallel sweeps (accepted, single-threaded)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            Chart chart = load_chart(chart_file);
            PathFile pf = load_path(path_file);
            if (pf.shift) {
                validate_periodic(chart, pf.leaves, *pf.shift);
                std::cout << "valid periodic path (" << pf.leaves.size() << " leaves, shift "
                          << *pf.shift << ")\n";
            } else {
                validate_path(chart, pf.leaves);
                std::cout << "valid path (" << pf.leaves.size() << " leaves)\n";
            }
        } else if (equiv->parsed()) {
            Chart chart = load_chart(chart_file);
            TransversePath p1 = resolve_path(chart, load_path(path_file));
            TransversePath p2 = resolve_path(chart, load_path(path2_file));
            if (equivalent(p1, p2)) {
                std::cout << "equivalent\n";
            } else if (auto off = is_subpath_equiv(p1, p2)) {
                std::cout << "subpath at offset " << *off << "\n";
            } else {
                std::cout << "not equivalent\n";
            }
        } else if (intersect->parsed()) {
            Chart chart = load_chart(chart_file);
            TransversePath p1 = resolve_path(chart, load_path(path_file));
            TransversePath p2 = resolve_path(chart, load_path(path2_file));
            auto ws = all_witnesses(p1, p2);
            if (ws.empty()) std::cout << "no transverse intersection\n";
            for (const auto& w : ws) print_witness(w);
        } else if (selfx->parsed()) {
            Chart chart = load_chart(chart_file);
            PathFile pf = load_path(path_file);
            std::vector<IntersectionWitness> ws;
            if (pf.shift) {
                PeriodicPath p = validate_periodic(chart, pf.leaves, *pf.shift);
                ws = self_transverse(p, window > 0 ? window : 1);
            } else {
                TransversePath p = validate_path(chart, pf.leaves);
                long max_k = window > 0 ? window : max_self_deck(p);
                ws = self_witnesses(p, max_k);
            }
            if (ws.empty()) std::cout << "no transverse self-intersection\n";
            for (const auto& w : ws) print_witness(w);
        } else if (force->parsed()) {
            Chart chart = load_chart(chart_file);
            return run_force_script(chart, script_file);
        } else if (lstats->parsed()) {
            Chart chart = load_chart(chart_file);
            PathFile pf = load_path(loop_file);
            TransverseLoop g = make_loop(chart, pf.leaves, pf.shift.value_or(1));
            // Default to half the chart window so the scan has room to unroll.
            long win = window > 0 ? window : chart.window() / 2;
            LoopStats st = loop_stats(g, win);
            std::cout << "self = " << st.self_count << "\n";
            if (st.width)
                std::cout << "width = " << *st.width << "\n";
            else
                std::cout << "width unresolved at window " << st.window_used << "\n";
            std::cout << "m = " << st.m_gamma << "\n";
            std::cout << "window used = " << st.window_used << "\n";
            std::cout << "prime: " << (is_prime(g) ? "yes" : "no") << "\n";
        } else if (pbr->parsed()) {
            Chart chart = load_chart(chart_file);
            PathFile pf = load_path(loop_file);
            PeriodicPath p = validate_periodic(chart, pf.leaves, pf.shift.value_or(1));
            PBResult res = pb_reduce(p);
            if (res.loop) {
                std::cout << "simple loop: shift " << res.loop->periodic.shift << ", period:";
                for (const ChordId& id : res.loop->periodic.base.leaves)
                    std::cout << " " << id.str();
                std::cout << "\n";
            } else {
                std::cout << "obstruction:\n";
                print_witness(*res.obstruction);
            }
        } else if (subshift->parsed()) {
            MatrixTriple t = build_matrices(load_diagram(diagram_file));
            print_matrix(t.strong);
            print_matrix(t.left);
            print_matrix(t.right);
        } else if (entropy->parsed()) {
            MatrixTriple t = build_matrices(load_diagram(diagram_file));
            for (const IncidenceMatrix* P : {&t.strong, &t.left, &t.right}) {
                SpectralRadius r = spectral_radius(*P, tol);
                std::cout << label_name(P->label) << ": radius " << radius_text(r) << ", bound "
                          << fmt(entropy_lower_bound(*P, base_order, tol)) << "\n";
            }
            long r = (static_cast<long>(t.strong.dim) - 1) / 2;
            std::cout << "self-loop bound (r = " << r << "): " << fmt(entropy_selfloop_bound(r))
                      << "\n";
        } else if (words->parsed()) {
            MatrixTriple t = build_matrices(load_diagram(diagram_file));
            const IncidenceMatrix* P = &t.strong;
            if (matrix_name == "left")
                P = &t.left;
            else if (matrix_name == "right")
                P = &t.right;
            else if (matrix_name != "strong")
                fail("BadFile", "matrix must be strong, left or right");
            auto list = admissible_words(*P, static_cast<size_t>(length), base_order,
                                         static_cast<size_t>(cap));
            for (const WordCertificate& w : list) {
                std::cout << "word";
                for (size_t s : w.word) std::cout << " " << s;
                std::cout << " | switches " << w.switches << " | order " << w.order << "\n";
            }
            std::cout << "count " << word_count(*P, static_cast<size_t>(length)) << "\n";
        } else if (palin->parsed()) {
            PalindromeFixture fx = example_palindrome_blocks();
            TransversePath b1 = validate_path(fx.chart, fx.block1);
            TransversePath b2 = validate_path(fx.chart, fx.block2);
            for (long n = 1; n <= max_n; ++n) {
                auto loops = build_palindrome_loops(b1, b2, palindromic_words(static_cast<int>(n),
                                                                              static_cast<int>(n)));
                std::cout << "n = " << n << ": " << count_loop_classes(loops) << " loop classes ("
                          << loops.size() << " palindromic words)\n";
            }
        } else if (app.get_subcommand("oracle-sweep")->parsed()) {
            OracleReport rep = oracle_sweep();
            std::cout << "checked " << rep.checked << ", filtered " << rep.filtered
                      << ", mismatches " << rep.mismatches << "\n";
            std::cout << "separation filter consistent: "
                      << (rep.separation_filter_consistent ? "yes" : "no") << "\n";
            for (const std::string& d : rep.details) std::cout << "  " << d << "\n";
            bool pass = rep.mismatches == 0 && rep.separation_filter_consistent;
            std::cout << (pass ? "PASS" : "FAIL") << "\n";
            return pass ? 0 : 1;
        } else if (app.get_subcommand("examples")->parsed()) {
            return run_examples();
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
