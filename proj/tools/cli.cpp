#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "matlin/orders.hpp"
#include "matlin/parallel.hpp"

namespace matlin::cli {

namespace {

constexpr const char* exit_code_help = R"(Exit status:
  0  success
  1  internal error
  2  usage or parse error (bad flags, unreadable or malformed input, bad order)
  3  cutoff exceeded (an order sweep is larger than the cutoff; see --unsafe-cutoff)
  4  basis axiom violation in a --bases file
  5  invalid mathematical input (empty ground set, inconsistent or rank-deficient
     system, matroid map that is not a morphism, ...)
  6  a verification failed (selftest check, Betti/Groebner/polytope cross-check)

Errors write a JSON error object to stdout (and one line to stderr):
  {"error": {"kind": "...", "message": "...", "exit_code": N}}
A failed cross-check exits 6 after writing the full report, with the failing
check set to false.

Orders are comma-separated element lists, smallest first. For affine input
(--b) an order may include 0; when it does not, 0 is placed last.
MATLIN_JOBS overrides --jobs. Output never depends on the worker count.)";

struct Options {
    std::string matrix, bases, b, order, show, format = "text", out;
    std::size_t jobs = 0;
    bool count = false;
    std::optional<int> cutoff;
};

struct Context {
    Options opt;
    std::size_t jobs = 1;
    bool verified = true;

    int linear_cutoff() const { return opt.cutoff.value_or(default_linear_cutoff); }
    int affine_cutoff() const { return opt.cutoff.value_or(default_affine_cutoff); }

    bool check(bool ok) {
        verified = verified && ok;
        return ok;
    }
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

Input load_input(const Options& o) {
    if (o.matrix.empty() == o.bases.empty()) throw InputError("give exactly one of --matrix or --bases");
    Input in = o.matrix.empty() ? parse_bases_json(read_json_file(o.bases)) : parse_matrix_json(read_json_file(o.matrix));
    if (!o.b.empty()) {
        if (!in.matrix) throw InputError("--b needs --matrix");
        if (!in.b.empty()) throw InputError("the right-hand side is given both in the file and by --b");
        in.b = parse_rat_csv(o.b);
        if (in.b.size() != in.matrix->rows()) throw InputError("--b needs one entry per matrix row");
    }
    return in;
}

std::string order_text(const Options& o) {
    if (!o.show.empty() && !o.order.empty()) throw InputError("use either --show or --order, not both");
    return o.show.empty() ? o.order : o.show;
}

LinearOrder parse_order(const std::string& text, ElementSet ground) {
    if (text.empty()) return LinearOrder::natural(ground);
    const std::vector<int> seq = parse_int_csv(text);
    ElementSet seen;
    for (int e : seq) {
        if (e < 0 || e >= ElementSet::capacity) throw InputError("order element " + std::to_string(e) + " is out of range");
        if (seen.contains(e)) throw InputError("order lists element " + std::to_string(e) + " twice");
        seen = seen.with(e);
    }
    if (seen != ground) throw InputError("order must list every element of " + ground.to_string() + " exactly once");
    return LinearOrder(seq);
}

/// Order on 0..n; an order on 1..n gets 0 appended.
LinearOrder parse_affine_order(const std::string& text, ElementSet hom_ground) {
    if (text.empty()) return LinearOrder::natural(hom_ground);
    const std::vector<int> seq = parse_int_csv(text);
    if (std::find(seq.begin(), seq.end(), 0) != seq.end()) return parse_order(text, hom_ground);
    const LinearOrder o = parse_order(text, hom_ground.without(0));
    return o.with_inserted(0, o.size());
}

void reject_b(const Input& in, const std::string& command) {
    if (!in.b.empty()) throw InputError("'" + command + "' works on the linear space; drop --b or use 'affine'");
}

Json homology_json(const std::map<int, std::int64_t>& h) {
    Json a = Json::array();
    for (const auto& [d, r] : h)
        if (r != 0) a.push_back({{"dim", d}, {"rank", r}});
    return a;
}

Json multidegree_json(const Multidegree& md) {
    Json a = Json::array();
    for (const auto& [s, c] : md) a.push_back({{"t", to_json(s)}, {"c", c}});
    return a;
}

Json bidegree_json(const BivarPoly& p) {
    Json j = poly_json(p);
    j["display"] = display_bivar(p, "s", "t");
    return j;
}

Json matroid_summary(const Matroid& m) {
    return {{"ground", to_json(m.ground())}, {"rank", m.rank()}, {"bases", m.bases().size()}};
}

Json analyze(Context&, const Input& in) {
    const Matroid m = in.matroid();
    Json r;
    r["n"] = m.size();
    r["rank"] = m.rank();
    r["bases"] = {{"count", m.bases().size()}, {"sets", to_json(m.bases())}};
    r["circuits"] = {{"count", m.circuits().size()}, {"sets", to_json(m.circuits())}};
    r["cocircuits"] = {{"count", m.cocircuits().size()}, {"sets", to_json(m.cocircuits())}};
    const FlatLattice& lat = m.flat_lattice();
    Json flats = Json::array();
    for (std::size_t i = 0; i < lat.flats.size(); ++i)
        flats.push_back({{"flat", to_json(lat.flats[i])}, {"rank", lat.ranks[i]}, {"mobius", lat.mobius_top[i]}});
    r["flats"] = {{"count", lat.flats.size()}, {"lattice", flats}};
    r["loops"] = to_json(m.loops());
    r["coloops"] = to_json(m.coloops());
    r["components"] = to_json(m.connected_components());
    r["f_vector"] = f_vector(m);
    r["h_polynomial"] = poly_json(h_polynomial(m));
    r["tutte"] = poly_json(tutte(m));
    return r;
}

Json ideal_cmd(Context& ctx, const Input& in) {
    if (!in.matrix) throw InputError("'ideal' needs --matrix");
    const bool affine = !in.b.empty();
    const Matroid m = in.matroid();
    std::optional<MatroidTriple> t;
    LinearOrder order;
    if (affine) {
        t = MatroidTriple::from_system(*in.matrix, in.b);
        order = parse_affine_order(ctx.opt.order, t->hom.ground());
    } else {
        order = parse_order(ctx.opt.order, m.ground());
    }
    const std::vector<LinearForm> forms = cocircuit_forms(*in.matrix, in.b, &order);
    const TermOrder ord = affine ? TermOrder::realizing_affine(order) : TermOrder::realizing(order);
    std::vector<HomogPolynomial> gens;
    Json fj = Json::array();
    for (const auto& f : forms) {
        gens.push_back(homogenize(f));
        fj.push_back({{"cocircuit", to_json(f.support)},
                      {"form", f.to_string()},
                      {"homogenized", poly_json(gens.back(), m.ground())}});
    }
    const SquarefreeMonomialIdeal lt = leading_term_ideal(gens, ord, xyvars(m.ground()));
    const SquarefreeMonomialIdeal rule = affine ? initial_ideal(*t, order) : initial_ideal(m, order);
    const BuchbergerReport bb = buchberger_verify(gens, ord);
    Json r;
    r["affine"] = affine;
    r["order"] = order_json(order);
    r["forms"] = fj;
    r["initial_ideal"] = ideal_json(lt);
    r["checks"] = {{"groebner", ctx.check(bb.groebner)},
                   {"reduced", ctx.check(bb.reduced)},
                   {"minimal", ctx.check(minimally_generates(gens, ord))},
                   {"matches_cocircuit_rule", ctx.check(lt == rule)}};
    return r;
}

Json initial_ideals(Context& ctx, const Input& in) {
    const bool affine = !in.b.empty();
    const Matroid m = in.matroid();
    std::optional<MatroidTriple> t;
    if (affine) t = MatroidTriple::from_system(*in.matrix, in.b);
    const std::string text = order_text(ctx.opt);
    Json r;
    r["affine"] = affine;
    if (!text.empty()) {
        const LinearOrder order = affine ? parse_affine_order(text, t->hom.ground()) : parse_order(text, m.ground());
        const SquarefreeMonomialIdeal ideal = affine ? initial_ideal(*t, order) : initial_ideal(m, order);
        const std::vector<ElementSet> comps = primary_decomposition(ideal);
        const std::vector<ElementSet> via =
            affine ? primary_decomposition_via_activities(*t, order) : primary_decomposition_via_activities(m, order);
        r["order"] = order_json(order);
        r["initial_ideal"] = ideal_json(ideal);
        r["components"] = components_json(comps);
        r["multidegree"] = multidegree_json(multidegree(ideal));
        r["bidegree"] = bidegree_json(bidegree(ideal));
        Json checks = {{"components_from_activities", ctx.check(comps == via)}};
        if (!affine) checks["multidegree_is_bases_sum"] = ctx.check(multidegree(ideal) == bases_multidegree(m));
        r["checks"] = checks;
        return r;
    }
    const InitialIdealCensus c = affine ? enumerate_initial_ideals(*t, ctx.jobs, ctx.affine_cutoff())
                                        : enumerate_initial_ideals(m, ctx.jobs, ctx.linear_cutoff());
    r["count"] = c.count();
    r["bound"] = c.bound;
    r["orders_swept"] = c.orders_swept;
    if (!ctx.opt.count) {
        Json list = Json::array();
        for (std::size_t i = 0; i < c.count(); ++i)
            list.push_back({{"witness_order", order_json(c.witnesses[i])}, {"ideal", c.ideals[i].to_string()}});
        r["ideals"] = list;
    }
    return r;
}

Json betti(Context& ctx, const Input& in) {
    reject_b(in, "betti");
    const Matroid m = in.matroid();
    const LinearOrder order = parse_order(order_text(ctx.opt), m.ground());
    const SquarefreeMonomialIdeal ideal = initial_ideal(m, order);
    const BettiTable fine = hochster_betti(ideal, HochsterStrategy::Auto, ctx.jobs);
    const BettiTable predicted = betti_from_mobius(m);
    const std::optional<BettiTable> coarse = fine.coarsened();
    const CohenMacaulayReport cm = is_cohen_macaulay(ideal, fine);
    Json r;
    r["order"] = order_json(order);
    r["initial_ideal"] = ideal_json(ideal);
    r["mobius_prediction"] = betti_json(predicted, true);
    r["hochster"] = betti_json(fine, false);
    r["totals"] = fine.totals();
    r["graded"] = fine.graded();
    r["projdim"] = cm.projdim;
    r["codim"] = cm.codim;
    r["checks"] = {{"prediction_matches", ctx.check(coarse && *coarse == predicted)},
                   {"cohen_macaulay", ctx.check(cm.cohen_macaulay)}};

    if (m.size() <= ctx.linear_cutoff()) {
        const InitialIdealCensus c = enumerate_initial_ideals(m, ctx.jobs, ctx.linear_cutoff());
        struct Verdict {
            bool matches = false, cm = false;
        };
        const auto verdicts = parallel_map<Verdict>(c.count(), ctx.jobs, [&](std::size_t i) {
            const BettiTable b = hochster_betti(c.ideals[i]);
            const auto cb = b.coarsened();
            return Verdict{cb && *cb == predicted, is_cohen_macaulay(c.ideals[i], b).cohen_macaulay};
        });
        const bool all_match = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.matches; });
        const bool all_cm = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.cm; });
        r["all_initial_ideals"] = {{"count", c.count()},
                                   {"prediction_matches", ctx.check(all_match)},
                                   {"cohen_macaulay", ctx.check(all_cm)}};
    } else {
        r["all_initial_ideals"] = {{"skipped", "n = " + std::to_string(m.size()) + " exceeds the sweep cutoff " +
                                                   std::to_string(ctx.linear_cutoff())}};
    }

    const auto in_dual = reduced_homology(independence_complex(m.dual()));
    const std::int64_t mu = m.flat_lattice().mobius_top.front();
    Json bj = {{"reduced_homology", homology_json(in_dual)}, {"abs_mobius", mu < 0 ? -mu : mu}};
    if (m.loops().empty()) {
        const int top = m.size() - m.rank() - 1;
        bool concentrated = true;
        for (const auto& [d, rk] : in_dual)
            if (rk != 0 && d != top) concentrated = false;
        const auto it = in_dual.find(top);
        const std::int64_t top_rank = it == in_dual.end() ? 0 : it->second;
        bj["concentrated_with_abs_mobius_rank"] = ctx.check(concentrated && top_rank == (mu < 0 ? -mu : mu));
    }
    r["independence_complex_of_dual"] = bj;
    r["external_activity_complex"] = {
        {"reduced_homology", homology_json(reduced_homology(external_activity_complex(m, order)))}};
    return r;
}

Json polytope(Context& ctx, const Input& in) {
    reject_b(in, "polytope");
    const Matroid m = in.matroid();
    if (m.size() > ctx.linear_cutoff())
        throw CutoffExceeded(std::to_string(m.size()) + " elements exceed the order-sweep cutoff of " +
                             std::to_string(ctx.linear_cutoff()));
    const GenPermutahedron p = cocircuit_polytope(m, ctx.jobs);
    const InitialIdealCensus c = enumerate_initial_ideals(m, ctx.jobs, ctx.linear_cutoff());
    bool hrep = true, supports = true;
    for (const Point& v : p.vertices) {
        hrep = hrep && satisfies_hrep(p, v);
        ElementSet support;
        std::size_t i = 0;
        for (int e : p.ground) {
            if (v[i++] != 0) support = support.with(e);
        }
        supports = supports && m.is_basis(support);
    }
    const SubmodularityWitness w = summand_check(m);
    Json r;
    r["vertex_count"] = p.vertices.size();
    r["dimension"] = dimension(p);
    r["coordinate_sum"] = to_json(p.z_of(p.ground));
    r["initial_ideal_count"] = c.count();
    r["bound"] = c.bound;
    r["bound_gap"] = c.bound - p.vertices.size();
    Json summand = {{"holds", ctx.check(w.holds)}};
    if (!w.holds) summand["witness"] = {{"S", to_json(w.s)}, {"a", w.a}, {"b", w.b}};
    r["checks"] = {{"vertices_satisfy_hrep", ctx.check(hrep)},
                   {"vertex_supports_are_bases", ctx.check(supports)},
                   {"vertices_match_initial_ideals", ctx.check(p.vertices.size() == c.count())},
                   {"matroid_polytope_summand", summand}};
    r["polytope"] = polytope_json(p);
    return r;
}

Json tutte_cmd(Context& ctx, const Input& in) {
    reject_b(in, "tutte");
    const Matroid m = in.matroid();
    const LinearOrder order = parse_order(ctx.opt.order, m.ground());
    const BivarPoly t = tutte(m);
    const BivarPoly a = tutte_via_activities(m, order);
    Json acts = Json::array();
    for (ElementSet b : m.bases()) {
        const ActivitySplit s = activity_split(m, b, order);
        acts.push_back({{"basis", to_json(b)},
                        {"internally_active", to_json(s.internally_active)},
                        {"internally_passive", to_json(s.internally_passive)},
                        {"externally_active", to_json(s.externally_active)},
                        {"externally_passive", to_json(s.externally_passive)}});
    }
    Json r;
    r["order"] = order_json(order);
    r["tutte"] = poly_json(t);
    r["activity_form"] = poly_json(a);
    r["h_polynomial"] = poly_json(h_polynomial(m));
    r["checks"] = {{"activity_form_matches", ctx.check(t == a)}};
    r["activities"] = acts;
    return r;
}

Json family_json(const AffineFamily& f) {
    Json degs = Json::array();
    for (const auto& p : f.bidegrees) degs.push_back(display_bivar(p, "s", "t"));
    return {{"orders", f.orders}, {"distinct_ideals", f.distinct_ideals}, {"bidegrees", degs}};
}

Json affine(Context& ctx, const Input& in) {
    if (!in.matrix || in.b.empty()) throw InputError("'affine' needs --matrix and a right-hand side (--b or \"b\")");
    const MatroidTriple t = MatroidTriple::from_system(*in.matrix, in.b);
    Json r;
    r["triple"] = {{"hom", matroid_summary(t.hom)},
                   {"hom_cocircuits", to_json(t.hom.cocircuits())},
                   {"m", matroid_summary(t.m)},
                   {"m_prime", matroid_summary(t.m_prime)},
                   {"morphism", t.is_morphism()}};
    const InitialIdealCensus ca = enumerate_initial_ideals(t, ctx.jobs, ctx.affine_cutoff());
    const InitialIdealCensus ch = enumerate_initial_ideals(t.hom, ctx.jobs, ctx.linear_cutoff());
    r["counts"] = {{"affine", {{"count", ca.count()}, {"bound", ca.bound}}},
                   {"homogenized", {{"count", ch.count()}, {"bound", ch.bound}}}};
    if (ctx.opt.count) return r;

    const LinearOrder order = parse_affine_order(order_text(ctx.opt), t.hom.ground());
    const LinearOrder on_m = order.restricted(t.m.ground());
    const TrivarPoly lv = lasvergnas_tutte(t);
    const TrivarPoly lva = lasvergnas_via_activities(t, on_m);
    const AffineBidegrees closed = affine_bidegrees(t);
    const AffineFamilyCensus fam = affine_family_bidegrees(t, ctx.jobs, ctx.affine_cutoff());
    const SquarefreeMonomialIdeal ideal = initial_ideal(t, order);
    const std::vector<ElementSet> comps = primary_decomposition(ideal);

    r["lasvergnas"] = poly_json(lv);
    r["lasvergnas_activity_form"] = poly_json(lva);
    r["bidegree_0_last"] = bidegree_json(closed.top);
    r["bidegree_0_first"] = bidegree_json(closed.bottom);
    r["families"] = {{"zero_first", family_json(fam.zero_first)},
                     {"zero_last", family_json(fam.zero_last)},
                     {"intermediate", family_json(fam.intermediate)}};
    r["order"] = order_json(order);
    r["initial_ideal"] = ideal_json(ideal);
    r["components"] = components_json(comps);
    r["bidegree"] = bidegree_json(bidegree(ideal));
    const auto single = [](const AffineFamily& f, const BivarPoly& p) {
        return f.bidegrees.size() == 1 && f.bidegrees.front() == p;
    };
    r["checks"] = {{"lasvergnas_activity_form_matches", ctx.check(lv == lva)},
                   {"zero_last_family_bidegree", ctx.check(single(fam.zero_last, closed.top))},
                   {"zero_first_family_bidegree", ctx.check(single(fam.zero_first, closed.bottom))},
                   {"components_from_activities",
                    ctx.check(comps == primary_decomposition_via_activities(t, order))}};
    return r;
}

Json error_object(const std::string& kind, const std::string& message, int code) {
    return {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
}

std::size_t resolve_jobs(const Options& o, const char* env) {
    if (env && *env) {
        const std::string s(env);
        if (s.find_first_not_of("0123456789") != std::string::npos || std::stoul(s) == 0)
            throw InputError("MATLIN_JOBS must be a positive integer");
        return std::stoul(s);
    }
    if (o.jobs > 0) return o.jobs;
    return default_jobs();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << text;
}

std::string format_selftest_text(const Json& report) {
    std::ostringstream os;
    for (const auto& c : report["checks"]) os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
    os << "selftest: " << report["passed"].get<int>() << "/" << report["total"].get<int>() << " checks passed\n";
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_jobs) {
    Options o;
    CLI::App app{"Matroid invariants and initial ideals of linear and affine spaces in (P^1)^n", "matlin"};
    app.footer(exit_code_help);
    app.require_subcommand(1);
    app.fallthrough();
    auto* matrix = app.add_option("--matrix", o.matrix, "JSON file {\"matrix\": [[...]], \"b\": [...]?}");
    auto* bases = app.add_option("--bases", o.bases, "JSON file {\"n\": N, \"bases\": [[...]]}");
    matrix->excludes(bases);
    app.add_option("--b", o.b, "right-hand side of A x = b as CSV of rationals");
    app.add_option("--order", o.order, "element order as CSV, smallest first");
    app.add_option("--show", o.show, "show the initial ideal for this order (CSV)");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)")->check(CLI::PositiveNumber);
    app.add_flag("--count", o.count, "only count initial ideals");
    app.add_option("--out", o.out, "write the report to FILE instead of stdout");
    app.add_option("--unsafe-cutoff", o.cutoff, "raise the order-sweep cutoff (defaults: 8 linear, 7 affine)")
        ->check(CLI::Range(1, Matroid::max_label));

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"analyze", "bases, circuits, cocircuits, flats with Mobius values, f- and h-vectors, Tutte polynomial"},
        {"ideal", "homogenized cocircuits, their initial ideal, Groebner verification"},
        {"initial-ideals", "enumerate or count initial ideals, or show one order with its decomposition"},
        {"betti", "Mobius prediction, Hochster computation and Cohen-Macaulay check"},
        {"polytope", "cocircuit polytope: H-representation, vertices, dimension, summand check"},
        {"tutte", "Tutte polynomial and its activity form"},
        {"affine", "matroid triple, Las Vergnas polynomial, bidegrees, initial ideal counts"},
        {"selftest", "golden checks on the built-in example"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);

    std::vector<std::string> argv_store = {"matlin"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        out << error_object("UsageError", e.what(), exit_usage).dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    const auto fail = [&](const std::string& kind, const std::string& message, int code, Json extra = Json()) {
        Json e = error_object(kind, message, code);
        if (!extra.is_null()) e["error"]["witness"] = extra;
        out << e.dump(2) << "\n";
        err << "error: " << kind << ": " << message << "\n";
        return code;
    };

    try {
        Context ctx{o, resolve_jobs(o, env_jobs)};
        Json report;
        std::string text;
        if (command == "selftest") {
            SelftestResult st = selftest(ctx.jobs);
            ctx.check(st.passed);
            report = std::move(st.report);
            text = o.format == "json" ? report.dump(2) + "\n" : format_selftest_text(report);
        } else {
            const Input in = load_input(o);
            report["command"] = command;
            report["input_sha256"] = sha256_hex(in.canonical().dump());
            Json body;
            if (command == "analyze") body = analyze(ctx, in);
            else if (command == "ideal") body = ideal_cmd(ctx, in);
            else if (command == "initial-ideals") body = initial_ideals(ctx, in);
            else if (command == "betti") body = betti(ctx, in);
            else if (command == "polytope") body = polytope(ctx, in);
            else if (command == "tutte") body = tutte_cmd(ctx, in);
            else body = affine(ctx, in);
            for (auto& [k, v] : body.items()) report[k] = v;
            report["verified"] = ctx.verified;
            text = o.format == "json" ? report.dump(2) + "\n" : render_text(report);
        }
        emit(o, text, out);
        return ctx.verified ? exit_ok : exit_verification;
    } catch (const InputError& e) {
        return fail(e.kind(), e.what(), exit_usage);
    } catch (const CutoffExceeded& e) {
        return fail(e.kind(), e.what(), exit_cutoff);
    } catch (const AxiomViolation& e) {
        return fail(e.kind(), e.what(), exit_axiom,
                    {{"first", to_json(e.first)}, {"second", to_json(e.second)}, {"element", e.element}});
    } catch (const MatlinError& e) {
        return fail(e.kind(), e.what(), exit_invalid_input);
    } catch (const std::invalid_argument& e) {
        return fail("InvalidArgument", e.what(), exit_invalid_input);
    } catch (const std::out_of_range& e) {
        return fail("InternalError", e.what(), exit_internal);
    } catch (const std::logic_error& e) {
        return fail("VerificationFailed", e.what(), exit_verification);
    } catch (const std::exception& e) {
        return fail("InternalError", e.what(), exit_internal);
    }
}

}  // namespace matlin::cli
