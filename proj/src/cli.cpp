#include "lbhopf/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "lbhopf/bell.hpp"
#include "lbhopf/grafting.hpp"
#include "lbhopf/hn.hpp"
#include "lbhopf/lbseries.hpp"
#include "lbhopf/numint.hpp"
#include "lbhopf/serialize.hpp"
#include "lbhopf/word.hpp"
#include "lbhopf/wordhopf.hpp"

namespace lbhopf::cli {

namespace {

const char* const help_footer = R"(Forest grammar:
  forest := "" | tree (" " tree)*      tree := label [ "[" forest "]" ]
  e.g. "o[o o[o]] o" is a two-tree forest with five nodes. The default color
  set is {o}; --colors o,x declares more. The empty forest prints as 1.
Words: "abc" is three one-character letters; "x1.x2" splits on dots.
  Letters default to the characters of the arguments, each of grading 1;
  --letters a:1,b:2 sets them explicitly.
Series JSON:
  {"trunc": N, "type": "type1|type2|type3", "colors": ["o"],
   "terms": [["o[o]", "1/2"], ...]}     ("type" and "colors" optional)
Tensor JSON: {"terms": [["left", "right", "p/q"], ...]}
Substitution JSON: {"o": [["o", "2"], ["o[o]", "1"]], ...}
Arguments starting with '{' or '[' are read as inline JSON, "-" reads stdin,
anything else names a file.
Exit status: 0 success, 1 domain error, 2 usage error.
Environment: LBHOPF_COLOR=never|auto (auto colors diagnostics on a terminal).)";

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json read_json_arg(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(arg);
        if (!in) throw DomainError("cannot open '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Alphabet alphabet_for(const std::string& letters, const std::vector<std::string>& words) {
    if (!letters.empty()) return Alphabet::parse_list(letters);
    std::set<std::string> seen;
    for (const std::string& w : words) {
        if (w == "1") continue;
        if (w.find('.') != std::string::npos) {
            std::stringstream ss(w);
            std::string tok;
            while (std::getline(ss, tok, '.')) seen.insert(tok);
        } else {
            for (char ch : w) seen.insert(std::string(1, ch));
        }
    }
    return Alphabet(std::vector<std::string>(seen.begin(), seen.end()));
}

// Shared state of every subcommand; each handler reads what it registered.
struct Options {
    std::string colors = "o";
    std::string letters;
    bool forests = false;
    bool json = false;
    std::string hopf = "sh";
    int trunc = 5;
    std::vector<std::string> args;
    std::string series;
    std::string map;
    std::string to;
    std::string from;
    bool trees_only = false;
    std::string method = "rkmk4";
    std::string problem = "sphere";
    double h = 0.01;
    double T = 1.0;
    std::vector<std::string> methods;
    int hmax_exp = 3;
    int hmin_exp = 8;
    std::string format = "csv";
};

class Runner {
public:
    Runner(Options& o, std::ostream& out) : o_(o), out_(out) {}

    ColorSet colors() const { return ColorSet::parse_list(o_.colors); }

    void print_forests(const DPoly& p) const {
        if (o_.json)
            out_ << poly_to_json(p, colors()).dump() << "\n";
        else
            out_ << format_forests(p, colors()) << "\n";
    }

    void print_forest_tensor(const TensorComb<Forest>& t) const {
        const ColorSet cs = colors();
        if (o_.json)
            out_ << tensor_to_json(t, cs).dump() << "\n";
        else
            out_ << format_tensor(t, [&cs](const Forest& f) { return to_string(f, cs); }) << "\n";
    }

    void print_series(const ForestSeries& s, std::optional<SeriesKind> kind = std::nullopt,
                      const ColorSet& cs = ColorSet()) const {
        if (o_.json)
            out_ << series_to_json(s, cs, kind).dump() << "\n";
        else
            out_ << format_forests(s.to_lincomb(), cs) << "\n";
    }
    void print_series(const LBSeries& s) const { print_series(s.data(), s.kind(), s.colors()); }

    // parse
    void parse() const {
        const Forest f = parse_forest(o_.args.at(0), colors());
        if (o_.json) {
            out_ << to_json(f).dump() << "\n";
            return;
        }
        out_ << (f.empty() ? "1" : to_string(f, colors())) << "\n";
        out_ << "degree " << f.degree() << "\n";
        out_ << "trees " << f.length() << "\n";
    }

    void enumerate() const {
        const auto n = static_cast<std::size_t>(std::stoul(o_.args.at(0)));
        const ColorSet cs = colors();
        if (o_.trees_only) {
            for (const Tree& t : enumerate_trees(n, cs)) out_ << to_string(t, cs) << "\n";
        } else {
            for (const Forest& f : enumerate_forests(n, cs)) out_ << (f.empty() ? "1" : to_string(f, cs)) << "\n";
        }
    }

    void symmetrize_cmd() const { print_forests(symmetrize(parse_forest(o_.args.at(0), colors()))); }

    void sigma_cmd() const { out_ << sigma(parse_forest(o_.args.at(0), colors())) << "\n"; }

    void equivalent_cmd() const {
        const ColorSet cs = colors();
        out_ << (equivalent(parse_forest(o_.args.at(0), cs), parse_forest(o_.args.at(1), cs)) ? "true" : "false") << "\n";
    }

    // Word-level operations on either letter words or forests.
    template <class F>
    void on_words(F&& f) const {
        if (o_.forests || o_.hopf == "hn") {
            const ColorSet cs = colors();
            std::vector<Forest> ws;
            for (const auto& a : o_.args) ws.push_back(a == "1" ? Forest() : parse_forest(a, cs));
            f(ws, [cs](const Forest& w) { return to_string(w, cs); }, forest_basis(cs));
        } else {
            const Alphabet al = alphabet_for(o_.letters, o_.args);
            std::vector<Word> ws;
            for (const auto& a : o_.args) ws.push_back(parse_word(a, al));
            f(ws, [al](const Word& w) { return to_string(w, al); }, word_basis(al));
        }
    }

    template <class W, class P>
    void print_poly(const LinComb<W>& p, P&& printer) const {
        if (o_.json) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [w, c] : p) terms.push_back({printer(w), c.str()});
            out_ << terms.dump() << "\n";
        } else {
            out_ << format_lincomb(p, printer) << "\n";
        }
    }

    template <class W, class P>
    void print_tensor(const TensorComb<W>& t, P&& printer) const {
        if (o_.json) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [lr, c] : t) terms.push_back({printer(lr.first), printer(lr.second), c.str()});
            out_ << nlohmann::json{{"terms", terms}}.dump() << "\n";
        } else {
            out_ << format_tensor(t, printer) << "\n";
        }
    }

    void shuffle_cmd() const {
        on_words([&](const auto& ws, auto printer, auto) {
            if (ws.size() != 2) throw DomainError("shuffle takes two words");
            print_poly(shuffle(ws[0], ws[1]), printer);
        });
    }

    void deconcat_cmd() const {
        on_words([&](const auto& ws, auto printer, auto) { print_tensor(deconcat(ws.at(0)), printer); });
    }

    void deshuffle_cmd() const {
        on_words([&](const auto& ws, auto printer, auto) { print_tensor(deshuffle(ws.at(0)), printer); });
    }

    // Dispatches on --hopf with the structure built over the chosen basis.
    template <class F>
    void with_hopf(F&& f) const {
        on_words([&](const auto& ws, auto printer, auto basis) {
            using W = typename std::decay_t<decltype(ws)>::value_type;
            if (o_.hopf == "sh") {
                f(ShuffleHopf<W>{basis}, ws, printer);
            } else if (o_.hopf == "concat") {
                f(ConcatHopf<W>{basis}, ws, printer);
            } else if (o_.hopf == "hn") {
                if constexpr (std::is_same_v<W, Forest>)
                    f(HNHopf(colors()), ws, printer);
                else
                    throw DomainError("--hopf hn works on forests");
            } else {
                throw DomainError("unknown --hopf '" + o_.hopf + "' (expected sh, concat or hn)");
            }
        });
    }

    void coproduct_cmd() const {
        with_hopf([&](const auto& h, const auto& ws, auto printer) { print_tensor(h.coproduct(ws.at(0)), printer); });
    }

    void antipode_cmd() const {
        with_hopf([&](const auto& h, const auto& ws, auto printer) { print_poly(h.antipode(ws.at(0)), printer); });
    }

    void euler_cmd() const {
        with_hopf([&](const auto& h, const auto& ws, auto printer) {
            const auto& w = ws.at(0);
            print_poly(eulerian_idempotent(h, static_cast<int>(w.degree()))(w), printer);
        });
    }

    void dynkin_cmd() const {
        with_hopf([&](const auto& h, const auto& ws, auto printer) {
            const auto& w = ws.at(0);
            print_poly(dynkin(h, static_cast<int>(w.degree()))(w), printer);
        });
    }

    void gamma_cmd() const {
        const SeriesDocument doc = series_from_json(read_json_arg(o_.series));
        ForestSeries g(doc.series.trunc());
        if (o_.hopf == "hn")
            g = gamma(HNHopf(doc.colors), doc.series);
        else if (o_.hopf == "sh")
            g = gamma(shuffle_ot(doc.colors), doc.series);
        else
            throw DomainError("gamma needs a commutative structure: --hopf sh or hn");
        print_series(g, std::nullopt, doc.colors);
    }

    void graft_cmd() const {
        const ColorSet cs = colors();
        print_forests(left_graft(parse_forest(o_.args.at(0), cs), parse_forest(o_.args.at(1), cs)));
    }

    void glprod_cmd() const {
        const ColorSet cs = colors();
        print_forests(gl_product(parse_forest(o_.args.at(0), cs), parse_forest(o_.args.at(1), cs)));
    }

    static int int_arg(const std::string& s, const char* what) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw DomainError(std::string(what) + " must be an integer, got '" + s + "'");
        return v;
    }

    void bell_cmd() const {
        const int n = int_arg(o_.args.at(0), "n");
        if (o_.args.size() > 1)
            out_ << format_bell(partial_bell(n, int_arg(o_.args[1], "k"))) << "\n";
        else
            out_ << format_bell(bell(n)) << "\n";
    }

    void qpoly_cmd() const {
        const int n = int_arg(o_.args.at(0), "n");
        if (n < 0) throw DomainError("n must be non-negative");
        if (o_.args.size() > 1)
            out_ << format_bell(q_poly(n, int_arg(o_.args[1], "k"))) << "\n";
        else
            out_ << format_bell(q_full(n)) << "\n";
    }

    void fdb_cmd() const { out_ << format_bell(fdb_coproduct(parse_bell_word(o_.args.at(0)))) << "\n"; }

    void kappa_cmd() const { out_ << kappa(parse_bell_word(o_.args.at(0))) << "\n"; }

    void exact_cmd() const {
        const int n = o_.args.empty() ? o_.trunc : int_arg(o_.args[0], "N");
        print_series(exact_solution(n));
    }

    void euler_series_cmd() const { print_series(euler_method_series(o_.trunc)); }

    std::optional<SeriesKind> from_kind() const {
        if (o_.from.empty()) return std::nullopt;
        return parse_series_kind(o_.from);
    }

    void convert_cmd() const {
        print_series(convert(lbseries_from_json(read_json_arg(o_.series), from_kind()), parse_series_kind(o_.to)));
    }

    void compose_cmd() const {
        const LBSeries a = lbseries_from_json(read_json_arg(o_.args.at(0)), SeriesKind::Type3);
        const LBSeries b = lbseries_from_json(read_json_arg(o_.args.at(1)), SeriesKind::Type3);
        print_series(compose_type3(a, b));
    }

    void invert_cmd() const {
        print_series(inverse_type3(lbseries_from_json(read_json_arg(o_.args.at(0)), SeriesKind::Type3)));
    }

    void backward_cmd() const {
        print_series(backward_error(lbseries_from_json(read_json_arg(o_.args.at(0)), SeriesKind::Type3)));
    }

    void substitute_cmd() const {
        const ColorSet cs = colors();
        const Substitution sub(substitution_from_json(read_json_arg(o_.map), cs), cs);
        if (!o_.series.empty()) {
            const SeriesDocument doc = series_from_json(read_json_arg(o_.series));
            if (!(doc.colors == cs)) throw DomainError("series colors differ from --colors");
            const DPoly img = sub.apply_truncated(doc.series.to_lincomb(), doc.series.trunc());
            print_series(ForestSeries::from_lincomb(img, doc.series.trunc()), std::nullopt, cs);
            return;
        }
        print_forests(sub(parse_forest(o_.args.at(0), cs)));
    }

    template <class State, class Alg>
    void write_trajectory(const numint::ActionProblem<State, Alg>& p, numint::Method m,
                          const std::vector<std::string>& state_names) const {
        using numint::TrajectoryPoint;
        bool header = false;
        numint::integrate(p, m, o_.h, o_.T, [&](const TrajectoryPoint<State>& pt) {
            if (!header) {
                out_ << "t";
                for (const auto& s : state_names) out_ << "," << s;
                for (const auto& [name, v] : pt.diagnostics) out_ << "," << name;
                out_ << "\n";
                header = true;
            }
            out_ << fmt_double(pt.t);
            for (Eigen::Index i = 0; i < pt.y.size(); ++i) out_ << "," << fmt_double(pt.y.data()[i]);
            for (const auto& [name, v] : pt.diagnostics) out_ << "," << fmt_double(v);
            out_ << "\n";
        });
    }

    void integrate_cmd() const {
        const numint::Method m = numint::parse_method(o_.method);
        if (o_.problem == "sphere") {
            write_trajectory(numint::sphere_problem(), m, {"y1", "y2", "y3"});
        } else if (o_.problem == "rotation") {
            write_trajectory(numint::rotation_problem(numint::Vec3(0.3, -0.2, 1.0), numint::Vec3(1, 0, 0)), m,
                             {"y1", "y2", "y3"});
        } else if (o_.problem == "isospectral") {
            const auto p = numint::isospectral_problem(numint::default_isospectral_initial());
            std::vector<std::string> names;
            // Eigen stores column-major; name entries accordingly.
            for (int j = 1; j <= 3; ++j)
                for (int i = 1; i <= 3; ++i) names.push_back("y" + std::to_string(i) + std::to_string(j));
            write_trajectory(p, m, names);
        } else if (o_.problem == "rn") {
            write_trajectory(numint::default_translation_problem(), m, {"y1", "y2", "y3"});
        } else {
            throw DomainError("unknown problem '" + o_.problem + "' (expected sphere, rotation, isospectral or rn)");
        }
    }

    template <class State, class Alg>
    std::vector<numint::ConvergenceResult> sweep(const numint::ActionProblem<State, Alg>& p) const {
        std::vector<numint::Method> ms;
        if (o_.methods.empty() || (o_.methods.size() == 1 && o_.methods[0] == "all"))
            ms = numint::all_methods();
        else
            for (const auto& s : o_.methods) ms.push_back(numint::parse_method(s));
        const auto hs = numint::geometric_steps(o_.hmax_exp, o_.hmin_exp);
        std::vector<numint::ConvergenceResult> out;
        for (numint::Method m : ms) out.push_back(numint::convergence_order(p, m, hs, o_.T));
        return out;
    }

    void convergence_cmd() const {
        std::vector<numint::ConvergenceResult> rs;
        if (o_.problem == "sphere")
            rs = sweep(numint::sphere_problem());
        else if (o_.problem == "rotation")
            rs = sweep(numint::rotation_problem(numint::Vec3(0.3, -0.2, 1.0), numint::Vec3(1, 0, 0)));
        else if (o_.problem == "isospectral")
            rs = sweep(numint::isospectral_problem(numint::default_isospectral_initial()));
        else if (o_.problem == "rn")
            rs = sweep(numint::default_translation_problem());
        else
            throw DomainError("unknown problem '" + o_.problem + "'");
        if (o_.format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rs)
                arr.push_back({{"method", numint::to_string(r.method)},
                               {"nominal_order", numint::nominal_order(r.method)},
                               {"slope", r.slope},
                               {"h", r.h},
                               {"error", r.error}});
            out_ << arr.dump(2) << "\n";
        } else if (o_.format == "csv") {
            out_ << "method,nominal_order,slope\n";
            for (const auto& r : rs)
                out_ << numint::to_string(r.method) << "," << numint::nominal_order(r.method) << "," << fmt_double(r.slope)
                     << "\n";
        } else {
            throw DomainError("unknown --format '" + o_.format + "' (expected csv or json)");
        }
    }

private:
    Options& o_;
    std::ostream& out_;
};

bool color_enabled(std::ostream& err) {
    const char* env = std::getenv("LBHOPF_COLOR");
    const std::string mode = env ? env : "auto";
    if (mode == "never") return false;
    return &err == &std::cerr && isatty(STDERR_FILENO);
}

void report(std::ostream& err, const std::string& msg) {
    if (color_enabled(err))
        err << "\033[31merror:\033[0m " << msg << "\n";
    else
        err << "error: " << msg << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* env = std::getenv("LBHOPF_COLOR")) {
        const std::string mode = env;
        if (mode != "never" && mode != "auto") {
            err << "error: LBHOPF_COLOR must be never or auto\n";
            return usage_error;
        }
    }

    Options o;
    Runner r(o, out);
    CLI::App app{"Hopf algebras of planar forests, Lie-Butcher series and Lie group integrators", "lbhopf"};
    app.footer(help_footer);
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, std::function<void()>>> commands;
    auto add = [&](const char* name, const char* desc, std::function<void()> fn) {
        CLI::App* sub = app.add_subcommand(name, desc);
        commands.emplace_back(sub, std::move(fn));
        return sub;
    };
    auto forest_opts = [&](CLI::App* sub) {
        sub->add_option("--colors", o.colors, "comma separated color labels")->capture_default_str();
        sub->add_flag("--json", o.json, "JSON output");
    };
    auto word_opts = [&](CLI::App* sub) {
        forest_opts(sub);
        sub->add_option("--letters", o.letters, "alphabet, e.g. a,b or a:1,b:2");
        sub->add_flag("--forests", o.forests, "treat arguments as forests (words of trees)");
    };
    const std::vector<std::string> kinds{"type1", "type2", "type3", "1", "2", "3"};
    const std::vector<std::string> methods{"euler", "rkmk4", "cg3", "cf4"};
    const std::vector<std::string> problems{"sphere", "rotation", "isospectral", "rn"};
    auto hopf_opt = [&](CLI::App* sub) {
        sub->add_option("--hopf", o.hopf, "sh (shuffle/deconcatenation), concat (concatenation/deshuffle) or hn")
            ->capture_default_str()
            ->check(CLI::IsMember({"sh", "concat", "hn"}));
    };

    {
        auto* s = add("parse", "parse a forest and print its canonical form", [&] { r.parse(); });
        s->add_option("forest", o.args)->required()->expected(1);
        forest_opts(s);
    }
    {
        auto* s = add("enumerate", "list all forests with n nodes in canonical order", [&] { r.enumerate(); });
        s->add_option("n", o.args)->required()->expected(1);
        s->add_flag("--trees", o.trees_only, "only single trees");
        forest_opts(s);
    }
    {
        auto* s = add("symmetrize", "recursive symmetrization of a forest", [&] { r.symmetrize_cmd(); });
        s->add_option("forest", o.args)->required()->expected(1);
        forest_opts(s);
    }
    {
        auto* s = add("sigma", "symmetry factor of the underlying non-planar forest", [&] { r.sigma_cmd(); });
        s->add_option("forest", o.args)->required()->expected(1);
        forest_opts(s);
    }
    {
        auto* s = add("equivalent", "whether two forests have equal symmetrizations", [&] { r.equivalent_cmd(); });
        s->add_option("forests", o.args)->required()->expected(2);
        forest_opts(s);
    }
    {
        auto* s = add("shuffle", "shuffle product of two words", [&] { r.shuffle_cmd(); });
        s->add_option("words", o.args)->required()->expected(2);
        word_opts(s);
    }
    {
        auto* s = add("deconcat", "deconcatenation coproduct of a word", [&] { r.deconcat_cmd(); });
        s->add_option("word", o.args)->required()->expected(1);
        word_opts(s);
    }
    {
        auto* s = add("deshuffle", "deshuffle coproduct of a word", [&] { r.deshuffle_cmd(); });
        s->add_option("word", o.args)->required()->expected(1);
        word_opts(s);
    }
    {
        auto* s = add("coproduct", "coproduct of a basis element", [&] { r.coproduct_cmd(); });
        s->add_option("element", o.args)->required()->expected(1);
        word_opts(s);
        hopf_opt(s);
    }
    {
        auto* s = add("antipode", "antipode of a basis element", [&] { r.antipode_cmd(); });
        s->add_option("element", o.args)->required()->expected(1);
        word_opts(s);
        hopf_opt(s);
    }
    {
        auto* s = add("euler", "Eulerian idempotent applied to a basis element", [&] { r.euler_cmd(); });
        s->add_option("element", o.args)->required()->expected(1);
        word_opts(s);
        hopf_opt(s);
    }
    {
        auto* s = add("dynkin", "Dynkin operator S*Y applied to a basis element", [&] { r.dynkin_cmd(); });
        s->add_option("element", o.args)->required()->expected(1);
        word_opts(s);
        hopf_opt(s);
    }
    {
        auto* s = add("gamma", "inverse of right composition with the Dynkin operator", [&] { r.gamma_cmd(); });
        s->add_option("series", o.series, "series JSON (infinitesimal character)")->required();
        s->add_flag("--json", o.json, "JSON output");
        s->add_option("--hopf", o.hopf, "sh (shuffle over trees) or hn")
            ->capture_default_str()
            ->check(CLI::IsMember({"sh", "hn"}));
    }
    {
        auto* s = add("graft", "left grafting w[w']", [&] { r.graft_cmd(); });
        s->add_option("forests", o.args)->required()->expected(2);
        forest_opts(s);
    }
    {
        auto* s = add("glprod", "Grossman-Larson product", [&] { r.glprod_cmd(); });
        s->add_option("forests", o.args)->required()->expected(2);
        forest_opts(s);
    }
    {
        auto* s = add("bell", "non-commutative Bell polynomial B_n, or B_{n,k}", [&] { r.bell_cmd(); });
        s->add_option("n_k", o.args, "n [k]")->required()->expected(1, 2);
    }
    {
        auto* s = add("qpoly", "Q-polynomial Q_n, or Q_{n,k}", [&] { r.qpoly_cmd(); });
        s->add_option("n_k", o.args, "n [k]")->required()->expected(1, 2);
    }
    {
        auto* s = add("fdb-coproduct", "Faa di Bruno coproduct of a word d1.d2...", [&] { r.fdb_cmd(); });
        s->add_option("word", o.args)->required()->expected(1);
    }
    {
        auto* s = add("kappa", "kappa coefficient of a word d1.d2...", [&] { r.kappa_cmd(); });
        s->add_option("word", o.args)->required()->expected(1);
    }
    {
        auto* s = add("exact-series", "type3 series of the exact flow up to degree N", [&] { r.exact_cmd(); });
        s->add_option("N", o.args)->expected(0, 1);
        s->add_flag("--json", o.json, "JSON output");
    }
    {
        auto* s = add("euler-series", "type3 series of the exponential Euler method", [&] { r.euler_series_cmd(); });
        s->add_option("-N,--trunc", o.trunc, "truncation order")->capture_default_str();
        s->add_flag("--json", o.json, "JSON output");
    }
    {
        auto* s = add("convert", "convert a series between types 1, 2 and 3", [&] { r.convert_cmd(); });
        s->add_option("series", o.series, "series JSON")->required();
        s->add_option("--to", o.to, "type1, type2 or type3")->required()->check(CLI::IsMember(kinds));
        s->add_option("--from", o.from, "type of the input when the JSON has none")->check(CLI::IsMember(kinds));
        s->add_flag("--json", o.json, "JSON output");
    }
    {
        auto* s = add("compose", "composition of two type3 series", [&] { r.compose_cmd(); });
        s->add_option("series", o.args, "two series JSON")->required()->expected(2);
        s->add_flag("--json", o.json, "JSON output");
    }
    {
        auto* s = add("invert", "inverse of a type3 series", [&] { r.invert_cmd(); });
        s->add_option("series", o.args, "series JSON")->required()->expected(1);
        s->add_flag("--json", o.json, "JSON output");
    }
    {
        auto* s = add("backward-error", "modified field (type2) of a type3 series", [&] { r.backward_cmd(); });
        s->add_option("series", o.args, "series JSON")->required()->expected(1);
        s->add_flag("--json", o.json, "JSON output");
    }
    {
        auto* s = add("substitute", "apply a substitution to a forest or a series", [&] { r.substitute_cmd(); });
        s->add_option("--map", o.map, "substitution JSON")->required();
        s->add_option("--series", o.series, "series JSON (instead of a forest)");
        s->add_option("forest", o.args)->expected(0, 1);
        forest_opts(s);
    }
    {
        auto* s = add("integrate", "integrate a test problem, CSV output", [&] { r.integrate_cmd(); });
        // --h is the step size here, so help is long-form only.
        s->set_help_flag("--help", "Print this help message and exit");
        s->add_option("--method", o.method, "euler, rkmk4, cg3 or cf4")
            ->capture_default_str()
            ->check(CLI::IsMember(methods));
        s->add_option("--problem", o.problem, "sphere, rotation, isospectral or rn")
            ->capture_default_str()
            ->check(CLI::IsMember(problems));
        s->add_option("--h,--step", o.h, "step size")->capture_default_str();
        s->add_option("--T", o.T, "end time")->capture_default_str();
    }
    {
        auto* s = add("convergence", "measured convergence orders", [&] { r.convergence_cmd(); });
        s->add_option("--problem", o.problem, "sphere, rotation, isospectral or rn")
            ->capture_default_str()
            ->check(CLI::IsMember(problems));
        s->add_option("--method", o.methods, "methods to measure (default all)")->check(CLI::IsMember(methods));
        s->add_option("--T", o.T, "end time")->capture_default_str();
        s->add_option("--hmax-exp", o.hmax_exp, "largest step is 2^-hmax_exp")->capture_default_str();
        s->add_option("--hmin-exp", o.hmin_exp, "smallest step is 2^-hmin_exp")->capture_default_str();
        s->add_option("--format", o.format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        report(err, e.what());
        err << "run 'lbhopf --help' for usage\n";
        return usage_error;
    }

    for (const auto& [sub, fn] : commands) {
        if (!sub->parsed()) continue;
        try {
            fn();
            return ok;
        } catch (const std::exception& e) {
            report(err, e.what());
            return domain_error;
        }
    }
    return usage_error;
}

}  // namespace lbhopf::cli
