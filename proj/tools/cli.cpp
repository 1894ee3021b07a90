#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <variant>

#include "layoutalg/layoutalg.hpp"
#include "render.hpp"

namespace layoutalg::cli {

namespace {

using nlohmann::json;
using Value = std::variant<Layout, NestMorphism>;

struct Options {
    bool json = false;
    bool weak = false;
    bool verbose = false;
    bool tikz = false;
    int flatten_to = 0;
    std::string map;
    std::vector<std::string> args;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void expect_args(const Options& o, std::size_t lo, std::size_t hi, const char* verb) {
    if (o.args.size() < lo || o.args.size() > hi) {
        usage(std::string(verb) + ": wrong number of arguments");
    }
}

Value parse_value(const std::string& text) {
    if (text.find("-->") != std::string::npos) return parse_morphism(text);
    if (text.find(':') != std::string::npos) return parse_layout(text);
    usage("expected a layout S:D or a morphism S--(..)-->T, got '" + text + "'");
}

Layout parse_layout_arg(const std::string& text) {
    const Value v = parse_value(text);
    if (const auto* l = std::get_if<Layout>(&v)) return *l;
    throw Error(ErrorKind::InvalidArgument, "expected a layout, got a morphism");
}

NestMorphism parse_morphism_arg(const std::string& text) {
    const Value v = parse_value(text);
    if (const auto* f = std::get_if<NestMorphism>(&v)) return *f;
    throw Error(ErrorKind::InvalidArgument, "expected a morphism, got a layout");
}

Int parse_int_arg(const std::string& text) {
    const NestedTuple t = parse_tuple(text);
    if (!t.is_integer()) usage("expected an integer, got '" + text + "'");
    return t.value();
}

json to_json(const NestedTuple& t) {
    if (t.is_integer()) return t.value();
    json arr = json::array();
    for (const auto& m : t.modes()) arr.push_back(to_json(m));
    return arr;
}

json to_json(const Layout& l) { return {{"shape", to_json(l.shape())}, {"stride", to_json(l.stride())}}; }

json to_json(const NestMorphism& f) {
    return {{"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}, {"map", f.map()}};
}

class Emitter {
public:
    Emitter(const Options& o, std::ostream& out) : json_(o.json), out_(out) {}

    void value(const Value& v) {
        std::visit([this](const auto& x) { emit(to_json(x), to_string(x)); }, v);
    }
    void boolean(bool b) { emit(json{{"result", b}}, b ? "true" : "false"); }
    void integer(Int v) { emit(json{{"value", v}}, std::to_string(v)); }
    void emit(const json& j, const std::string& text) {
        if (json_) {
            out_ << j.dump() << '\n';
        } else {
            out_ << text << '\n';
        }
    }

private:
    bool json_;
    std::ostream& out_;
};

// ----------------------------------------------------------------- verbs

void do_coalesce(const Options& o, Emitter& e) {
    expect_args(o, 1, 1, "coalesce");
    const Value v = parse_value(o.args[0]);
    if (const auto* l = std::get_if<Layout>(&v)) {
        e.value(coalesce(*l));
    } else {
        e.value(coalesce_nm(std::get<NestMorphism>(v)));
    }
}

void do_coalesce_rel(const Options& o, Emitter& e) {
    expect_args(o, 2, 2, "coalesce-rel");
    e.value(coalesce_relative(parse_layout_arg(o.args[0]), parse_tuple(o.args[1])));
}

void do_complement(const Options& o, Emitter& e) {
    expect_args(o, 1, 2, "complement");
    const Value v = parse_value(o.args[0]);
    if (const auto* l = std::get_if<Layout>(&v)) {
        if (o.args.size() != 2) usage("complement: a layout needs the target size N");
        e.value(complement(*l, parse_int_arg(o.args[1])));
    } else {
        if (o.args.size() != 1) usage("complement: a morphism takes no size argument");
        e.value(complement_nm(std::get<NestMorphism>(v)));
    }
}

template <class LayoutOp, class MorphismOp>
void binary(const Options& o, Emitter& e, const char* verb, LayoutOp on_layouts,
            MorphismOp on_morphisms) {
    expect_args(o, 2, 2, verb);
    const Value a = parse_value(o.args[0]);
    const Value b = parse_value(o.args[1]);
    if (std::holds_alternative<Layout>(a) && std::holds_alternative<Layout>(b)) {
        e.value(on_layouts(std::get<Layout>(a), std::get<Layout>(b)));
    } else if (std::holds_alternative<NestMorphism>(a) && std::holds_alternative<NestMorphism>(b)) {
        e.value(on_morphisms(std::get<NestMorphism>(a), std::get<NestMorphism>(b)));
    } else {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(verb) + ": arguments must both be layouts or both be morphisms");
    }
}

void do_compose(const Options& o, Emitter& e, std::ostream& err) {
    binary(
        o, e, "compose",
        [&](const Layout& a, const Layout& b) {
            if (o.verbose && !is_non_degenerate(a)) {
                err << "note: strides of unit shape entries in the first layout were set to 0\n";
            }
            if (!o.weak) return compose(a, b);
            if (!is_tractable(a) || !is_tractable(b)) {
                throw Error(ErrorKind::NotTractable, "operands must be tractable");
            }
            const Layout an = make_non_degenerate(a);
            if (an.cosize() > b.size()) throw Error(ErrorKind::NotComposable, "cosize exceeds size");
            const auto c = compose_tractable(an, b);
            if (!c) throw Error(ErrorKind::NotComposable, "no mutual refinement exists");
            return *c;
        },
        [](const NestMorphism& f, const NestMorphism& g) { return compose_nested(f, g); });
}

void do_tractable(const Options& o, Emitter& e) {
    expect_args(o, 1, 1, "tractable");
    e.boolean(is_tractable(parse_layout_arg(o.args[0])));
}

void do_morphism(const Options& o, Emitter& e, std::ostream& err) {
    expect_args(o, 1, 1, "morphism");
    const NestMorphism f = standard_representation_nested(parse_layout_arg(o.args[0]));
    if (!has_standard_form(f)) err << "warning: degenerate layout; result is not in standard form\n";
    e.value(f);
}

void do_layout_of(const Options& o, Emitter& e) {
    expect_args(o, 1, 1, "layout-of");
    e.value(layout_of_nested(parse_morphism_arg(o.args[0])));
}

void do_mutual_refine(const Options& o, Emitter& e) {
    expect_args(o, 2, 2, "mutual-refine");
    const auto mr = mutual_refinement(parse_tuple(o.args[0]), parse_tuple(o.args[1]));
    if (!mr) {
        e.emit(json{{"result", nullptr}}, "none");
        return;
    }
    e.emit(json{{"t_refined", to_json(mr->t_ref.fine)}, {"u_refined", to_json(mr->u_ref.fine)}},
           to_string(mr->t_ref.fine) + " " + to_string(mr->u_ref.fine));
}

void do_render(const Options& o, Emitter& e) {
    expect_args(o, 1, 1, "render");
    Layout l = parse_layout_arg(o.args[0]);
    if (o.flatten_to != 0) {
        if (o.flatten_to != 2) usage("render: --flatten-to only supports 2");
        l = render::flatten_to_two(l);
    }
    const render::Grid g = render::grid_of(l);
    std::string text = o.tikz ? render::format_tikz(g) : render::format_text(g);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    e.emit(json{{"grid", g}}, text);
}

void do_eval(const Options& o, Emitter& e) {
    expect_args(o, 2, 2, "eval");
    const Value v = parse_value(o.args[0]);
    const Int x = parse_int_arg(o.args[1]);
    if (const auto* l = std::get_if<Layout>(&v)) {
        e.integer(eval(*l, x));
        return;
    }
    const auto& f = std::get<NestMorphism>(v);
    if (x < 0 || x >= f.domain().size()) throw Error(ErrorKind::OutOfRange, "index outside domain");
    e.integer(eval(layout_of(f.flat()), x));
}

void do_check(const Options& o, Emitter& e) {
    if (o.args.empty()) usage("check: expected compose, complement or equal");
    const std::string& kind = o.args[0];
    if (kind == "compose") {
        expect_args(o, 4, 4, "check compose");
        e.boolean(oracle::check_compose(parse_layout_arg(o.args[1]), parse_layout_arg(o.args[2]),
                                        parse_layout_arg(o.args[3])));
    } else if (kind == "complement") {
        expect_args(o, 4, 4, "check complement");
        e.boolean(oracle::check_complement(parse_layout_arg(o.args[1]), parse_layout_arg(o.args[2]),
                                           parse_int_arg(o.args[3])));
    } else if (kind == "equal") {
        expect_args(o, 3, 3, "check equal");
        e.boolean(oracle::functions_equal(parse_layout_arg(o.args[1]), parse_layout_arg(o.args[2])));
    } else {
        usage("check: unknown check '" + kind + "'");
    }
}

/// Folds `DOMAIN CODOMAIN --map a,b,..` into the arrow notation.
void apply_map_flag(Options& o) {
    if (o.map.empty()) return;
    if (o.args.size() < 2) usage("--map needs DOMAIN and CODOMAIN arguments");
    const NestedTuple dom = parse_tuple(o.args[0]);
    const NestedTuple cod = parse_tuple(o.args[1]);
    const std::string arrow = to_string(NestMorphism(dom, cod, parse_map(o.map)));
    o.args.erase(o.args.begin(), o.args.begin() + 2);
    o.args.insert(o.args.begin(), arrow);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Layout algebra calculator: shape:stride layouts and tuple morphisms", "layoutalg"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of canonical notation");

    struct Verb {
        const char* name;
        const char* help;
    };
    const std::vector<Verb> verbs = {
        {"coalesce", "Coalesce a layout or morphism"},
        {"coalesce-rel", "Coalesce a layout relative to a coarser shape: L SBAR"},
        {"complement", "Complement: layout L N, or morphism F"},
        {"compose", "Composition, first argument applied first: A B (gives B o A)"},
        {"divide", "Logical division: A B"},
        {"product", "Logical product: A B"},
        {"tractable", "Whether a layout is tractable"},
        {"morphism", "Standard representation of a tractable layout"},
        {"layout-of", "Layout encoded by a morphism"},
        {"mutual-refine", "Mutual refinement of two tuples: T U"},
        {"render", "Draw a layout of rank <= 2 as a grid"},
        {"eval", "Evaluate a layout or morphism at an index: X x"},
        {"check", "Oracle checks: compose A B C | complement A B N | equal A B"},
    };
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->fallthrough();
        sub->add_option("args", o.args, "Positional arguments");
        sub->add_option("--map", o.map, "Map values a1,..,am (0 = *) for DOMAIN CODOMAIN arguments");
        if (std::string(v.name) == "compose") {
            sub->add_flag("--weak", o.weak, "Print the weak composite before relative coalescing");
            sub->add_flag("--verbose", o.verbose, "Report input normalization");
        }
        if (std::string(v.name) == "render") {
            sub->add_flag("--tikz", o.tikz, "Emit a TikZ picture");
            sub->add_option("--flatten-to", o.flatten_to, "Regroup modes to this rank (2)");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    Emitter emit(o, out);
    try {
        apply_map_flag(o);
        if (verb == "coalesce") do_coalesce(o, emit);
        else if (verb == "coalesce-rel") do_coalesce_rel(o, emit);
        else if (verb == "complement") do_complement(o, emit);
        else if (verb == "compose") do_compose(o, emit, err);
        else if (verb == "divide") binary(o, emit, "divide", logical_divide, logical_divide_m);
        else if (verb == "product") binary(o, emit, "product", logical_product, logical_product_m);
        else if (verb == "tractable") do_tractable(o, emit);
        else if (verb == "morphism") do_morphism(o, emit, err);
        else if (verb == "layout-of") do_layout_of(o, emit);
        else if (verb == "mutual-refine") do_mutual_refine(o, emit);
        else if (verb == "render") do_render(o, emit);
        else if (verb == "eval") do_eval(o, emit);
        else if (verb == "check") do_check(o, emit);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::ParseError ? 2 : 1;
    }
    return 0;
}

}  // namespace layoutalg::cli
