#include "factcat/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "factcat/codec.hpp"
#include "factcat/divisibility.hpp"
#include "factcat/errors.hpp"
#include "factcat/monoidal.hpp"
#include "factcat/oracle.hpp"
#include "factcat/weq.hpp"

namespace factcat::cli {

namespace {

using codec::json;

struct Options {
    std::string monoid;
    bool json_out = false;
};

// "@path" reads the argument from a file.
std::string read_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Session {
public:
    Session(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

    MonoidHandle monoid() const {
        if (opts_.monoid.empty()) throw ParseError("--monoid is required");
        return make_monoid(opts_.monoid);
    }

    Morphism morphism(const std::string& arg) const {
        const auto j = codec::parse_json(read_arg(arg));
        return codec::decode_morphism(opts_.monoid.empty() ? nullptr : make_monoid(opts_.monoid), j);
    }

    FactorTuple tuple(const MonoidHandle& h, const std::string& arg) const {
        return codec::decode_tuple(h, codec::parse_json(read_arg(arg)));
    }

    Element element(const MonoidHandle& h, const std::string& arg) const {
        const auto text = read_arg(arg);
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error&) {
            j = text;  // bare strings such as 1/2 or a^2*b
        }
        return codec::decode_element(*h, j);
    }

    bool json_out() const { return opts_.json_out; }
    std::ostream& out() const { return out_; }

    void emit(const json& j) const { out_ << j.dump(2) << "\n"; }

private:
    const Options& opts_;
    std::ostream& out_;
};

std::string map_text(const IndexFunction& f) {
    std::string s = "[";
    const auto m = f.one_based();
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "]";
}

std::string elements_text(const Monoid& mon, const std::vector<Element>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + mon.format(xs[i]);
    return s + "]";
}

const char* tag_name(StepTag t) { return t == StepTag::WeakEquivalence ? "weq" : "weakly_irreducible"; }

std::vector<Element> parse_pool(const MonoidHandle& h, const std::string& text) {
    std::vector<Element> pool;
    const auto trimmed = text.find_first_not_of(' ') == std::string::npos ? std::string{} : text;
    if (!trimmed.empty() && trimmed.front() == '[') {
        const auto j = codec::parse_json(trimmed);
        if (!j.is_array()) throw ParseError("pool must be a list");
        for (const auto& e : j) pool.push_back(codec::decode_element(*h, e));
        return pool;
    }
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(' ') == std::string::npos) continue;
        pool.push_back(h->parse(item));
    }
    return pool;
}

// ------------------------------------------------------------ subcommands

int cmd_hom(const Session& s, const std::string& dom, const std::string& cod) {
    const auto h = s.monoid();
    const auto x = s.tuple(h, dom);
    const auto y = s.tuple(h, cod);
    const auto homs = hom_set(x, y);
    if (s.json_out()) {
        json j;
        j["monoid"] = h->name();
        j["domain"] = codec::encode_tuple(x);
        j["codomain"] = codec::encode_tuple(y);
        j["count"] = homs.size();
        j["maps"] = json::array();
        for (const auto& m : homs) j["maps"].push_back(m.index_fn().one_based());
        s.emit(j);
    } else {
        s.out() << "count: " << homs.size() << "\n";
        for (const auto& m : homs) s.out() << map_text(m.index_fn()) << "\n";
    }
    return kOk;
}

int emit_morphism(const Session& s, const Morphism& m) {
    if (s.json_out()) {
        s.emit(codec::encode_morphism(m));
    } else {
        s.out() << m.to_string() << "\n";
    }
    return kOk;
}

int cmd_check(const Session& s, const std::string& arg, const std::string& property) {
    const auto m = s.morphism(arg);
    const Monoid& mon = m.monoid();
    json j;
    j["property"] = property;
    bool value = false;
    std::string witness;
    if (property == "iso") {
        const auto units = isomorphism_units(m);
        value = units.has_value();
        j["value"] = value;
        if (units) {
            j["units"] = codec::encode_elements(mon, *units);
            j["inverse"] = codec::encode_morphism(*inverse(m));
            witness = "units=" + elements_text(mon, *units);
        }
    } else if (property == "epic" || property == "monic") {
        value = property == "epic" ? is_epic(m) : is_monic(m);
        j["value"] = value;
        j["map"] = m.index_fn().one_based();
        witness = std::string(property == "epic" ? "injective=" : "surjective=") + (value ? "true" : "false");
    } else {
        const auto qw = quotient_witnesses(m);
        if (property == "weq") value = is_weak_equivalence(m);
        if (property == "wirr") value = is_weakly_irreducible(m);
        if (property == "wprime") value = is_weakly_prime(m);
        j["value"] = value;
        j["r"] = codec::encode_element(mon, qw.total);
        j["r_n"] = codec::encode_elements(mon, qw.per_index);
        witness = "r=" + mon.format(qw.total);
    }
    if (s.json_out()) {
        s.emit(j);
    } else {
        s.out() << (value ? "true" : "false") << (witness.empty() ? "" : " " + witness) << "\n";
    }
    return value ? kOk : kFalse;
}

int cmd_decompose(const Session& s, const std::string& arg) {
    const auto m = s.morphism(arg);
    const Monoid& mon = m.monoid();
    const auto d = decompose_eip(m);
    if (s.json_out()) {
        json j;
        j["epsilon"] = codec::encode_morphism(d.epsilon);
        j["delta"] = codec::encode_morphism(d.delta);
        j["phi"] = codec::encode_morphism(d.phi);
        j["ratios"] = codec::encode_elements(mon, d.ratios);
        j["dropped_unit"] = codec::encode_element(mon, d.dropped_unit);
        s.emit(j);
    } else {
        s.out() << "epsilon: " << d.epsilon.to_string() << "\n"
                << "delta:   " << d.delta.to_string() << "\n"
                << "phi:     " << d.phi.to_string() << "\n"
                << "ratios:  " << elements_text(mon, d.ratios) << "\n"
                << "unit:    " << mon.format(d.dropped_unit) << "\n";
    }
    return kOk;
}

int cmd_chain(const Session& s, const std::string& arg) {
    const auto m = s.morphism(arg);
    const auto chain = atomic_chain(m);
    if (s.json_out()) {
        json j;
        j["irr_count"] = chain.irr_count;
        j["steps"] = json::array();
        for (std::size_t i = 0; i < chain.steps.size(); ++i) {
            json step;
            step["tag"] = tag_name(chain.tags[i]);
            step["morphism"] = codec::encode_morphism(chain.steps[i]);
            j["steps"].push_back(std::move(step));
        }
        s.emit(j);
    } else {
        for (std::size_t i = 0; i < chain.steps.size(); ++i) {
            s.out() << i + 1 << ". " << tag_name(chain.tags[i]) << "  " << chain.steps[i].to_string() << "\n";
        }
        s.out() << "irr_count: " << chain.irr_count << "\n";
    }
    return kOk;
}

int cmd_weakdiv(const Session& s, const std::string& fa, const std::string& ga, bool diagram) {
    const auto f = s.morphism(fa);
    const auto g = s.morphism(ga);
    const Monoid& mon = f.monoid();
    const auto wd = weak_divisibility(f, g);
    if (s.json_out()) {
        json j;
        j["divides"] = wd.divides;
        j["s"] = codec::encode_element(mon, wd.s);
        j["r"] = codec::encode_element(mon, wd.r);
        if (diagram && wd.divides) {
            const auto d = weak_div_diagram(f, g);
            json dj;
            dj["a"] = codec::encode_element(mon, d.a);
            dj["b"] = codec::encode_element(mon, d.b);
            dj["mu"] = codec::encode_morphism(d.mu);
            dj["alpha"] = codec::encode_morphism(d.alpha);
            dj["beta"] = codec::encode_morphism(d.beta);
            dj["eta"] = codec::encode_morphism(d.eta);
            dj["left"] = codec::encode_morphism(d.left);
            dj["right"] = codec::encode_morphism(d.right);
            j["diagram"] = std::move(dj);
        }
        s.emit(j);
    } else {
        s.out() << (wd.divides ? "true" : "false") << " s=" << mon.format(wd.s) << " r=" << mon.format(wd.r) << "\n";
        if (diagram && wd.divides) {
            const auto d = weak_div_diagram(f, g);
            s.out() << "a=" << mon.format(d.a) << " b=" << mon.format(d.b) << "\n"
                    << "mu:    " << d.mu.to_string() << "\n"
                    << "alpha: " << d.alpha.to_string() << "\n"
                    << "beta:  " << d.beta.to_string() << "\n"
                    << "eta:   " << d.eta.to_string() << "\n"
                    << "left:  " << d.left.to_string() << "\n"
                    << "right: " << d.right.to_string() << "\n";
        }
    }
    return wd.divides ? kOk : kFalse;
}

int cmd_classify(const Session& s, const std::string& arg) {
    const auto m = s.morphism(arg);
    const Monoid& mon = m.monoid();
    const auto qw = quotient_witnesses(m);
    json j;
    j["epic"] = is_epic(m);
    j["monic"] = is_monic(m);
    j["iso"] = is_isomorphism(m);
    j["weq"] = is_weak_equivalence(m);
    j["weakly_irreducible"] = is_weakly_irreducible(m);
    j["weakly_prime"] = is_weakly_prime(m);
    j["r"] = codec::encode_element(mon, qw.total);
    j["zeta"] = zeta_mor(m);
    if (s.json_out()) {
        s.emit(j);
    } else {
        for (const auto& [k, v] : j.items()) {
            s.out() << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
    return kOk;
}

int cmd_divisors(const Session& s, const std::string& morphism_arg, const std::string& element_arg) {
    MonoidHandle h;
    Element r;
    if (!element_arg.empty()) {
        h = s.monoid();
        r = s.element(h, element_arg);
    } else {
        const auto m = s.morphism(morphism_arg);
        h = m.monoid_handle();
        h->require_divisibility("divisors");
        r = quotient_witnesses(m).total;
    }
    const auto classes = divisor_classes(*h, r);
    const char* key = element_arg.empty() ? "r" : "element";
    if (s.json_out()) {
        json j;
        j[key] = codec::encode_element(*h, r);
        j["count"] = classes.size();
        j["classes"] = codec::encode_elements(*h, classes);
        s.emit(j);
    } else {
        s.out() << key << ": " << h->format(r) << "\n"
                << "count: " << classes.size() << "\n"
                << elements_text(*h, classes) << "\n";
    }
    return kOk;
}

int cmd_factorizations(const Session& s, const std::string& arg, std::size_t max_count) {
    const auto h = s.monoid();
    const auto a = s.element(h, arg);
    const auto e = enumerate_irreducible_factorizations(*h, a, max_count);
    if (s.json_out()) {
        json j;
        j["element"] = codec::encode_element(*h, a);
        j["count"] = e.factorizations.size();
        j["truncated"] = e.truncated;
        j["factorizations"] = json::array();
        for (const auto& fs : e.factorizations) j["factorizations"].push_back(codec::encode_elements(*h, fs));
        s.emit(j);
    } else {
        s.out() << "count: " << e.factorizations.size() << (e.truncated ? " (truncated)" : "") << "\n";
        for (const auto& fs : e.factorizations) {
            std::string line;
            for (std::size_t i = 0; i < fs.size(); ++i) line += (i ? " * " : "") + h->format(fs[i]);
            s.out() << (line.empty() ? "(unit)" : line) << "\n";
        }
    }
    return kOk;
}

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

int cmd_graph(const Session& s, const std::string& pool_text, std::size_t max_len, const std::string& out_path) {
    const auto h = s.monoid();
    const auto pool = parse_pool(h, pool_text);
    oracle::UniverseSpec spec;
    spec.monoid = h;
    spec.pool = pool;
    spec.max_len = max_len;
    spec.validate();
    const auto tuples = oracle::enumerate_tuples(h, pool, max_len);

    std::uint64_t candidates = 0;
    for (const auto& x : tuples) {
        for (const auto& y : tuples) {
            candidates += hom_candidate_count(x.size(), y.size());
            if (candidates > kHomSetGuard) {
                throw GuardError("graph would test more than " + std::to_string(kHomSetGuard) + " index functions");
            }
        }
    }

    std::ostringstream dot;
    dot << "digraph factorization {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const auto label = tuples[i].is_empty() ? std::string("\xF0\x9D\x94\xAC") : tuples[i].to_string();
        dot << "  n" << i << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (std::size_t j = 0; j < tuples.size(); ++j) {
            for (const auto& m : hom_set(tuples[i], tuples[j])) {
                if (i == j && m.index_fn() == IndexFunction::identity(tuples[i].size())) continue;
                std::string style;
                if (h->is_divisibility_monoid()) {
                    if (is_weak_equivalence(m)) style = ", style=dashed";
                    else if (is_weakly_irreducible(m)) style = ", style=bold";
                }
                dot << "  n" << i << " -> n" << j << " [label=\"" << map_text(m.index_fn()) << "\"" << style << "];\n";
            }
        }
    }
    dot << "}\n";
    if (out_path.empty()) {
        s.out() << dot.str();
    } else {
        std::ofstream file(out_path);
        if (!file) throw ParseError("cannot write " + out_path);
        file << dot.str();
    }
    return kOk;
}

struct VerifyArgs {
    std::vector<std::string> suites;
    std::string pool;
    std::size_t max_len = 3;
    std::size_t max_depth = 3;
    std::uint64_t seed = 1;
    std::uint64_t max_cases = 1'000'000;
};

int cmd_verify(const Session& s, const Options& opts, const VerifyArgs& a) {
    const auto h = make_monoid(opts.monoid.empty() ? "zx" : opts.monoid);
    auto spec = oracle::UniverseSpec::defaults(h);
    if (!a.pool.empty()) spec.pool = parse_pool(h, a.pool);
    spec.max_len = a.max_len;
    spec.max_depth = a.max_depth;
    spec.seed = a.seed;
    spec.max_cases = a.max_cases;
    const auto names = a.suites.empty() ? oracle::suite_names() : a.suites;
    const auto report = oracle::run_suite(spec, names);
    if (s.json_out()) {
        s.emit(oracle::to_json(report));
    } else {
        for (const auto& r : report.suites) {
            const char* status = r.skipped ? "SKIP" : r.passed() ? "PASS" : "FAIL";
            s.out() << status << " " << r.name << " cases=" << r.cases;
            if (!r.passed()) s.out() << " failures=" << r.failure_count;
            if (!r.note.empty()) s.out() << " (" << r.note << ")";
            s.out() << "\n";
            for (const auto& f : r.failures) s.out() << "  " << f.check << ": " << f.message << "\n";
        }
        s.out() << (report.passed() ? "all suites passed" : "some suites failed") << "\n";
    }
    return report.passed() ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations in the category of factorization of a monoid", "factcat"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    app.add_option("--monoid", opts.monoid, "zx, nat, interval, or free:<alphabet>");
    app.add_flag("--json", opts.json_out, "JSON output");

    Session session(opts, out);
    std::function<int()> action;

    std::string a1, a2;
    auto* hom = app.add_subcommand("hom", "list hom(DOMAIN, CODOMAIN)");
    hom->add_option("domain", a1, "tuple as a JSON array")->required();
    hom->add_option("codomain", a2, "tuple as a JSON array")->required();
    hom->callback([&] { action = [&] { return cmd_hom(session, a1, a2); }; });

    auto* comp = app.add_subcommand("compose", "g o f");
    comp->add_option("g", a1, "morphism JSON, applied second")->required();
    comp->add_option("f", a2, "morphism JSON, applied first")->required();
    comp->callback([&] {
        action = [&] { return emit_morphism(session, compose(session.morphism(a1), session.morphism(a2))); };
    });

    std::string property;
    auto* check = app.add_subcommand("check", "decide one property of a morphism");
    check->add_option("morphism", a1, "morphism JSON")->required();
    auto* props = check->add_option_group("property");
    for (const char* p : {"iso", "epic", "monic", "weq", "wirr", "wprime"}) {
        props->add_flag_callback(std::string("--") + p, [&property, p] { property = p; });
    }
    props->require_option(1);
    check->callback([&] { action = [&] { return cmd_check(session, a1, property); }; });

    auto* dec = app.add_subcommand("decompose", "epsilon / delta / phi decomposition");
    dec->add_option("morphism", a1, "morphism JSON")->required();
    dec->callback([&] { action = [&] { return cmd_decompose(session, a1); }; });

    auto* chain = app.add_subcommand("chain", "atomic chain of a morphism");
    chain->add_option("morphism", a1, "morphism JSON")->required();
    chain->callback([&] { action = [&] { return cmd_chain(session, a1); }; });

    auto* tensor = app.add_subcommand("tensor", "f (x) g");
    tensor->add_option("f", a1, "morphism JSON")->required();
    tensor->add_option("g", a2, "morphism JSON")->required();
    tensor->callback([&] {
        action = [&] { return emit_morphism(session, tensor_morphisms(session.morphism(a1), session.morphism(a2))); };
    });

    bool diagram = false;
    auto* wdiv = app.add_subcommand("weakdiv", "does f weakly divide g");
    wdiv->add_option("f", a1, "morphism JSON")->required();
    wdiv->add_option("g", a2, "morphism JSON")->required();
    wdiv->add_flag("--diagram", diagram, "also build the witness square");
    wdiv->callback([&] { action = [&] { return cmd_weakdiv(session, a1, a2, diagram); }; });

    auto* classify = app.add_subcommand("classify", "every classification of a morphism");
    classify->add_option("morphism", a1, "morphism JSON")->required();
    classify->callback([&] { action = [&] { return cmd_classify(session, a1); }; });

    std::string element;
    auto* divs = app.add_subcommand("divisors", "weak-divisor classes of a morphism");
    auto* div_m = divs->add_option("morphism", a1, "morphism JSON");
    auto* div_e = divs->add_option("--element", element, "classes of divisors of an element instead");
    div_m->excludes(div_e);
    divs->callback([&] {
        if (a1.empty() && element.empty()) throw CLI::ValidationError("divisors", "give a morphism or --element");
        action = [&] { return cmd_divisors(session, a1, element); };
    });

    std::size_t max_count = 1000;
    auto* facts = app.add_subcommand("factorizations", "irreducible factorizations of an element");
    facts->add_option("element", a1, "element")->required();
    facts->add_option("--max", max_count, "stop after this many")->check(CLI::PositiveNumber);
    facts->callback([&] { action = [&] { return cmd_factorizations(session, a1, max_count); }; });

    std::string pool, out_path;
    std::size_t max_len = 2;
    auto* graph = app.add_subcommand("graph", "DOT graph of a bounded universe");
    graph->add_option("--pool", pool, "comma-separated elements or a JSON array")->required();
    graph->add_option("--max-len", max_len, "longest tuple")->check(CLI::NonNegativeNumber);
    graph->add_option("--out", out_path, "write to a file");
    graph->callback([&] { action = [&] { return cmd_graph(session, pool, max_len, out_path); }; });

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "run oracle suites");
    verify->add_option("--suite", vargs.suites, "suite name (repeatable)")->take_all();
    verify->add_option("--pool", vargs.pool, "comma-separated elements or a JSON array");
    verify->add_option("--max-len", vargs.max_len, "longest tuple")->check(CLI::PositiveNumber);
    verify->add_option("--max-depth", vargs.max_depth, "longest composition chain")->check(CLI::PositiveNumber);
    verify->add_option("--seed", vargs.seed, "sampling seed");
    verify->add_option("--max-cases", vargs.max_cases, "per-family case budget")->check(CLI::PositiveNumber);
    verify->callback([&] { action = [&] { return cmd_verify(session, opts, vargs); }; });

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kOk : kParse;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kParse;
    } catch (const GuardError& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return kGuard;
    } catch (const RangeError& e) {
        err << "out of range: " << e.what() << "\n";
        return kGuard;
    } catch (const CapabilityError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kCapability;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFalse;
    }
}

}  // namespace factcat::cli
