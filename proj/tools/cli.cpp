#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "zieschang/selftest.hpp"

namespace zieschang::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::IndexOutOfRange:
        case ErrorKind::SignatureMismatch:
        case ErrorKind::WitnessInvalid:
        case ErrorKind::NotACandidate:
        case ErrorKind::NotZieschang:
        case ErrorKind::TargetTooLong:
            return kMalformed;
        case ErrorKind::HypothesisViolated:
        case ErrorKind::NotInA:
        case ErrorKind::NotInStabilizer:
            return kFalse;
        case ErrorKind::ReductionStuck:
        case ErrorKind::CosetViolation:
        case ErrorKind::ImageEscapes:
        case ErrorKind::RecompositionMismatch:
        case ErrorKind::InvariantViolation:
            return kInternal;
    }
    return kInternal;
}

Signature parse_sig_option(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "--sig expects g,p");
    Signature sig;
    try {
        std::size_t used = 0;
        const std::string gs = text.substr(0, comma), ps = text.substr(comma + 1);
        sig.g = std::stoi(gs, &used);
        if (used != gs.size()) throw std::invalid_argument("g");
        sig.p = std::stoi(ps, &used);
        if (used != ps.size()) throw std::invalid_argument("p");
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "--sig expects g,p, got '" + text + "'");
    }
    if (sig.g < 0 || sig.p < 0 || sig.g > 1000 || sig.p > 1000)
        throw Error(ErrorKind::ParseError, "signature out of range: " + text);
    return sig;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json map_json(const Endomorphism& f) {
    json j = json::object();
    for (const Letter b : basis_letters(f.sig())) j[format_letter(b)] = format_word(f.image(b));
    return j;
}

// Where an automorphism-valued argument can come from.
struct MapSource {
    std::string file;
    std::string inline_map;
    std::string genword;

    bool given() const { return !file.empty() || !inline_map.empty() || !genword.empty(); }
};

Endomorphism load_endomorphism(const MapSource& src, Signature sig) {
    const int n = static_cast<int>(!src.file.empty()) + static_cast<int>(!src.inline_map.empty()) +
                  static_cast<int>(!src.genword.empty());
    if (n != 1) throw Error(ErrorKind::ParseError, "give exactly one of --aut, --map, --genword");
    if (!src.genword.empty()) return eval_gen_word(parse_gen_word(src.genword), sig).fwd();
    Endomorphism f;
    if (!src.file.empty()) {
        f = parse_endomorphism(read_file(src.file));
    } else {
        std::string text = "sig g=" + std::to_string(sig.g) + " p=" + std::to_string(sig.p) + "\n" + src.inline_map;
        std::replace(text.begin(), text.end(), ';', '\n');
        f = parse_endomorphism(text);
    }
    if (!(f.sig() == sig))
        throw Error(ErrorKind::SignatureMismatch,
                    "map is for " + format_signature(f.sig()) + " but --sig is " + format_signature(sig));
    return f;
}

// Automorphisms given as bare maps get their witness from certification.
Automorphism load_automorphism(const MapSource& src, Signature sig) {
    if (!src.genword.empty()) return eval_gen_word(parse_gen_word(src.genword), sig);
    const Endomorphism f = load_endomorphism(src, sig);
    const Membership m = membership(f);
    if (!m.in_A) throw Error(ErrorKind::NotInA, "map is not in A" + format_signature(sig));
    auto a = certify_automorphism(f);
    if (!a) throw Error(ErrorKind::NotInA, "map could not be certified as an automorphism");
    return *a;
}

void add_map_options(CLI::App* cmd, MapSource& src, const std::string& suffix = "") {
    cmd->add_option("--aut" + suffix, src.file, "automorphism file (sig header + 'letter -> word' lines)");
    cmd->add_option("--map" + suffix, src.inline_map, "inline map, e.g. \"x1 -> y1' x1; y1 -> y1\"");
    cmd->add_option("--genword" + suffix, src.genword, "generator word, e.g. \"b1 a1'\"");
}

struct Options {
    std::string sig_text;
    bool json_out = false;
    std::string word;
    std::string dot_file;
    MapSource map;
    MapSource map2;
    std::string apply_word;
    bool adlh = false;
    int samples = 100;
    std::uint64_t seed = 20261016;
    int criterion = 0;
};

int cmd_verify(const Options& o, Signature sig, std::ostream& out) {
    const Endomorphism f = load_endomorphism(o.map, sig);
    const Membership m = membership(f);
    if (o.json_out) {
        json j{{"command", "verify"},
               {"signature", {{"g", sig.g}, {"p", sig.p}}},
               {"fixes_relator", m.fixes_relator},
               {"permutes_t_classes", m.permutes_t_classes.has_value()},
               {"t_permutation", m.permutes_t_classes ? json(m.permutes_t_classes->image) : json(nullptr)},
               {"in_A", m.in_A}};
        out << j.dump(2) << '\n';
    } else {
        out << "fixes_relator: " << (m.fixes_relator ? "true" : "false") << '\n';
        out << "permutes_t_classes: " << (m.permutes_t_classes ? "true" : "false");
        if (m.permutes_t_classes) {
            out << " (";
            for (std::size_t j = 0; j < m.permutes_t_classes->image.size(); ++j)
                out << (j ? " " : "") << m.permutes_t_classes->image[j];
            out << ")";
        }
        out << '\n' << "in_A: " << (m.in_A ? "true" : "false") << '\n';
    }
    return m.in_A ? kOk : kFalse;
}

int cmd_is_zieschang(const Options& o, Signature sig, std::ostream& out) {
    const std::vector<Letter> seq = parse_letters(o.word);
    const std::string why = candidate_failure(seq, sig);
    const bool z = why.empty() && is_zieschang(seq, sig);
    if (o.json_out) {
        out << json{{"command", "is-zieschang"},
                    {"word", format_letters(seq)},
                    {"candidate", why.empty()},
                    {"zieschang", z},
                    {"reason", why.empty() ? (z ? "" : "graph has a cycle") : why}}
                   .dump(2)
            << '\n';
    } else {
        out << (z ? "true" : "false") << '\n';
    }
    return z ? kOk : kFalse;
}

int cmd_whitehead(const Options& o, Signature sig, std::ostream& out) {
    const std::vector<Letter> seq = parse_letters(o.word);
    const ExtendedWhiteheadGraph gr = build_graph(seq, sig);
    const bool forest = is_forest(gr);
    if (!o.dot_file.empty()) {
        std::ofstream f(o.dot_file);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write " + o.dot_file);
        f << to_dot(gr);
    } else if (!o.json_out) {
        out << to_dot(gr);
    }
    if (o.json_out) {
        json edges = json::array();
        for (const auto& e : gr.edges) edges.push_back({format_letter(e.from), format_letter(e.to)});
        out << json{{"command", "whitehead"},
                    {"word", format_letters(seq)},
                    {"forest", forest},
                    {"edges", edges},
                    {"dot_file", o.dot_file}}
                   .dump(2)
            << '\n';
    } else if (!o.dot_file.empty()) {
        out << "forest: " << (forest ? "true" : "false") << '\n';
    }
    return kOk;
}

int cmd_canon(const Options& o, Signature sig, std::ostream& out) {
    const Word V = parse_word(o.word, sig);
    const CanonicalEdge c = canonical_edge(V, sig);
    if (o.json_out) {
        json steps = json::array();
        for (const auto& s : c.steps)
            steps.push_back(
                {{"kind", s.kind}, {"k", s.k}, {"before", format_word(s.before)}, {"after", format_word(s.after)}});
        out << json{{"command", "canon"}, {"word", format_word(V)}, {"phi", map_json(c.phi.fwd())}, {"steps", steps}}
                   .dump(2)
            << '\n';
    } else {
        out << format_endomorphism(c.phi.fwd());
        for (const auto& s : c.steps) out << format_step(s) << '\n';
    }
    return kOk;
}

int cmd_nielsen_reduce(const Options& o, Signature sig, std::ostream& out) {
    const Endomorphism f = load_endomorphism(o.map, sig);
    const Word V = o.word.empty() ? relator(sig) : parse_word(o.word, sig);
    const NielsenReduction r = nielsen_reduce(V, f);
    if (o.json_out) {
        json edges = json::array();
        for (std::size_t i = 0; i < r.edges.size(); ++i)
            edges.push_back({{"kind", format_nielsen_kind(r.kinds[i])},
                             {"source", format_word(r.edges[i].source())},
                             {"target", format_word(r.edges[i].target())},
                             {"map", map_json(r.edges[i].aut().fwd())}});
        out << json{{"command", "nielsen-reduce"},
                    {"source", format_word(V)},
                    {"target", format_word(r.remainder.target())},
                    {"edges", edges},
                    {"remainder",
                     {{"source", format_word(r.remainder.source())},
                      {"target", format_word(r.remainder.target())},
                      {"map", map_json(r.remainder.aut().fwd())}}},
                    {"iterations", r.iterations()}}
                   .dump(2)
            << '\n';
    } else {
        for (std::size_t i = 0; i < r.edges.size(); ++i)
            out << "(" << format_nielsen_kind(r.kinds[i]) << ") " << format_word(r.edges[i].source()) << " => "
                << format_word(r.edges[i].target()) << '\n';
        out << "(N1) " << format_word(r.remainder.source()) << " => " << format_word(r.remainder.target()) << '\n';
    }
    return kOk;
}

int cmd_certify(const Options& o, Signature sig, std::ostream& out) {
    const Endomorphism f = load_endomorphism(o.map, sig);
    const auto a = certify_automorphism(f);
    if (o.json_out) {
        out << json{{"command", "certify"}, {"certified", a.has_value()}, {"inverse", a ? map_json(a->inv()) : json(nullptr)}}
                   .dump(2)
            << '\n';
    } else if (a) {
        out << "certified\n" << format_endomorphism(a->inv());
    } else {
        out << "not certified\n";
    }
    return a ? kOk : kFalse;
}

int cmd_factorize(const Options& o, Signature sig, std::ostream& out) {
    const Automorphism a = load_automorphism(o.map, sig);
    const GenWord w = o.adlh ? factorize_adlh(a) : factorize_adl(a);
    if (o.json_out) {
        out << json{{"command", "factorize"},
                    {"variant", o.adlh ? "ADLH" : "ADL"},
                    {"genword", format_gen_word(w)},
                    {"tokens", w.size()}}
                   .dump(2)
            << '\n';
    } else {
        out << format_gen_word(w) << '\n';
    }
    return kOk;
}

int cmd_eval(const Options& o, Signature sig, std::ostream& out) {
    if (o.map.genword.empty()) throw Error(ErrorKind::ParseError, "eval needs --genword");
    const Automorphism a = eval_gen_word(parse_gen_word(o.map.genword), sig);
    std::optional<Word> image;
    if (!o.apply_word.empty()) image = apply(a, parse_word(o.apply_word, sig));
    if (o.json_out) {
        json j{{"command", "eval"}, {"genword", o.map.genword}, {"map", map_json(a.fwd())}};
        if (image) j["image"] = format_word(*image);
        out << j.dump(2) << '\n';
    } else if (image) {
        out << format_word(*image) << '\n';
    } else {
        out << format_endomorphism(a.fwd());
    }
    return kOk;
}

int cmd_outer_equal(const Options& o, Signature sig, std::ostream& out) {
    const Automorphism a = load_automorphism(o.map, sig);
    const Automorphism b = load_automorphism(o.map2, sig);
    const auto w = outer_equal(a, b);
    if (o.json_out) {
        out << json{{"command", "outer-equal"}, {"outer_equal", w.has_value()}, {"conjugator", w ? json(format_word(*w)) : json(nullptr)}}
                   .dump(2)
            << '\n';
    } else {
        out << (w ? "true " + format_word(*w) : std::string("false")) << '\n';
    }
    return w ? kOk : kFalse;
}

int cmd_selftest(const Options& o, std::ostream& out) {
    SelftestOptions so;
    so.seed = o.seed;
    so.samples = o.samples;
    std::vector<CriterionResult> results;
    if (o.criterion) {
        results.push_back(run_criterion(o.criterion, so));
        if (!o.json_out) out << format_result(results.back()) << '\n';
    } else {
        results = run_acceptance(so, o.json_out ? nullptr : &out);
    }
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    if (o.json_out) {
        json cs = json::array();
        for (const auto& r : results)
            cs.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        out << json{{"command", "selftest"}, {"seed", o.seed}, {"samples", o.samples}, {"criteria", cs}, {"pass", all}}
                   .dump(2)
            << '\n';
    }
    return all ? kOk : kFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation in the group A_{g,p} of relator-fixing free-group automorphisms"};
    app.name("zieschang");
    app.require_subcommand(1, 1);
    Options o;
    auto sig_opt = [&](CLI::App* c) { c->add_option("--sig", o.sig_text, "signature g,p")->required(); };
    auto json_opt = [&](CLI::App* c) { c->add_flag("--json", o.json_out, "machine-readable output"); };

    CLI::App* verify = app.add_subcommand("verify", "membership report for a map");
    CLI::App* isz = app.add_subcommand("is-zieschang", "decide whether a word is a Zieschang element");
    CLI::App* wh = app.add_subcommand("whitehead", "extended Whitehead graph as DOT");
    CLI::App* canon = app.add_subcommand("canon", "canonical edge to V_0 with its step log");
    CLI::App* nred = app.add_subcommand("nielsen-reduce", "factor a map into Nielsen edges");
    CLI::App* cert = app.add_subcommand("certify", "certify an endomorphism as an automorphism");
    CLI::App* fact = app.add_subcommand("factorize", "factor an element of A into generators");
    CLI::App* ev = app.add_subcommand("eval", "evaluate a generator word");
    CLI::App* oeq = app.add_subcommand("outer-equal", "decide equality up to an inner automorphism");
    CLI::App* self = app.add_subcommand("selftest", "run the acceptance suite");

    for (CLI::App* c : {verify, isz, wh, canon, nred, cert, fact, ev, oeq}) {
        sig_opt(c);
        json_opt(c);
    }
    json_opt(self);
    for (CLI::App* c : {verify, nred, cert, fact, oeq}) add_map_options(c, o.map);
    add_map_options(oeq, o.map2, "2");
    for (CLI::App* c : {isz, wh, canon}) c->add_option("--word", o.word, "word, e.g. \"x1' y1' x1 y1\"")->required();
    nred->add_option("--word", o.word, "source Zieschang element (default V_0)");
    wh->add_option("--dot", o.dot_file, "write the DOT graph to this file");
    fact->add_flag("--adlh", o.adlh, "rewrite into the ADLH set");
    ev->add_option("--genword", o.map.genword, "generator word")->required();
    ev->add_option("--apply", o.apply_word, "print the image of this word instead of the map");
    self->add_option("--samples", o.samples, "samples per signature")->check(CLI::Range(1, 1000000));
    self->add_option("--seed", o.seed, "64-bit seed");
    self->add_option("--criterion", o.criterion, "run one criterion")->check(CLI::Range(1, 9));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kMalformed;
    }

    try {
        if (self->parsed()) return cmd_selftest(o, out);
        const Signature sig = parse_sig_option(o.sig_text);
        if (verify->parsed()) return cmd_verify(o, sig, out);
        if (isz->parsed()) return cmd_is_zieschang(o, sig, out);
        if (wh->parsed()) return cmd_whitehead(o, sig, out);
        if (canon->parsed()) return cmd_canon(o, sig, out);
        if (nred->parsed()) return cmd_nielsen_reduce(o, sig, out);
        if (cert->parsed()) return cmd_certify(o, sig, out);
        if (fact->parsed()) return cmd_factorize(o, sig, out);
        if (ev->parsed()) return cmd_eval(o, sig, out);
        if (oeq->parsed()) return cmd_outer_equal(o, sig, out);
    } catch (const Error& e) {
        if (o.json_out) {
            out << json{{"error", error_kind_name(e.kind())}, {"message", e.what()}}.dump(2) << '\n';
        }
        err << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kMalformed;
}

}  // namespace zieschang::cli
