#include "bhc/cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "bhc/butson.hpp"
#include "bhc/cocycle.hpp"
#include "bhc/codes.hpp"
#include "bhc/graymap.hpp"
#include "bhc/group.hpp"
#include "bhc/io.hpp"
#include "bhc/propelinear.hpp"

namespace bhc {

namespace {

const char* usage_text =
    "usage:\n"
    "  bhcli gen fourier N\n"
    "  bhcli gen kron A B\n"
    "  bhcli gen span --p P --s S --t T1,...,TS\n"
    "  bhcli gen embed FILE --phase L\n"
    "  bhcli verify butson FILE\n"
    "  bhcli verify cocycle FILE --group SPEC\n"
    "  bhcli verify orthogonal-cocycle FILE --group SPEC\n"
    "  bhcli gray phi FILE\n"
    "  bhcli gray psi FILE --p P\n"
    "  bhcli gray reduce FILE\n"
    "  bhcli code params FILE --code {f|c} --metric {hamming|lee|star|dagger}\n"
    "  bhcli code additive-type FILE --p P --s S\n"
    "  bhcli code plotkin FILE [--p P]\n"
    "  bhcli prop build FILE --group SPEC\n"
    "  bhcli prop verify CODEFILE ASSIGNFILE [--full]\n"
    "  bhcli prop group CODEFILE ASSIGNFILE\n"
    "  bhcli prop transfer CODEFILE ASSIGNFILE\n"
    "group SPEC: product of cyclic factors, e.g. Z8 or Z2xZ4\n";

struct Usage : Error {
    using Error::Error;
};

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
    bool full = false;
};

Args parse_args(const std::vector<std::string>& argv, std::size_t start) {
    Args a;
    for (std::size_t i = start; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        if (s == "--full") {
            a.full = true;
        } else if (s.rfind("--", 0) == 0) {
            if (i + 1 >= argv.size()) throw Usage("flag " + s + " needs a value");
            a.flags[s.substr(2)] = argv[++i];
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

std::string flag(const Args& a, const std::string& name) {
    auto it = a.flags.find(name);
    if (it == a.flags.end()) throw Usage("missing required flag --" + name);
    return it->second;
}

std::int64_t int_flag(const Args& a, const std::string& name) {
    const std::string v = flag(a, name);
    try {
        std::size_t used = 0;
        std::int64_t r = std::stoll(v, &used);
        if (used != v.size()) throw Error("");
        return r;
    } catch (const std::exception&) {
        throw Usage("flag --" + name + " expects an integer, got '" + v + "'");
    }
}

std::vector<std::int64_t> int_list_flag(const Args& a, const std::string& name) {
    std::string v = flag(a, name);
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        std::size_t c = v.find(',', pos);
        std::string tok = v.substr(pos, c == std::string::npos ? std::string::npos : c - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw Error("");
        } catch (const std::exception&) {
            throw Usage("flag --" + name + " expects a comma-separated integer list");
        }
        if (c == std::string::npos) break;
        pos = c + 1;
    }
    return out;
}

std::string echo(const std::vector<std::string>& argv) {
    std::ostringstream os;
    os << "bhcli";
    for (const auto& s : argv) os << " " << s;
    return os.str();
}

std::string word_line(const Word& w) {
    std::ostringstream os;
    for (int j = 0; j < w.n(); ++j) os << (j ? " " : "") << w.v[static_cast<std::size_t>(j)];
    return os.str();
}

std::string int_list(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

void print_descriptor(std::ostream& out, const std::string& prefix, const GroupDescriptor& d) {
    out << prefix << "_order: " << d.order << "\n";
    out << prefix << "_abelian: " << (d.abelian ? "true" : "false") << "\n";
    if (d.abelian) {
        out << prefix << "_invariants: " << int_list(d.invariant_factors) << "\n";
    } else {
        out << prefix << "_center_order: " << d.center_order << "\n";
        out << prefix << "_abelianization: " << int_list(d.abelianization) << "\n";
    }
}

LogMatrix matrix_from(const std::string& path) {
    return parse_matrix(read_file(path));
}

int emit_artifact(std::ostream& out, const std::vector<std::string>& argv, const std::string& body) {
    out << "# " << echo(argv) << "\n" << body;
    return 0;
}

int run_gen(const std::vector<std::string>& argv, std::ostream& out) {
    if (argv.size() < 2) throw Usage("gen needs a subcommand");
    const std::string& sub = argv[1];
    Args a = parse_args(argv, 2);
    if (sub == "fourier") {
        if (a.positional.size() != 1) throw Usage("gen fourier N");
        return emit_artifact(out, argv, emit_matrix(fourier(std::stoi(a.positional[0]))));
    }
    if (sub == "kron") {
        if (a.positional.size() != 2) throw Usage("gen kron A B");
        return emit_artifact(out, argv, emit_matrix(kronecker(matrix_from(a.positional[0]), matrix_from(a.positional[1]))));
    }
    if (sub == "span") {
        if (!a.positional.empty()) throw Usage("gen span --p P --s S --t T1,...,TS");
        auto g = build_generator(int_flag(a, "p"), int_flag(a, "s"), int_list_flag(a, "t"));
        if (g.cols > 4096) throw Error("span order " + std::to_string(g.cols) + " exceeds the 4096 limit");
        return emit_artifact(out, argv, emit_matrix(span_rows(g)));
    }
    if (sub == "embed") {
        if (a.positional.size() != 1) throw Usage("gen embed FILE --phase L");
        return emit_artifact(out, argv, emit_matrix(embed_phase(matrix_from(a.positional[0]), int_flag(a, "phase"))));
    }
    throw Usage("unknown gen subcommand '" + sub + "'");
}

int run_verify(const std::vector<std::string>& argv, std::ostream& out) {
    if (argv.size() < 2) throw Usage("verify needs a subcommand");
    const std::string& sub = argv[1];
    Args a = parse_args(argv, 2);
    if (a.positional.size() != 1) throw Usage("verify " + sub + " FILE");
    LogMatrix m = matrix_from(a.positional[0]);
    out << "command: " << echo(argv) << "\n";
    out << "n: " << m.n << "\n";
    out << "k: " << m.k << "\n";

    if (sub == "butson") {
        auto bad = butson_violation(m);
        out << "verdict: " << (bad ? "false" : "true") << "\n";
        if (bad) out << "witness: rows " << bad->first << " " << bad->second << " not orthogonal\n";
        return bad ? 1 : 0;
    }
    if (sub == "cocycle" || sub == "orthogonal-cocycle") {
        FiniteGroup g = parse_group_spec(flag(a, "group"));
        out << "group: " << flag(a, "group") << "\n";
        if (g.order() != m.n) {
            out << "verdict: false\n";
            out << "witness: group order " << g.order() << " differs from matrix order " << m.n << "\n";
            return 1;
        }
        if (!is_normalized(m)) {
            out << "verdict: false\n";
            out << "witness: first row/column not all zero\n";
            return 1;
        }
        auto w = cocycle_violation(m, g);
        if (w) {
            out << "verdict: false\n";
            out << "witness: identity fails at (" << g.label(w->g) << "," << g.label(w->h) << "," << g.label(w->k) << ")\n";
            return 1;
        }
        if (sub == "cocycle") {
            out << "verdict: true\n";
            return 0;
        }
        bool orth = is_orthogonal_cocycle(m, g);
        out << "verdict: " << (orth ? "true" : "false") << "\n";
        if (!orth) out << "witness: a non-identity row does not sum to zero\n";
        return orth ? 0 : 1;
    }
    throw Usage("unknown verify subcommand '" + sub + "'");
}

int run_gray(const std::vector<std::string>& argv, std::ostream& out) {
    if (argv.size() < 2) throw Usage("gray needs a subcommand");
    const std::string& sub = argv[1];
    Args a = parse_args(argv, 2);
    if (a.positional.size() != 1) throw Usage("gray " + sub + " FILE");
    LogMatrix m = matrix_from(a.positional[0]);
    if (sub == "phi") {
        PhaseParams pp = PhaseParams::prime_power(m.k); // phi demands m = 1
        return emit_artifact(out, argv, emit_matrix(lift_psi(m, pp.p)));
    }
    if (sub == "psi") return emit_artifact(out, argv, emit_matrix(lift_psi(m, int_flag(a, "p"))));
    if (sub == "reduce") return emit_artifact(out, argv, emit_matrix(reduce_squarefree(m)));
    throw Usage("unknown gray subcommand '" + sub + "'");
}

int run_code(const std::vector<std::string>& argv, std::ostream& out) {
    if (argv.size() < 2) throw Usage("code needs a subcommand");
    const std::string& sub = argv[1];
    Args a = parse_args(argv, 2);
    if (a.positional.size() != 1) throw Usage("code " + sub + " FILE ...");
    LogMatrix m = matrix_from(a.positional[0]);
    out << "command: " << echo(argv) << "\n";

    if (sub == "params") {
        std::string which = flag(a, "code");
        if (which != "f" && which != "c") throw Usage("--code must be f or c");
        Metric metric = metric_from_string(flag(a, "metric"));
        auto [f, c] = build_codes(m);
        const Code& code = which == "f" ? f : c;
        std::int64_t d = 0;
        switch (metric) {
            case Metric::hamming:
                d = min_hamming_distance(code);
                break;
            case Metric::lee:
                d = min_lee_distance(code);
                break;
            case Metric::star:
                d = min_distance(code, metric, PhaseParams::prime_power(m.k));
                break;
            case Metric::dagger:
                d = min_distance(code, metric, PhaseParams::default_split(m.k));
                break;
        }
        out << "code: " << which << "\n";
        out << "metric: " << metric_name(metric) << "\n";
        out << "n: " << code.n << "\n";
        out << "M: " << code.size() << "\n";
        out << "d: " << d << "\n";
        return 0;
    }
    if (sub == "additive-type") {
        std::int64_t p = int_flag(a, "p"), s = int_flag(a, "s");
        auto [f, c] = build_codes(m);
        auto res = additive_type(c, p, s);
        out << "additive: " << (res.additive ? "true" : "false") << "\n";
        if (res.additive) {
            out << "type: " << int_list(res.t) << "\n";
        } else {
            out << "witness_x: " << word_line(*res.witness_x) << "\n";
            out << "witness_y: " << word_line(*res.witness_y) << "\n";
            out << "witness_sum: " << word_line(*res.witness_sum) << "\n";
        }
        return 0;
    }
    if (sub == "plotkin") {
        std::optional<std::int64_t> p;
        if (a.flags.count("p")) p = int_flag(a, "p");
        auto res = plotkin_check(m, p);
        out << "p: " << res.p << "\n";
        out << "weight_sum: " << res.weight_sum << "\n";
        out << "punctured_min_d: " << res.min_distance << "\n";
        out << "verdict: " << (res.meets ? "true" : "false") << "\n";
        return res.meets ? 0 : 1;
    }
    throw Usage("unknown code subcommand '" + sub + "'");
}

int run_prop(const std::vector<std::string>& argv, std::ostream& out) {
    if (argv.size() < 2) throw Usage("prop needs a subcommand");
    const std::string& sub = argv[1];
    Args a = parse_args(argv, 2);

    if (sub == "build") {
        if (a.positional.size() != 1) throw Usage("prop build FILE --group SPEC");
        LogMatrix m = matrix_from(a.positional[0]);
        FiniteGroup g = parse_group_spec(flag(a, "group"));
        PropelinearStructure ps = propelinear_from_cocycle(m, g);
        return emit_artifact(out, argv, emit_assignment(ps));
    }

    if (a.positional.size() != 2) throw Usage("prop " + sub + " CODEFILE ASSIGNFILE");
    Code code = parse_code_flexible(read_file(a.positional[0]));
    PropelinearStructure ps = parse_assignment(read_file(a.positional[1]));

    if (code.size() != ps.code.size() || code.n != ps.code.n || code.k != ps.code.k)
        throw Error("code file and assignment file describe different codes");
    for (const auto& w : code.words)
        if (!ps.code.contains(w)) throw Error("codeword " + word_line(w) + " missing from the assignment");

    if (sub == "verify") {
        out << "command: " << echo(argv) << "\n";
        auto res = verify_propelinear(ps, a.full);
        out << "full: " << (a.full ? "true" : "false") << "\n";
        out << "verdict: " << (res.ok ? "true" : "false") << "\n";
        if (!res.ok) {
            out << "axiom: " << res.axiom << "\n";
            out << "witness: " << res.detail << "\n";
        }
        return res.ok ? 0 : 1;
    }
    if (sub == "group") {
        out << "command: " << echo(argv) << "\n";
        auto [cg, pg] = group_descriptor(ps);
        print_descriptor(out, "code_group", cg);
        print_descriptor(out, "perm_group", pg);
        return 0;
    }
    if (sub == "transfer") {
        PropelinearStructure img = gray_transfer(ps);
        return emit_artifact(out, argv, emit_assignment(img));
    }
    throw Usage("unknown prop subcommand '" + sub + "'");
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << usage_text;
            return 2;
        }
        const std::string& cmd = args[0];
        if (cmd == "gen") return run_gen(args, out);
        if (cmd == "verify") return run_verify(args, out);
        if (cmd == "gray") return run_gray(args, out);
        if (cmd == "code") return run_code(args, out);
        if (cmd == "prop") return run_prop(args, out);
        err << "error: unknown command '" << cmd << "'\n" << usage_text;
        return 2;
    } catch (const Usage& u) {
        err << "error: " << u.what() << "\n" << usage_text;
        return 2;
    } catch (const ParseError& p) {
        err << "error: " << p.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace bhc
