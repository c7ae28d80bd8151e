// oih: equivariant Hilbert series of monomial OI-modules from the command line.
//
// Exit codes: 0 success, 2 malformed input, 3 computation failure or an
// internal inconsistency (oracle mismatch, failed verification).

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oih/oih.hpp"

using namespace oih;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitInternal = 3;

// Input errors detected while reading a document map to exit code 2.
struct SchemaFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

InputDocument read_doc(const std::string& path) {
    try {
        return load_document(path);
    } catch (const Error& e) {
        throw SchemaFailure(e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw SchemaFailure("expected comma separated integers, got '" + text + "'");
        }
    }
    return out;
}

std::pair<int, int> parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw SchemaFailure("window must look like a:b");
    try {
        int a = std::stoi(text.substr(0, colon)), b = std::stoi(text.substr(colon + 1));
        if (a < 0 || b < a) throw SchemaFailure("window needs 0 <= a <= b");
        return {a, b};
    } catch (const std::logic_error&) {
        throw SchemaFailure("window must look like a:b");
    }
}

std::string shape_line(const ShapeReport& r) {
    std::ostringstream os;
    os << (r.conformant ? "conformant" : "NOT conformant") << ", a = " << r.a << ", b = " << r.b();
    // each factor as [(1 - t)^c_j - s*f]^exponent, the same shape the series uses
    for (const auto& f : r.factors) {
        BiPoly poly = BiPoly(UniPoly::one_minus_t(f.c_j)) - BiPoly(f.f).shifted(1, 0);
        os << "; (" << poly.to_string() << ")";
        if (f.exponent > 1) os << "^" << f.exponent;
        os << " [c_j = " << f.c_j << ", f = " << f.f.to_string() << "]";
    }
    if (r.leftover) os << "; leftover " << r.leftover->to_string();
    return os.str();
}

Json shape_json(const ShapeReport& r, int c) {
    Json fs = Json::array();
    for (const auto& f : r.factors) fs.push_back({{"c_j", f.c_j}, {"f", f.f.to_string()}, {"exponent", f.exponent}});
    Json out{{"conformant", r.conformant}, {"a", r.a}, {"b", r.b()}, {"factors", fs},
             {"leftover", r.leftover ? Json(r.leftover->to_string()) : Json(nullptr)}};
    if (c == 1) out["c1_conformant"] = r.c1_conformant;
    return out;
}

std::string gens_text(const ModulePresentation& p) {
    if (p.generators.empty()) return "0";
    std::string out = "<";
    for (size_t k = 0; k < p.generators.size(); ++k) out += (k ? ", " : "") + p.generators[k].to_string();
    return out + ">";
}

int cmd_hilbert(const std::string& file, bool raw, bool json, bool dot) {
    InputDocument doc = read_doc(file);
    ModulePresentation p = doc.effective();
    HilbertResult h = module_series(p, doc.quotient, !raw);
    ShapeReport shape = validate_shape(h.series, p.c);
    if (dot) {
        ModulePresentation q = p.category == Category::FI ? symmetrize(p) : p;
        for (int i = 0; i < static_cast<int>(q.summands.size()); ++i) {
            std::vector<Monomial> g;
            for (const auto& m : minimal_generators(q.generators))
                if (m.summand == i) g.push_back(m);
            std::cout << "// summand " << i << "\n" << to_dot(submodule_automaton(g, q.c, q.summands[i].d), q.c);
        }
        return 0;
    }
    if (json) {
        Json parts = Json::array();
        for (const auto& b : h.breakdown)
            parts.push_back({{"summand", b.summand}, {"submodule", b.submodule.to_string()},
                             {"automaton_states", b.automaton_states}});
        Json out{{"mode", doc.quotient ? "quotient" : "submodule"}, {"series", to_json(h.series)},
                 {"reduced", h.reduced}, {"shape", shape_json(shape, p.c)}, {"summands", parts}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << h.series.to_string() << "\n";
        std::cout << "shape: " << shape_line(shape) << "\n";
    }
    return shape.conformant ? 0 : kExitInternal;
}

int cmd_expand(const std::string& file, int N, int J, bool json) {
    InputDocument doc = read_doc(file);
    auto w = expand_series(module_series(doc.effective(), doc.quotient).series, N, J);
    if (json) {
        std::cout << Json{{"N", w.N}, {"J", w.J}, {"j_lo", w.j_lo}, {"table", [&] {
                              Json t = Json::array();
                              for (const auto& row : w.table) {
                                  Json r = Json::array();
                                  for (const auto& x : row) r.push_back(x.str());
                                  t.push_back(r);
                              }
                              return t;
                          }()}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    for (int n = 0; n <= N; ++n) {
        std::cout << "n=" << n << ":";
        for (int j = w.j_lo; j <= J; ++j) std::cout << " " << w.at(n, j);
        std::cout << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& file, int N, int J, bool json) {
    InputDocument doc = read_doc(file);
    ModulePresentation p = doc.effective();
    FactoredRational series;
    if (doc.cached_series) {
        try {
            series = parse_rational(*doc.cached_series);
        } catch (const Error& e) {
            throw SchemaFailure(std::string("cached_series: ") + e.what());
        }
    } else {
        series = module_series(p, doc.quotient).series;
    }
    auto computed = expand_series(series, N, J);
    auto oracle = widthwise_window(p, doc.quotient, N, J);
    auto bad = first_mismatch(computed, oracle);
    if (json) {
        Json out{{"ok", !bad}, {"N", N}, {"J", J}};
        if (bad)
            out["mismatch"] = {{"n", bad->n}, {"j", bad->j}, {"series", bad->series.str()},
                               {"widthwise", bad->widthwise.str()}};
        std::cout << out.dump(2) << "\n";
    } else if (!bad) {
        std::cout << "OK\n";
    } else {
        std::cout << "MISMATCH at (n=" << bad->n << ", j=" << bad->j << "): series " << bad->series
                  << ", width-wise " << bad->widthwise << "\n";
    }
    return bad ? kExitInternal : 0;
}

int cmd_analyze(const std::string& file, const std::string& window, bool json) {
    InputDocument doc = read_doc(file);
    ModulePresentation p = doc.effective();
    if (p.category == Category::FI) p = symmetrize(p);
    HilbertResult h = module_series(p, doc.quotient);
    ShapeReport shape = validate_shape(h.series, p.c);
    int base = generation_width(p);
    std::pair<int, int> wd{base + 2, base + 6}, wm{base + 1, base + 6}, wa{base + 1, base + 5};
    if (!window.empty()) wd = wm = wa = parse_window(window);
    Json out{{"series", h.series.to_string()}, {"shape", shape_json(shape, p.c)}};
    bool ok = true;
    try {
        auto d = asymptotic_dimension(p, wd.first, wd.second, doc.quotient);
        out["dimension"] = {{"A", d.A}, {"B", d.B.str()}, {"window", {d.n_lo, d.n_hi}}};
    } catch (const Error& e) {
        out["dimension"] = {{"error", e.what()}};
        ok = false;
    }
    try {
        auto m = asymptotic_multiplicity(p, wm.first, wm.second, doc.quotient);
        out["multiplicity"] = {{"M", m.M.str()}, {"L", m.L}, {"tail_value", m.limit_estimate.str()},
                               {"window", {m.n_lo, m.n_hi}}, {"exact_fit", m.exact_fit}};
    } catch (const Error& e) {
        out["multiplicity"] = {{"error", e.what()}};
        ok = false;
    }
    try {
        auto cert = artinian_test(h.series, p.c);
        bool window_zero = true;
        for (int n = wa.first; n <= wa.second; ++n) {
            try {
                if (dim_deg_width(p, n, doc.quotient).krull_dim != 0) window_zero = false;
            } catch (const ZeroModule&) {
            }
        }
        out["artinian"] = {{"verdict", cert.verdict}, {"reason", cert.reason}, {"e", cert.e},
                           {"h", cert.h.to_string()}, {"window_check", window_zero},
                           {"window", {wa.first, wa.second}}};
        if (window_zero != cert.verdict) ok = false;
    } catch (const Error& e) {
        out["artinian"] = {{"error", e.what()}};
        ok = false;
    }
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "series: " << out["series"].get<std::string>() << "\n";
        std::cout << "shape: " << shape_line(shape) << "\n";
        const auto& d = out["dimension"];
        if (d.contains("error"))
            std::cout << "dimension: unavailable (" << d["error"].get<std::string>() << ")\n";
        else
            std::cout << "dimension: A = " << d["A"] << ", B = " << d["B"].get<std::string>() << " on [" << wd.first
                      << ", " << wd.second << "]\n";
        const auto& m = out["multiplicity"];
        if (m.contains("error"))
            std::cout << "multiplicity: unavailable (" << m["error"].get<std::string>() << ")\n";
        else
            std::cout << "multiplicity: M = " << m["M"].get<std::string>() << ", L = " << m["L"]
                      << ", tail value = " << m["tail_value"].get<std::string>() << " on [" << wm.first << ", "
                      << wm.second << "]\n";
        const auto& a = out["artinian"];
        if (a.contains("error"))
            std::cout << "artinian: unavailable (" << a["error"].get<std::string>() << ")\n";
        else
            std::cout << "artinian: " << (a["verdict"].get<bool>() ? "true" : "false") << " ("
                      << a["reason"].get<std::string>() << "); width check on [" << wa.first << ", " << wa.second
                      << "]: " << (a["window_check"].get<bool>() ? "dimension 0" : "positive dimension") << "\n";
    }
    return ok ? 0 : kExitInternal;
}

int cmd_decompose(const std::string& file, const std::string& evec, bool json) {
    InputDocument doc = read_doc(file);
    ModulePresentation p = doc.effective();
    std::vector<int> e = parse_int_list(evec);
    DecompositionResult q = compute_q(p, e);
    ModulePresentation pm = minimalize(p);
    std::vector<bool> checks;
    for (int n = q.m + 1; n <= q.m + 4; ++n) checks.push_back(check_decomposition(pm, q, n, 6).holds);
    SizeCheck size = check_size(p, q);
    bool all = size.consistent && contains_at_generation_width(pm, q);
    for (bool b : checks) all = all && b;
    auto si_text = [](const std::optional<BigInt>& v) { return v ? v->str() : std::string("inf"); };
    if (json) {
        Json out{{"e", e}, {"m", q.m}, {"q_prime", q.q_prime ? to_json(*q.q_prime) : Json(nullptr)},
                 {"q_double_prime", to_json(q.q_double_prime)}, {"verified_widths", {q.m + 1, q.m + 4}},
                 {"verified", all}, {"si", si_text(size.si_m)}, {"si_q_double_prime", si_text(size.si_q)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "m = " << q.m << "\n";
        if (q.q_prime) std::cout << "Q' = " << gens_text(*q.q_prime) << "\n";
        std::cout << "Q'' = " << gens_text(q.q_double_prime) << "\n";
        std::cout << "si(M) = " << si_text(size.si_m) << ", si(Q'') = " << si_text(size.si_q) << "\n";
        std::cout << "decomposition on widths " << q.m + 1 << ".." << q.m + 4 << ": " << (all ? "verified" : "FAILED")
                  << "\n";
    }
    return all ? 0 : kExitInternal;
}

int cmd_words_encode(int c, const std::string& mono, bool json) {
    Monomial m;
    try {
        Json j = Json::parse(mono);
        m = detail::parse_monomial(j, c, "monomial", false);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaFailure(std::string("malformed monomial JSON: ") + e.what());
    } catch (const Error& e) {
        throw SchemaFailure(e.what());
    }
    Word w = encode(m);
    if (json)
        std::cout << Json{{"word", to_string(w)}}.dump(2) << "\n";
    else
        std::cout << to_string(w) << "\n";
    return 0;
}

int cmd_words_decode(int c, int d, const std::string& text, bool json) {
    Word w;
    try {
        w = parse_word(text);
    } catch (const Error& e) {
        throw SchemaFailure(e.what());
    }
    Monomial m = decode(w, c, d);
    if (json)
        std::cout << to_json(m).dump(2) << "\n";
    else
        std::cout << m.to_string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Hilbert series of monomial OI-modules"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine readable output");

    std::string file;
    bool reduce = true, raw = false, dot = false;
    auto* hil = app.add_subcommand("hilbert", "reduced series and denominator shape");
    hil->add_option("file", file, "input document")->required();
    hil->add_flag("--reduce", reduce, "reduce the rational function (default)");
    hil->add_flag("--raw", raw, "skip the final reduction");
    hil->add_flag("--dot", dot, "print the minimal automata in DOT format instead");
    hil->add_flag("--json", json, "machine readable output");

    int N = 5, J = 5;
    auto* exp = app.add_subcommand("expand", "coefficient table [s^n t^j]");
    exp->add_option("file", file)->required();
    exp->add_option("-N", N, "largest width")->check(CLI::NonNegativeNumber);
    exp->add_option("-J", J, "largest degree")->check(CLI::NonNegativeNumber);
    exp->add_flag("--json", json);

    auto* orc = app.add_subcommand("oracle", "compare the series with width-wise Hilbert series");
    orc->add_option("file", file)->required();
    orc->add_option("-N", N)->check(CLI::NonNegativeNumber);
    orc->add_option("-J", J)->check(CLI::NonNegativeNumber);
    orc->add_flag("--json", json);

    std::string window;
    auto* ana = app.add_subcommand("analyze", "asymptotic invariants and the Artinian criterion");
    ana->add_option("file", file)->required();
    ana->add_option("--window", window, "width window a:b for all fits");
    ana->add_flag("--json", json);

    std::string evec;
    auto* dec = app.add_subcommand("decompose", "the modules Q' and Q'' for x_{.,1}^e");
    dec->add_option("file", file)->required();
    dec->add_option("--e", evec, "comma separated exponents, one per variable row")->required();
    dec->add_flag("--json", json);

    int c = 1, d = 0;
    std::string payload;
    auto* words = app.add_subcommand("words", "the bijection between standard words and monomials");
    words->require_subcommand(1);
    auto* enc = words->add_subcommand("encode", "monomial (JSON object) to word");
    enc->add_option("monomial", payload, "e.g. {\"width\":2,\"pi\":[2],\"exponents\":[[0],[1]]}")->required();
    enc->add_option("--c", c)->check(CLI::PositiveNumber);
    enc->add_flag("--json", json);
    auto* dcd = words->add_subcommand("decode", "word to monomial");
    dcd->add_option("word", payload, "e.g. \"x1 t1 t0\"")->required();
    dcd->add_option("--c", c)->check(CLI::PositiveNumber);
    dcd->add_option("--d", d)->check(CLI::NonNegativeNumber);
    dcd->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitSchema;
    }

    try {
        if (*hil) return cmd_hilbert(file, raw || !reduce, json, dot);
        if (*exp) return cmd_expand(file, N, J, json);
        if (*orc) return cmd_oracle(file, N, J, json);
        if (*ana) return cmd_analyze(file, window, json);
        if (*dec) return cmd_decompose(file, evec, json);
        if (*enc) return cmd_words_encode(c, payload, json);
        if (*dcd) return cmd_words_decode(c, d, payload, json);
    } catch (const SchemaFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
