// Command-line front end: every pipeline stage behind a subcommand with
// stable text/JSON output. Exit codes: 0 success, 1 tested-false (e.g. a
// marked set that is not a basis), 2 input or validation error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mfam/json_io.hpp"
#include "mfam/oracle.hpp"
#include "mfam/scheme.hpp"

namespace {

using namespace mfam;

struct CommonOpts {
    std::size_t vars = 0;
    std::string ideal_text;
    std::string ideal_file;
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool ideal_required = true) {
    cmd->add_option("--vars", opts.vars, "number of variables x0..x(n)")->required();
    auto* pos = cmd->add_option("ideal", opts.ideal_text,
                                "ideal as comma-separated monomials, e.g. \"x2^2,x2*x1,x1^3\"");
    auto* file = cmd->add_option("--ideal-file", opts.ideal_file,
                                 "read the ideal from a file (text or JSON)");
    if (ideal_required) {
        pos->excludes(file);
    }
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", opts.output, "write the report to a file instead of stdout");
}

MonomialIdeal load_ideal(const CommonOpts& opts) {
    if (!opts.ideal_file.empty()) {
        std::ifstream in(opts.ideal_file);
        if (!in) throw std::invalid_argument("cannot open " + opts.ideal_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string content = buffer.str();
        std::size_t first = content.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && content[first] == '{')
            return io::ideal_from_json(io::json::parse(content));
        return MonomialIdeal::parse(content, opts.vars);
    }
    if (opts.ideal_text.empty()) throw std::invalid_argument("no ideal given");
    return MonomialIdeal::parse(opts.ideal_text, opts.vars);
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(opts.output);
        if (!out) throw std::invalid_argument("cannot write " + opts.output);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

void emit_json(const CommonOpts& opts, const io::json& j) { emit(opts, j.dump(2)); }

std::string digits_or_tuple(const Monomial& m) {
    bool small = true;
    for (Exponent e : m.exponents()) small = small && e <= 9;
    if (!small) {
        std::string out = "[";
        for (std::size_t i = 0; i < m.var_count(); ++i) {
            if (i) out += ',';
            out += std::to_string(m[static_cast<VarIndex>(i)]);
        }
        return out + "]";
    }
    std::string out;
    for (Exponent e : m.exponents()) out += static_cast<char>('0' + e);
    return out;
}

std::string generator_label(const SchemeEquations& eqs, const SchemeGenerator& g) {
    const auto& gens = eqs.ideal.generators();
    return "P_{" + digits_or_tuple(gens[g.pair.base]) + "," + digits_or_tuple(gens[g.pair.partner]) +
           "}^{" + digits_or_tuple(g.residual) + "}";
}

std::string equations_text(const SchemeEquations& eqs) {
    std::ostringstream out;
    const auto& params = eqs.ring.params()->vars();
    out << "params: " << params.size() << "\n";
    for (std::size_t i = 0; i < params.size(); ++i)
        out << (i ? ", " : "") << params[i].display();
    if (!params.empty()) out << "\n";
    out << "generators: " << eqs.generators.size() << "\n";
    for (const SchemeGenerator& g : eqs.generators)
        out << generator_label(eqs, g) << " = " << g.poly.str() << "\n";
    return out.str();
}

struct MarkedSetOpts {
    std::string file;
    std::string ring;
};

void add_marked_set(CLI::App* cmd, MarkedSetOpts& opts, bool ring_required = false) {
    cmd->add_option("--marked-set", opts.file, "marked set JSON file")->required();
    auto* r = cmd->add_option("--ring", opts.ring,
                              "coefficient ring (ZZ, QQ, ZZ/p, ZZ[C]); overrides the file's ring");
    if (ring_required) r->required();
}

MarkedSet load_marked_set(const StableIdeal& ideal, const MarkedSetOpts& opts) {
    std::ifstream in(opts.file);
    if (!in) throw std::invalid_argument("cannot open " + opts.file);
    io::json j = io::json::parse(in);
    std::optional<std::string> override_ring;
    if (!opts.ring.empty()) override_ring = opts.ring;
    return io::marked_set_from_json(ideal, j, override_ring);
}

int run_check(const CommonOpts& opts) {
    MonomialIdeal ideal = load_ideal(opts);
    auto violation = stability_violation(ideal);
    if (violation) {
        if (opts.format == "json") {
            io::json j;
            j["ideal"] = io::ideal_json(ideal);
            j["strongly_stable"] = false;
            j["violation"] = violation->message();
            emit_json(opts, j);
        } else {
            emit(opts, "strongly_stable: false\n" + violation->message());
        }
        return 2;
    }
    StableIdeal J(ideal);
    TruncationWitness tw = is_m_truncation(J);
    if (opts.format == "json") {
        io::json j;
        j["ideal"] = io::ideal_json(ideal);
        j["strongly_stable"] = true;
        j["saturated"] = J.is_saturated();
        j["min_gen_degree"] = J.min_gen_degree();
        j["max_gen_degree"] = J.max_gen_degree();
        io::json t;
        t["is_truncation"] = tw.is_truncation;
        if (tw.is_truncation) t["m"] = tw.m;
        if (tw.saturation) t["saturation"] = io::ideal_json(tw.saturation->ideal());
        j["m_truncation"] = t;
        emit_json(opts, j);
    } else {
        std::ostringstream out;
        out << "ideal: " << J.str() << "\n";
        out << "strongly_stable: true\n";
        out << "saturated: " << (J.is_saturated() ? "true" : "false") << "\n";
        out << "min_gen_degree: " << J.min_gen_degree() << "\n";
        out << "max_gen_degree: " << J.max_gen_degree() << "\n";
        if (tw.is_truncation) {
            out << "m_truncation: yes (m = " << tw.m << ", saturation = "
                << (tw.saturation ? tw.saturation->str() : std::string("1")) << ")\n";
        } else {
            out << "m_truncation: no\n";
        }
        emit(opts, out.str());
    }
    return 0;
}

int run_sous_escalier(const CommonOpts& opts, unsigned degree) {
    StableIdeal J(load_ideal(opts));
    std::vector<Monomial> ns = J.sous_escalier(degree);
    if (opts.format == "json") {
        io::json j;
        j["degree"] = degree;
        io::json arr = io::json::array();
        for (const Monomial& m : ns) arr.push_back(io::monomial_json(m));
        j["monomials"] = arr;
        emit_json(opts, j);
    } else {
        std::ostringstream out;
        for (const Monomial& m : ns) out << m.str() << "\n";
        emit(opts, out.str());
    }
    return 0;
}

int run_star_decompose(const CommonOpts& opts, const std::string& monomial) {
    StableIdeal J(load_ideal(opts));
    Monomial m = Monomial::parse(monomial, opts.vars);
    StarDecomposition sd = J.star_decompose(m);
    if (opts.format == "json") {
        io::json j;
        j["monomial"] = io::monomial_json(m);
        j["generator"] = io::monomial_json(sd.generator);
        j["cofactor"] = io::monomial_json(sd.cofactor);
        emit_json(opts, j);
    } else {
        emit(opts, m.str() + " = (" + sd.generator.str() + ") *_J (" + sd.cofactor.str() + ")");
    }
    return 0;
}

int run_truncate(const CommonOpts& opts, unsigned degree) {
    StableIdeal J(load_ideal(opts));
    StableIdeal truncated = J.truncate(degree);
    if (opts.format == "json")
        emit_json(opts, io::ideal_json(truncated.ideal()));
    else
        emit(opts, truncated.str());
    return 0;
}

int run_hilbert(const CommonOpts& opts) {
    StableIdeal J(load_ideal(opts));
    HilbertData hd = hilbert_data(J);
    if (opts.format == "json") {
        emit_json(opts, io::hilbert_json(hd));
    } else {
        std::ostringstream out;
        out << "p(t) = " << hd.polynomial_text() << "\n";
        out << "gotzmann_number = " << hd.gotzmann_number << "\n";
        out << "rho = " << hd.rho << "\n";
        emit(opts, out.str());
    }
    return 0;
}

int run_reduce(const CommonOpts& opts, const MarkedSetOpts& ms, const std::string& poly_text,
               bool trace) {
    StableIdeal J(load_ideal(opts));
    MarkedSet set = load_marked_set(J, ms);
    Poly h = Poly::parse(set.ring(), opts.vars, poly_text);
    std::vector<ReduceStep> steps;
    ReduceOptions options;
    if (trace) options.trace = &steps;
    Poly remainder = reduce(set, h, options);
    if (opts.format == "json") {
        io::json j;
        j["input"] = io::poly_json(h);
        j["remainder"] = io::poly_json(remainder);
        if (trace) {
            io::json arr = io::json::array();
            for (const ReduceStep& s : steps) {
                io::json step;
                step["eliminated"] = io::monomial_json(s.eliminated);
                step["coefficient"] = s.coefficient.str();
                step["cofactor"] = io::monomial_json(s.cofactor);
                step["head"] = io::monomial_json(set.at(s.poly_index).head);
                arr.push_back(step);
            }
            j["steps"] = arr;
        }
        emit_json(opts, j);
    } else {
        std::ostringstream out;
        for (const ReduceStep& s : steps)
            out << "step: eliminate " << s.eliminated.str() << " (coefficient " << s.coefficient.str()
                << ") using " << s.cofactor.str() << " * f_{" << set.at(s.poly_index).head.str()
                << "}\n";
        out << remainder.str() << "\n";
        emit(opts, out.str());
    }
    return 0;
}

int run_basis_test(const CommonOpts& opts, const MarkedSetOpts& ms) {
    StableIdeal J(load_ideal(opts));
    MarkedSet set = load_marked_set(J, ms);
    BasisCertificate cert = is_marked_basis(set);
    if (opts.format == "json") {
        io::json j;
        j["basis"] = cert.basis;
        io::json arr = io::json::array();
        for (const auto& [pair, witness] : cert.witnesses) {
            io::json w;
            w["base"] = io::monomial_json(set.at(pair.base).head);
            w["variable"] = pair.variable;
            w["partner"] = io::monomial_json(set.at(pair.partner).head);
            w["remainder"] = io::poly_json(witness);
            arr.push_back(w);
        }
        j["witnesses"] = arr;
        emit_json(opts, j);
    } else {
        std::ostringstream out;
        out << "basis: " << (cert.basis ? "true" : "false") << "\n";
        for (const auto& [pair, witness] : cert.witnesses)
            out << "witness: S^EK(f_{" << set.at(pair.base).head.str() << "}, x" << pair.variable
                << ") -> " << witness.str() << "\n";
        emit(opts, out.str());
    }
    return cert.basis ? 0 : 1;
}

int run_aux_basis(const CommonOpts& opts, const MarkedSetOpts& ms, unsigned degree) {
    StableIdeal J(load_ideal(opts));
    MarkedSet set = load_marked_set(J, ms);
    AuxiliaryBasis aux = auxiliary_basis(set, degree);
    if (opts.format == "json") {
        io::json arr = io::json::array();
        for (const MarkedPolynomial& f : aux.polys) {
            io::json p;
            p["head"] = io::monomial_json(f.head);
            p["poly"] = io::poly_json(f.full());
            arr.push_back(p);
        }
        io::json j;
        j["degree"] = degree;
        j["polys"] = arr;
        emit_json(opts, j);
    } else {
        std::ostringstream out;
        for (const MarkedPolynomial& f : aux.polys)
            out << "f~_{" << f.head.str() << "} = " << f.full().str() << "\n";
        emit(opts, out.str());
    }
    return 0;
}

int run_obstructions(const CommonOpts& opts, const MarkedSetOpts& ms, unsigned degree) {
    StableIdeal J(load_ideal(opts));
    MarkedSet set = load_marked_set(J, ms);
    ObstructionModule module = obstructions(set, degree);
    if (opts.format == "json") {
        io::json arr = io::json::array();
        for (const Poly& g : module.generators) arr.push_back(io::poly_json(g));
        io::json j;
        j["degree"] = degree;
        j["generators"] = arr;
        emit_json(opts, j);
    } else {
        std::ostringstream out;
        if (module.generators.empty()) out << "0\n";
        for (const Poly& g : module.generators) out << g.str() << "\n";
        emit(opts, out.str());
    }
    return 0;
}

int run_mf_equations(const CommonOpts& opts, unsigned jobs) {
    StableIdeal J(load_ideal(opts));
    SchemeEquations eqs = marked_scheme_equations(J, jobs);
    if (opts.format == "json")
        emit_json(opts, io::equations_json(eqs));
    else
        emit(opts, equations_text(eqs));
    return 0;
}

int run_gs_equations(const CommonOpts& opts, const std::string& order, unsigned jobs) {
    StableIdeal J(load_ideal(opts));
    StratumEquations stratum = groebner_stratum_equations(J, parse_term_order(order), jobs);
    if (opts.format == "json") {
        emit_json(opts, io::stratum_json(stratum));
    } else {
        std::ostringstream out;
        out << equations_text(stratum.base);
        out << "order: " << term_order_name(stratum.order) << "\n";
        out << "vanishing_params: ";
        if (stratum.vanishing_params.empty()) out << "none";
        for (std::size_t i = 0; i < stratum.vanishing_params.size(); ++i)
            out << (i ? ", " : "") << stratum.vanishing_params[i].display();
        out << "\n";
        emit(opts, out.str());
    }
    return 0;
}

int run_embedding_report(const CommonOpts& opts, std::optional<unsigned> from,
                         std::optional<unsigned> to) {
    StableIdeal J(load_ideal(opts));
    EmbeddingReport report = (from && to) ? embedding_report(J, *from, *to) : embedding_report(J);
    if (opts.format == "json") {
        emit_json(opts, io::embedding_json(report));
    } else {
        std::ostringstream out;
        out << "p(t) = " << report.hilbert.polynomial_text()
            << ", gotzmann_number = " << report.hilbert.gotzmann_number
            << ", rho = " << report.hilbert.rho << "\n";
        for (const EmbeddingRow& r : report.rows)
            out << "s=" << r.s << ": equal_to_next=" << (r.equal_to_next ? "yes" : "no")
                << " status=" << (r.open ? "open" : "locally_closed") << "\n";
        emit(opts, out.str());
    }
    return 0;
}

int run_stratum_members(const CommonOpts& opts) {
    StableIdeal J(load_ideal(opts));
    std::vector<ParameterVariable> members = stratum_membership_demo(J);
    if (opts.format == "json") {
        io::json arr = io::json::array();
        for (const ParameterVariable& p : members) arr.push_back(io::param_json(p));
        io::json j;
        j["members"] = arr;
        emit_json(opts, j);
    } else {
        std::ostringstream out;
        if (members.empty()) out << "none\n";
        for (const ParameterVariable& p : members) out << p.display() << "\n";
        emit(opts, out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"marked families over strongly stable ideals"};
    app.require_subcommand(1);

    CommonOpts check_opts;
    auto* check = app.add_subcommand("check", "validate strong stability, saturation, truncation");
    add_common(check, check_opts);

    CommonOpts se_opts;
    unsigned se_degree = 0;
    auto* se = app.add_subcommand("sous-escalier", "monomials outside the ideal in one degree");
    add_common(se, se_opts);
    se->add_option("--degree", se_degree, "degree s")->required();

    CommonOpts sd_opts;
    std::string sd_monomial;
    auto* sd = app.add_subcommand("star-decompose", "unique generator*cofactor factorization");
    add_common(sd, sd_opts);
    sd->add_option("--monomial", sd_monomial, "monomial to decompose")->required();

    CommonOpts tr_opts;
    unsigned tr_degree = 0;
    auto* tr = app.add_subcommand("truncate", "minimal generators of J_{>=m}");
    add_common(tr, tr_opts);
    tr->add_option("--degree", tr_degree, "truncation degree m")->required();

    CommonOpts hi_opts;
    auto* hi = app.add_subcommand("hilbert", "Hilbert polynomial, Gotzmann number, rho");
    add_common(hi, hi_opts);

    CommonOpts red_opts;
    MarkedSetOpts red_ms;
    std::string red_poly;
    bool red_trace = false;
    auto* red = app.add_subcommand("reduce", "J-remainder of a homogeneous polynomial");
    add_common(red, red_opts);
    add_marked_set(red, red_ms);
    red->add_option("--poly", red_poly, "homogeneous polynomial")->required();
    red->add_flag("--trace", red_trace, "print each reduction step");

    CommonOpts bt_opts;
    MarkedSetOpts bt_ms;
    auto* bt = app.add_subcommand("basis-test", "marked-basis certificate via EK reductions");
    add_common(bt, bt_opts);
    add_marked_set(bt, bt_ms);

    CommonOpts aux_opts;
    MarkedSetOpts aux_ms;
    unsigned aux_degree = 0;
    auto* aux = app.add_subcommand("aux-basis", "induced marked set on J_s");
    add_common(aux, aux_opts);
    add_marked_set(aux, aux_ms);
    aux->add_option("--degree", aux_degree, "degree s")->required();

    CommonOpts obs_opts;
    MarkedSetOpts obs_ms;
    unsigned obs_degree = 0;
    auto* obs = app.add_subcommand("obstructions", "generators of the obstruction module");
    add_common(obs, obs_opts);
    add_marked_set(obs, obs_ms);
    obs->add_option("--degree", obs_degree, "degree s")->required();

    CommonOpts mf_opts;
    unsigned mf_jobs = 1;
    auto* mf = app.add_subcommand("mf-equations", "defining equations of the marked scheme");
    add_common(mf, mf_opts);
    mf->add_option("--jobs", mf_jobs, "parallel EK reductions");

    CommonOpts gs_opts;
    std::string gs_order = "deglex";
    unsigned gs_jobs = 1;
    auto* gs = app.add_subcommand("gs-equations", "Groebner stratum equations");
    add_common(gs, gs_opts);
    gs->add_option("--order", gs_order, "term order (lex, deglex, degrevlex)")->required();
    gs->add_option("--jobs", gs_jobs, "parallel EK reductions");

    CommonOpts er_opts;
    std::optional<unsigned> er_from, er_to;
    auto* er = app.add_subcommand("embedding-report", "per-degree truncation classification");
    add_common(er, er_opts);
    unsigned er_from_v = 0, er_to_v = 0;
    auto* er_from_o = er->add_option("--from", er_from_v, "first degree");
    auto* er_to_o = er->add_option("--to", er_to_v, "last degree");
    er_from_o->needs(er_to_o);
    er_to_o->needs(er_from_o);

    CommonOpts sm_opts;
    auto* sm = app.add_subcommand("stratum-members", "single-parameter generators of the scheme ideal");
    add_common(sm, sm_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(check_opts);
        if (se->parsed()) return run_sous_escalier(se_opts, se_degree);
        if (sd->parsed()) return run_star_decompose(sd_opts, sd_monomial);
        if (tr->parsed()) return run_truncate(tr_opts, tr_degree);
        if (hi->parsed()) return run_hilbert(hi_opts);
        if (red->parsed()) return run_reduce(red_opts, red_ms, red_poly, red_trace);
        if (bt->parsed()) return run_basis_test(bt_opts, bt_ms);
        if (aux->parsed()) return run_aux_basis(aux_opts, aux_ms, aux_degree);
        if (obs->parsed()) return run_obstructions(obs_opts, obs_ms, obs_degree);
        if (mf->parsed()) return run_mf_equations(mf_opts, mf_jobs);
        if (gs->parsed()) return run_gs_equations(gs_opts, gs_order, gs_jobs);
        if (er->parsed()) {
            if (er_from_o->count()) {
                er_from = er_from_v;
                er_to = er_to_v;
            }
            return run_embedding_report(er_opts, er_from, er_to);
        }
        if (sm->parsed()) return run_stratum_members(sm_opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
