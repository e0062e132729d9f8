#include "lqbetti/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lqbetti/koszul.hpp"
#include "lqbetti/linquot.hpp"
#include "lqbetti/parse.hpp"
#include "lqbetti/render.hpp"

namespace lqb {

namespace {

struct Options {
    std::string subcommand;
    std::string input;
    std::string corpus;
    std::string format = "text";
    std::string field_override;
    std::string order_override;
    std::string gen_order = "given";
    std::string method = "both";
    bool allow_nonminimal = false;
    bool all_orders = false;
    bool diagonal = false;
    int i_max = -1;
    int j_max = -1;
};

FieldSpec parse_field_flag(const std::string& s) {
    if (s == "QQ") return FieldSpec::qq();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        long long p = 0;
        std::string digits = s.substr(3, s.size() - 4);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad field '" + s + "'");
        p = std::stoll(digits);
        if (!PrimeField::is_prime(p))
            throw std::invalid_argument("field characteristic is not prime");
        return FieldSpec::gf(p);
    }
    throw std::invalid_argument("bad field '" + s + "': expected GF(p) or QQ");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const Options& opt, std::ostream& out, const nlohmann::json& doc,
          const std::string& text) {
    if (opt.format == "json")
        out << doc.dump(2) << "\n";
    else
        out << text;
}

// everything below runs with a concrete field
template <class F>
struct Driver {
    const Options& opt;
    IdealFile file;
    RingPtr<F> ring;
    std::vector<Polynomial<F>> gens;
    std::ostream& out;
    std::ostream& err;

    nlohmann::json base_doc() const {
        return {{"ring", ring_to_json(file.var_names, file.field, file.order)}};
    }

    std::string ring_line() const {
        std::string s = "ring";
        for (const auto& v : file.var_names) s += " " + v;
        return s + " : " + file.field.str() + " : " + file.order.str();
    }

    // The certificate backing the formulas, under the requested generator
    // order. For --order search the ideal must be monomial; the searched
    // order of the minimal generators is reported through `order_out`.
    struct CheckResult {
        bool ok = false;
        bool minimal = false;
        CertificateCore core;
        std::vector<std::string> colon_bases;  // rendered per step
        std::vector<std::string> order_out;    // generators in certified order
        std::size_t fail_step = 0;
        std::string reason;
        std::string witness;
    };

    CheckResult run_check() {
        CheckResult res;
        if (opt.gen_order == "search") {
            auto mono = as_monomials(gens);
            if (!mono)
                throw std::invalid_argument(
                    "--order search requires a monomial ideal");
            MonomialIdeal J = minimalize(ring->num_vars, *mono);
            auto found = lq_order_search(J, opt.all_orders);
            if (!found) {
                res.reason = "no linear-quotient order exists";
                return res;
            }
            res.ok = true;
            res.minimal = true;
            res.core = found->second.core;
            for (const auto& vars : found->second.step_vars) {
                std::string basis;
                for (int v : vars)
                    basis += (basis.empty() ? "" : ", ") + ring->var_names[v];
                res.colon_bases.push_back(basis);
            }
            for (const Monomial& u : found->first)
                res.order_out.push_back(mono_str(u, ring->var_names));
            return res;
        }

        auto chk = check_linear_quotients(gens, opt.allow_nonminimal);
        if (!chk.ok()) {
            res.fail_step = chk.fail_step;
            res.reason = chk.reason;
            if (chk.witness) res.witness = poly_str(*chk.witness);
            return res;
        }
        res.ok = true;
        res.minimal = chk.cert->core.minimal;
        res.core = chk.cert->core;
        for (const auto& span : chk.cert->spans) {
            std::string basis;
            for (const auto& l : span.basis)
                basis += (basis.empty() ? "" : ", ") + poly_str(l);
            res.colon_bases.push_back(basis);
        }
        for (const Polynomial<F>& g : gens) res.order_out.push_back(poly_str(g));
        return res;
    }

    nlohmann::json check_to_json(const CheckResult& res) const {
        nlohmann::json r;
        r["command"] = "check";
        r["order"] = opt.gen_order;
        r["ok"] = res.ok;
        if (!res.ok) {
            r["reason"] = res.reason;
            if (!res.witness.empty()) {
                r["step"] = res.fail_step + 1;
                r["witness"] = res.witness;
            }
            return r;
        }
        r["minimal"] = res.minimal;
        r["generators"] = res.order_out;
        nlohmann::json steps = nlohmann::json::array();
        for (std::size_t p = 0; p < res.core.steps(); ++p)
            steps.push_back({{"step", p + 1},
                             {"degree", res.core.degrees[p]},
                             {"rank", res.core.ranks[p]},
                             {"colon_basis", res.colon_bases[p]}});
        r["steps"] = steps;
        if (res.minimal) {
            r["regularity"] = regularity(res.core);
            r["projdim"] = projdim(res.core);
        }
        return r;
    }

    std::string check_to_text(const CheckResult& res) const {
        std::ostringstream s;
        s << ring_line() << "\n";
        if (!res.ok) {
            s << "linear quotients: no\n";
            if (res.witness.empty()) {
                s << res.reason << "\n";
            } else {
                s << "failed at step " << res.fail_step + 1 << ": " << res.reason
                  << "\n";
                s << "witness: " << res.witness << "\n";
            }
            return s.str();
        }
        s << "linear quotients: yes (order: " << opt.gen_order << ")\n";
        s << "minimal system: " << (res.minimal ? "yes" : "no") << "\n";
        for (std::size_t p = 0; p < res.core.steps(); ++p) {
            s << "step " << p + 1 << ": " << res.order_out[p] << "  degree "
              << res.core.degrees[p] << "  colon rank " << res.core.ranks[p]
              << "  basis { " << res.colon_bases[p] << " }\n";
        }
        if (res.minimal) {
            s << "regularity " << regularity(res.core) << "\n";
            s << "projective dimension " << projdim(res.core) << "\n";
        } else {
            s << "(non-minimal system: Betti formulas not applicable)\n";
        }
        return s.str();
    }

    int cmd_check() {
        CheckResult res = run_check();
        nlohmann::json doc = base_doc();
        doc["result"] = check_to_json(res);
        emit(opt, out, doc, check_to_text(res));
        return res.ok ? 0 : 1;
    }

    int cmd_betti() {
        nlohmann::json doc = base_doc();
        std::ostringstream text;
        text << ring_line() << "\n";

        std::optional<BettiTable> formula;
        CheckResult chk;
        if (opt.method == "formula" || opt.method == "both") {
            chk = run_check();
            if (!chk.ok) {
                doc["result"] = check_to_json(chk);
                emit(opt, out, doc, check_to_text(chk));
                return 1;
            }
            if (!chk.minimal) {
                doc["result"] = {{"command", "betti"},
                                 {"error", "non-minimal generating system"}};
                emit(opt, out, doc,
                     "non-minimal generating system: Betti formulas are not "
                     "applicable\n");
                return 1;
            }
            formula = betti_from_certificate(chk.core);
        }

        std::optional<BettiTable> oracle;
        if (opt.method == "oracle" || opt.method == "both") {
            if (opt.method == "oracle" && (opt.i_max < 0 || opt.j_max < 0))
                err << "warning: default window (i <= n, j <= maxdeg + n) may "
                       "truncate tables of ideals without linear quotients\n";
            oracle = betti_table_oracle(ring, gens, opt.i_max, opt.j_max);
        }

        nlohmann::json r;
        r["command"] = "betti";
        r["method"] = opt.method;
        const BettiTable& shown = formula ? *formula : *oracle;
        if (formula) {
            text << "betti (formula):\n" << render_betti_grid(*formula, opt.diagonal);
            r["regularity"] = regularity(chk.core);
            r["projdim"] = projdim(chk.core);
            text << "regularity " << regularity(chk.core) << "\n";
            text << "projective dimension " << projdim(chk.core) << "\n";
        }
        if (oracle && opt.method != "both")
            text << "betti (oracle):\n" << render_betti_grid(*oracle, opt.diagonal);

        int code = 0;
        if (formula && oracle) {
            bool agree = *formula == *oracle;
            r["agree"] = agree;
            if (agree) {
                text << "formula == oracle: yes\n";
            } else {
                code = 1;
                text << "formula == oracle: NO\n";
                text << "betti (oracle):\n"
                     << render_betti_grid(*oracle, opt.diagonal);
                r["oracle"] = betti_to_json(*oracle);
            }
        }
        doc["result"] = r;
        doc["betti"] = betti_to_json(shown);
        emit(opt, out, doc, text.str());
        return code;
    }

    int cmd_ek() {
        auto mono = as_monomials(gens);
        if (!mono) throw std::invalid_argument("ek requires a monomial ideal");
        MonomialIdeal J = minimalize(ring->num_vars, *mono);
        nlohmann::json doc = base_doc();
        if (!is_stable(J)) {
            doc["result"] = {{"command", "ek"}, {"stable", false}};
            emit(opt, out, doc, ring_line() + "\nideal is not stable\n");
            return 1;
        }
        BettiTable t = ek_betti(J);
        std::ostringstream text;
        text << ring_line() << "\n";
        text << "stable: yes\norder:";
        nlohmann::json order = nlohmann::json::array();
        for (const Monomial& u : ek_order(J)) {
            text << " " << mono_str(u, ring->var_names);
            order.push_back(mono_str(u, ring->var_names));
        }
        text << "\n" << render_betti_grid(t, opt.diagonal);
        text << "regularity " << t.regularity() << "\n";
        text << "projective dimension " << t.max_homological_degree() << "\n";
        doc["result"] = {{"command", "ek"}, {"stable", true}, {"order", order},
                         {"regularity", t.regularity()},
                         {"projdim", t.max_homological_degree()}};
        doc["betti"] = betti_to_json(t);
        emit(opt, out, doc, text.str());
        return 0;
    }

    int cmd_cwl() {
        CwlResult res = is_componentwise_linear(ring, gens);
        nlohmann::json doc = base_doc();
        std::ostringstream text;
        text << ring_line() << "\n";
        nlohmann::json comps = nlohmann::json::array();
        for (const ComponentReport& c : res.components) {
            comps.push_back(
                {{"j", c.j}, {"nonzero", c.nonzero}, {"linear", c.linear}});
            text << "component j=" << c.j << ": ";
            if (!c.nonzero)
                text << "zero\n";
            else
                text << (c.linear ? "linear resolution" : "NOT linear") << "\n";
        }
        text << "componentwise linear: "
             << (res.componentwise_linear ? "yes" : "no") << "\n";
        doc["result"] = {{"command", "cwl"},
                         {"componentwise_linear", res.componentwise_linear},
                         {"components", comps}};
        emit(opt, out, doc, text.str());
        return res.componentwise_linear ? 0 : 1;
    }

    // consistency battery for one parsed ideal: certificate (searching when
    // the given order fails on a monomial ideal), formula vs oracle,
    // Eliahou-Kervaire when stable, Herzog-Hibi, and the per-step colon
    // identity against the degree component.
    int cmd_compare(nlohmann::json& result, std::ostream& text) {
        bool pass = true;
        auto report = [&](const std::string& name, bool ok) {
            text << "  " << name << ": " << (ok ? "yes" : "NO") << "\n";
            result[name] = ok;
            pass = pass && ok;
        };

        auto chk = check_linear_quotients(gens, false);
        std::vector<Polynomial<F>> certified = gens;
        auto mono = as_monomials(gens);
        if (!chk.ok() && mono) {
            MonomialIdeal J = minimalize(ring->num_vars, *mono);
            auto found = lq_order_search(J, false);
            if (found) {
                certified = monomials_to_polys(ring, found->first);
                chk = check_linear_quotients(certified, false);
                text << "  (given order fails; using searched order)\n";
            }
        }
        if (!chk.ok()) {
            report("linear quotients", false);
            text << "  " << chk.reason << "\n";
            return 1;
        }
        report("linear quotients", true);

        BettiTable formula = betti_from_certificate(chk.cert->core);
        BettiTable oracle = betti_table_oracle(ring, certified);
        report("formula == oracle", formula == oracle);
        report("regularity == oracle", regularity(chk.cert->core) == oracle.regularity());
        report("projdim == oracle",
               projdim(chk.cert->core) == oracle.max_homological_degree());

        if (mono) {
            MonomialIdeal J = minimalize(ring->num_vars, *mono);
            if (is_stable(J)) report("ek == formula", ek_betti(J) == formula);
        }

        report("herzog-hibi", herzog_hibi_check(ring, certified).ok);

        bool lemma = true;
        std::vector<Polynomial<F>> prefix;
        for (const Polynomial<F>& f : certified) {
            int d = *f.homogeneous_degree();
            auto lhs = colon_principal(prefix, f);
            auto rhs = colon_principal(component_ideal(prefix, d, ring), f);
            if (!(lhs == rhs)) {
                lemma = false;
                break;
            }
            prefix.push_back(f);
        }
        report("colon == component colon", lemma);

        return pass ? 0 : 1;
    }
};

template <class F>
int run_driver(const Options& opt, const IdealFile& file, const F& field,
               std::ostream& out, std::ostream& err) {
    Driver<F> d{opt, file, nullptr, {}, out, err};
    d.ring = make_ring<F>(file.var_names, field, file.order);
    d.gens = realize<F>(file, d.ring);
    if (opt.subcommand == "check") return d.cmd_check();
    if (opt.subcommand == "betti") return d.cmd_betti();
    if (opt.subcommand == "ek") return d.cmd_ek();
    if (opt.subcommand == "cwl") return d.cmd_cwl();
    if (opt.subcommand == "compare") {
        nlohmann::json doc = d.base_doc();
        nlohmann::json result;
        result["command"] = "compare";
        std::ostringstream text;
        text << d.ring_line() << "\n";
        int code = d.cmd_compare(result, text);
        text << (code == 0 ? "PASS" : "FAIL") << "\n";
        doc["result"] = result;
        emit(opt, out, doc, text.str());
        return code;
    }
    throw std::logic_error("unhandled subcommand");
}

int run_one_input(const Options& opt, const std::string& text, std::ostream& out,
                  std::ostream& err) {
    IdealFile file = parse_ideal_file(text);
    if (!opt.field_override.empty()) file.field = parse_field_flag(opt.field_override);
    if (!opt.order_override.empty()) {
        if (opt.order_override == "grevlex")
            file.order = OrderSpec::grevlex();
        else if (opt.order_override == "lex")
            file.order = OrderSpec::lex();
        else
            throw std::invalid_argument("bad term order '" + opt.order_override + "'");
    }
    if (file.field.kind == FieldSpec::Kind::rationals)
        return run_driver<Rationals>(opt, file, Rationals(), out, err);
    return run_driver<PrimeField>(opt, file, PrimeField(file.field.p), out, err);
}

int run_corpus(const Options& opt, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opt.corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".ideal")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        err << "no .ideal files in '" << opt.corpus << "'\n";
        return 2;
    }
    int failures = 0;
    for (const fs::path& p : files) {
        out << "== " << p.filename().string() << " ==\n";
        try {
            int code = run_one_input(opt, read_file(p.string()), out, err);
            if (code != 0) ++failures;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            ++failures;
        }
    }
    out << files.size() - failures << "/" << files.size() << " files pass\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    Options opt;
    CLI::App app{"graded Betti numbers of ideals with linear quotients"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--field", opt.field_override, "override the file's field, GF(p) or QQ");
    app.add_option("--term-order", opt.order_override, "override the file's term order")
        ->check(CLI::IsMember({"grevlex", "lex"}));

    auto add_input = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("--input", opt.input, "ideal file");
        if (required) o->required();
    };

    CLI::App* check = app.add_subcommand("check", "certify linear quotients");
    add_input(check);
    check->add_option("--order", opt.gen_order, "generator order to certify")
        ->check(CLI::IsMember({"given", "search"}));
    check->add_flag("--allow-nonminimal", opt.allow_nonminimal,
                    "accept non-minimal generating systems");
    check->add_flag("--all-orders", opt.all_orders,
                    "search every order, not only degree-nondecreasing ones");

    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers");
    add_input(betti);
    betti->add_option("--method", opt.method, "computation path")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    betti->add_option("--order", opt.gen_order, "generator order for the formula")
        ->check(CLI::IsMember({"given", "search"}));
    betti->add_flag("--all-orders", opt.all_orders,
                    "search every order, not only degree-nondecreasing ones");
    betti->add_option("--i-max", opt.i_max, "oracle window: max homological degree");
    betti->add_option("--j-max", opt.j_max, "oracle window: max internal degree");
    betti->add_flag("--diagonal", opt.diagonal, "columns indexed by j - i");

    CLI::App* ek = app.add_subcommand("ek", "Eliahou-Kervaire data of a stable ideal");
    add_input(ek);
    ek->add_flag("--diagonal", opt.diagonal, "columns indexed by j - i");

    CLI::App* cwl = app.add_subcommand("cwl", "componentwise linearity via the oracle");
    add_input(cwl);

    CLI::App* compare = app.add_subcommand("compare", "formula/oracle consistency battery");
    add_input(compare, false);
    compare->add_option("--corpus", opt.corpus, "directory of .ideal files");

    std::vector<const char*> argv;
    argv.push_back("lqbetti");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    for (CLI::App* sub : {check, betti, ek, cwl, compare})
        if (sub->parsed()) opt.subcommand = sub->get_name();

    try {
        if (opt.subcommand == "compare" && !opt.corpus.empty())
            return run_corpus(opt, out, err);
        if (opt.input.empty()) {
            err << "--input is required\n";
            return 2;
        }
        return run_one_input(opt, read_file(opt.input), out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace lqb
