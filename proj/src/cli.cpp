#include "canonica/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "canonica/format.hpp"
#include "canonica/hecke.hpp"
#include "canonica/irreps.hpp"
#include "canonica/powers.hpp"
#include "canonica/qcoord.hpp"
#include "canonica/tableau.hpp"
#include "canonica/tensor.hpp"
#include "canonica/verify.hpp"
#include "json.hpp"

namespace canonica {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Label order of fixtures/kstar_3221_22211.txt.
const std::vector<std::string> kPaperOrder{
    "1,2,3;1,2;3,4;5", "1,2,3;1,2;3,5;4", "1,2,3;1,3;2,4;5", "1,2,3;1,3;2,5;4", "1,2,3;1,4;2,5;3",
    "1,2,4;1,2;3,5;3", "1,2,4;1,3;2,3;5", "1,2,4;1,3;2,5;3", "1,2,5;1,2;3,4;3", "1,2,5;1,3;2,3;4",
    "1,2,5;1,3;2,4;3", "1,3,4;1,3;2,5;2", "1,3,5;1,3;2,4;2"};

std::string poly_text(const LaurentPoly& p, char var = 'q') {
    std::string out;
    for (char c : p.to_string(var))
        if (c != '*') out += c;
    return out;
}

Permutation parse_permutation(const std::string& text, int d) {
    Permutation x = Permutation::parse(text);
    if (d > 0 && x.degree() != d)
        throw UsageError("permutation \"" + text + "\" does not have degree " + std::to_string(d));
    check_degree(x.degree());
    return x;
}

struct Options {
    // kl, parabolic-kl
    int d = 0;
    std::string x, y, la, poly = "n";
    // dual-canonical
    std::string space = "tensor", index, basis = "dual";
    int n = 0;
    // transition
    std::string kind, mu, nu, via = "lift", format = "text";
    bool paper_order = false;
    // rsk, rectify, crystal, qnf
    std::string word, tableau, op, expr;
    int i = 0;
    bool bar = false;
    // verify
    std::string suite = "all";
    int max_d = 4, max_n = 4, samples = 200;
    std::uint64_t seed = VerifyOptions{}.seed;
    int jobs = 0;
};

int cmd_kl(const Options& o, std::ostream& out) {
    Permutation x = parse_permutation(o.x, o.d), y = parse_permutation(o.y, o.d);
    if (x.degree() != y.degree()) throw UsageError("x and y have different degrees");
    out << poly_text(kl_polynomial(x, y), 't') << '\n';
    return 0;
}

int cmd_parabolic_kl(const Options& o, std::ostream& out) {
    Weight la = Weight::parse(o.la);
    check_degree(la.size());
    if (o.poly != "n" && o.poly != "m") throw UsageError("--poly is n or m");
    auto mod = ParabolicModule::get(la);
    auto value = [&](const Permutation& x, const Permutation& y) {
        return o.poly == "n" ? mod->n_poly(x, y) : mod->m_poly(x, y);
    };
    if (!o.x.empty() || !o.y.empty()) {
        if (o.x.empty() || o.y.empty()) throw UsageError("give both --x and --y, or neither");
        Permutation x = parse_permutation(o.x, la.size()), y = parse_permutation(o.y, la.size());
        if (!mod->contains(x) || !mod->contains(y)) throw UsageError("x and y must be minimal coset representatives");
        out << poly_text(value(x, y)) << '\n';
        return 0;
    }
    out << "# " << o.poly << "_{x,y} for lambda = " << la.to_string() << ", nonzero entries, x | y | value\n";
    for (const auto& x : mod->basis())
        for (const auto& y : mod->basis()) {
            LaurentPoly p = value(x, y);
            if (!p.is_zero()) out << x.to_string() << " | " << y.to_string() << " | " << poly_text(p) << '\n';
        }
    return 0;
}

template <class Terms>
void print_terms(const Terms& terms, const std::string& head, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "canonica/1";
        j["space"] = o.space;
        j["basis"] = o.basis;
        j["index"] = o.index;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [label, c] : terms) arr.push_back({{"index", label}, {"coefficient", poly_text(c)}});
        j["terms"] = std::move(arr);
        out << j.dump(1) << '\n';
        return;
    }
    if (o.format != "text") throw UsageError("dual-canonical supports --format text or json");
    out << "# " << head << '\n';
    for (const auto& [label, c] : terms) out << poly_text(c) << ' ' << label << '\n';
}

int cmd_dual_canonical(const Options& o, std::ostream& out) {
    const bool dual = o.basis == "dual";
    if (!dual && o.basis != "canonical") throw UsageError("--basis is dual or canonical");
    std::vector<std::pair<std::string, LaurentPoly>> terms;
    if (o.space == "tensor") {
        MultiIndex alpha = MultiIndex::parse(o.index);
        const int n = o.n ? o.n : alpha.max_letter();
        if (alpha.max_letter() > n) throw UsageError("index letter exceeds n");
        check_degree(alpha.size());
        TensorVector v = dual ? dual_canonical(alpha, n) : canonical(alpha, n);
        for (const auto& [g, c] : v.coeffs) terms.emplace_back(g.to_string(), c);
        print_terms(terms, dual ? "coefficients in the basis M_g" : "coefficients in the basis M*_g", o, out);
        return 0;
    }
    PowerKind kind;
    if (o.space == "sym") kind = dual ? PowerKind::Sym : PowerKind::SymTilde;
    else if (o.space == "ext") kind = dual ? PowerKind::Ext : PowerKind::ExtTilde;
    else throw UsageError("--space is tensor, sym or ext");
    Tableau A = Tableau::parse(o.index, is_row_kind(kind) ? Orientation::Row : Orientation::Col);
    if (!A.is_standard_form()) throw UsageError("index is not in standard form: " + o.index);
    if (!o.mu.empty() && Weight::parse(o.mu) != A.shape()) throw UsageError("index does not have shape mu");
    const int n = o.n ? o.n : A.max_entry();
    if (A.max_entry() > n) throw UsageError("index entry exceeds n");
    check_degree(A.size());
    PowerVector v = lifted_basis(kind, A, n);
    for (const auto& [B, c] : v.coeffs) terms.emplace_back(B.to_string(), c);
    const std::string names[] = {"M_B", "M*_B", "N_B", "N*_B"};
    print_terms(terms, "coefficients in the basis " + names[static_cast<int>(kind)], o, out);
    return 0;
}

int cmd_transition(const Options& o, std::ostream& out) {
    const Weight mu = Weight::parse(o.mu), nu = Weight::parse(o.nu);
    if (mu.size() != nu.size()) throw UsageError("mu and nu have different sizes");
    check_degree(mu.size());
    if (o.via != "lift" && o.via != "kl") throw UsageError("--via is lift or kl");
    if (o.paper_order && !(mu == Weight{3, 2, 2, 1} && nu == Weight{2, 2, 2, 1, 1}))
        throw UsageError("--paper-order needs --mu 3,2,2,1 --nu 2,2,2,1,1");
    const OutputFormat fmt = parse_format(o.format);
    const bool irrep = o.kind == "standard-to-dual-canonical";
    const PowerKind kind = irrep ? PowerKind::ExtTilde : parse_family(o.kind);
    TransitionMatrix t = o.via == "lift" ? transition(kind, mu, nu) : transition_kl(kind, mu, nu);
    LabeledMatrix m = irrep ? labeled(standard_to_dual_canonical(t)) : labeled(t);
    if (o.paper_order) m = restrict_to(m, kPaperOrder);
    out << format_matrix(m, fmt);
    return 0;
}

int cmd_rsk(const Options& o, std::ostream& out) {
    MultiIndex alpha = MultiIndex::parse(o.word);
    out << rsk_insert(alpha).to_string() << '\n';
    return 0;
}

int cmd_rectify(const Options& o, std::ostream& out) {
    Tableau A = Tableau::parse(o.tableau, Orientation::Col);
    if (!A.is_standard_form()) throw UsageError("columns must strictly increase: " + o.tableau);
    if (!o.mu.empty() && Weight::parse(o.mu) != A.shape()) throw UsageError("tableau does not have shape mu");
    out << rectify(A).to_string() << '\n';
    return 0;
}

int cmd_crystal(const Options& o, std::ostream& out) {
    MultiIndex alpha = MultiIndex::parse(o.word);
    if (o.op != "e" && o.op != "f") throw UsageError("--op is e or f");
    if (o.i < 1) throw UsageError("--i must be positive");
    auto r = o.op == "e" ? crystal_e(alpha, o.i) : crystal_f(alpha, o.i);
    out << (r ? r->to_string() : "0") << '\n';
    return 0;
}

int cmd_qnf(const Options& o, std::ostream& out) {
    NCPolynomial p = parse_qcoord(o.expr);
    if (o.bar) p = bar_qcoord(p);
    out << p.to_string() << '\n';
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    VerifyOptions v;
    v.max_d = o.max_d;
    v.max_n = o.max_n;
    v.seed = o.seed;
    v.samples = o.samples;
    check_degree(v.max_d);
    std::vector<std::string> suites;
    if (o.suite == "all") suites = suite_names();
    else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), o.suite) == names.end())
            throw UsageError("unknown suite: " + o.suite);
        suites.push_back(o.suite);
    }
    bool ok = true;
    for (const auto& name : suites) {
        SuiteReport r = run_suite(name, v);
        out << name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checked << " checks)\n";
        for (const auto& note : r.notes) out << "  note: " << note << '\n';
        for (const auto& f : r.failures) out << "  failure: " << f << '\n';
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"canonica: Kazhdan-Lusztig polynomials and canonical bases"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,y}(t) in S_d");
    kl->add_option("--d", o.d, "degree");
    kl->add_option("--x", o.x, "one-line notation, e.g. \"2 1 3 4\"")->required();
    kl->add_option("--y", o.y)->required();

    auto* pkl = app.add_subcommand("parabolic-kl", "n_{x,y} or m_{x,y} of the parabolic module");
    pkl->add_option("--la", o.la, "composition, e.g. 2,1")->required();
    pkl->add_option("--x", o.x);
    pkl->add_option("--y", o.y);
    pkl->add_option("--poly", o.poly, "n or m");

    auto* dc = app.add_subcommand("dual-canonical", "expand a dual canonical (or canonical) basis element");
    dc->add_option("--space", o.space, "tensor, sym or ext");
    dc->add_option("--index", o.index, "word (tensor) or tableau (sym, ext)")->required();
    dc->add_option("--mu", o.mu);
    dc->add_option("--n", o.n, "alphabet size");
    dc->add_option("--basis", o.basis, "dual or canonical");
    dc->add_option("--format", o.format, "text or json");

    auto* tr = app.add_subcommand("transition", "transition matrix of one weight block");
    tr->add_option("--kind", o.kind, "l, lstar, k, kstar or standard-to-dual-canonical")->required();
    tr->add_option("--mu", o.mu)->required();
    tr->add_option("--nu", o.nu)->required();
    tr->add_option("--via", o.via, "lift or kl");
    tr->add_flag("--paper-order", o.paper_order, "the 13 labels of the fixture table, in its order");
    tr->add_option("--format", o.format, "text, csv or json");

    auto* rsk = app.add_subcommand("rsk", "row insertion of a word");
    rsk->add_option("--word", o.word)->required();

    auto* rect = app.add_subcommand("rectify", "rectification of a column tableau");
    rect->add_option("--tableau", o.tableau)->required();
    rect->add_option("--mu", o.mu);

    auto* cr = app.add_subcommand("crystal", "crystal operator on a word");
    cr->add_option("--op", o.op, "e or f")->required();
    cr->add_option("--i", o.i)->required();
    cr->add_option("--word", o.word)->required();

    auto* qnf = app.add_subcommand("qnf", "normal form in the quantum coordinate algebra");
    qnf->add_option("--expr", o.expr)->required();
    qnf->add_flag("--bar", o.bar, "apply the bar involution");

    auto* ver = app.add_subcommand("verify", "run invariant suites");
    ver->add_option("--suite", o.suite, "suite name or all");
    ver->add_option("--max-d", o.max_d);
    ver->add_option("--max-n", o.max_n);
    ver->add_option("--seed", o.seed);
    ver->add_option("--samples", o.samples);

    app.add_option("--jobs", o.jobs, "worker threads")->envname("CANONICA_JOBS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (o.jobs > 0) set_parallel_jobs(o.jobs);

    try {
        if (*kl) return cmd_kl(o, out);
        if (*pkl) return cmd_parabolic_kl(o, out);
        if (*dc) return cmd_dual_canonical(o, out);
        if (*tr) return cmd_transition(o, out);
        if (*rsk) return cmd_rsk(o, out);
        if (*rect) return cmd_rectify(o, out);
        if (*cr) return cmd_crystal(o, out);
        if (*qnf) return cmd_qnf(o, out);
        if (*ver) return cmd_verify(o, out);
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace canonica
