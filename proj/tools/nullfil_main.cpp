// nullfil: exact calculator for null-filiform Leibniz algebras.
//
// Subcommands map one-to-one onto the library operations: reduce, identity,
// classify, preimage, eval, dim, basis, codim, verify. Output is text by
// default and JSON with --format json; exit codes are 0 on success, 1 on
// domain errors (with a machine-readable tag in JSON mode), 2 on usage
// errors.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "nullfil/json_io.hpp"
#include "nullfil/nullfil.hpp"
#include "nullfil/selftest.hpp"

namespace {

using namespace nullfil;

struct Options {
    std::string algebra;  // "inf" or a positive integer
    std::string field = "q";
    std::string format = "text";
    std::string target;
    std::vector<std::string> assigns;
    std::string expr;
    unsigned m = 0;
    bool list_words = false;
    std::uint64_t seed = 20240807;
    std::vector<int> criteria;
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

AlgebraHandle parse_algebra(const std::string& text) {
    if (text == "inf") return AlgebraHandle::infinite();
    try {
        std::size_t used = 0;
        unsigned long n = std::stoul(text, &used);
        if (used != text.size() || n == 0) throw std::invalid_argument(text);
        return AlgebraHandle::finite(static_cast<unsigned>(n));
    } catch (const std::exception&) {
        throw error("bad_algebra", "--algebra expects a positive integer or 'inf'");
    }
}

// The scalar domain fixed for the invocation: "q" or "fp:P".
struct FieldChoice {
    bool rational = true;
    std::uint64_t p = 0;
};

FieldChoice parse_field(const std::string& text) {
    if (text == "q") return {true, 0};
    if (text.rfind("fp:", 0) == 0) {
        try {
            return {false, std::stoull(text.substr(3))};
        } catch (const std::exception&) {
        }
    }
    throw error("bad_field", "--field expects 'q' or 'fp:P' with P prime");
}

void emit(const Options& opt, const json& payload, const std::string& text) {
    if (json_mode(opt))
        std::cout << payload.dump() << "\n";
    else
        std::cout << text << "\n";
}

template <ScalarDomain D>
json normal_form_json(const NormalFormPoly<typename D::scalar_type>& nf, const D&) {
    json terms = json::array();
    for (const auto& [w, c] : nf.words()) {
        json letters = json::array();
        for (VarIndex k : w.letters()) letters.push_back(k);
        terms.push_back(json{{"word", letters}, {"coeff", c.str()}});
    }
    return json{{"algebra", to_json(nf.algebra())}, {"terms", terms}, {"text", nf.str()}};
}

template <ScalarDomain D>
int run_reduce(const Options& opt, const D& dom) {
    AlgebraHandle alg = parse_algebra(opt.algebra);
    auto f = parse_polynomial(opt.expr, dom);
    auto nf = normal_form(f, alg);
    emit(opt, normal_form_json(nf, dom), nf.str());
    return 0;
}

int run_identity(const Options& opt) {
    AlgebraHandle alg = parse_algebra(opt.algebra);
    RationalDomain q;
    auto f = parse_polynomial(opt.expr, q);
    bool rewrite_says = is_identity(f, alg);
    bool oracle_says = identity_oracle(f, alg);
    if (rewrite_says != oracle_says)
        throw error("oracle_mismatch", "canonical rewriting and the evaluation oracle disagree");
    emit(opt,
         json{{"algebra", to_json(alg)}, {"identity", rewrite_says}, {"oracle", oracle_says}},
         rewrite_says ? "true" : "false");
    return 0;
}

int run_classify(const Options& opt) {
    AlgebraHandle alg = parse_algebra(opt.algebra);
    RationalDomain q;
    auto f = parse_polynomial(opt.expr, q);
    ImageDescriptor desc = classify(f, alg);
    emit(opt, to_json(desc), desc.str());
    return 0;
}

template <ScalarDomain D>
int run_preimage(const Options& opt, const D& dom) {
    AlgebraHandle alg = parse_algebra(opt.algebra);
    auto f = parse_polynomial(opt.expr, dom);
    auto target = parse_element(opt.target, dom, alg);
    auto result = preimage(f, alg, target);

    using S = typename D::scalar_type;
    if (auto* a = std::get_if<PreimageAssignment<S>>(&result)) {
        json vars = json::object();
        std::string text;
        for (const auto& [k, v] : a->assignment) {
            vars["x" + std::to_string(k)] = to_json(v);
            if (!text.empty()) text += "\n";
            text += "x" + std::to_string(k) + " = " + v.str();
        }
        if (a->assignment.empty()) text = "(empty assignment)";
        emit(opt, json{{"result", "assignment"}, {"assignment", vars}}, text);
        return 0;
    }
    if (auto* nr = std::get_if<PreimageNeedsRoot<S>>(&result)) {
        emit(opt,
             json{{"result", "needs_root"}, {"exponent", nr->exponent}, {"value", nr->value.str()}},
             "needs_root: a " + std::to_string(nr->exponent) + "-th root of " + nr->value.str() +
                 " is required");
        return 0;
    }
    const auto& ni = std::get<PreimageNotInImage>(result);
    emit(opt, json{{"result", "not_in_image"}, {"reason", ni.reason}}, "not_in_image: " + ni.reason);
    return 0;
}

template <ScalarDomain D>
int run_eval(const Options& opt, const D& dom) {
    AlgebraHandle alg = parse_algebra(opt.algebra);
    auto f = parse_polynomial(opt.expr, dom);
    using S = typename D::scalar_type;
    std::map<VarIndex, Element<S>> assignment;
    for (const std::string& binding : opt.assigns) {
        auto eq = binding.find('=');
        if (eq == std::string::npos || binding.size() < 3 || binding[0] != 'x')
            throw error("bad_assignment", "--assign expects x<k>=<element>, e.g. x1=e2");
        unsigned k = 0;
        try {
            k = static_cast<unsigned>(std::stoul(binding.substr(1, eq - 1)));
        } catch (const std::exception&) {
            throw error("bad_assignment", "--assign expects x<k>=<element>");
        }
        if (k == 0) throw error("bad_assignment", "variables start at x1");
        assignment.insert_or_assign(k, parse_element(binding.substr(eq + 1), dom, alg));
    }
    Element<S> value = f.is_zero() && assignment.empty() ? Element<S>::zero(alg, dom.zero())
                                                         : evaluate(f, assignment);
    emit(opt, to_json(value), value.str());
    return 0;
}

int run_dim(const Options& opt) {
    AlgebraHandle alg = parse_algebra(opt.algebra);
    if (!alg.is_finite())
        throw error("infinite_algebra", "the relatively free algebra of L_inf is infinite-dimensional");
    if (opt.m == 0) throw error("bad_argument", "--m must be at least 1");
    BigInt value = dim_relatively_free(alg.dim(), opt.m);
    emit(opt, json{{"n", alg.dim()}, {"m", opt.m}, {"dim", value.str()}}, value.str());
    return 0;
}

int run_basis(const Options& opt) {
    AlgebraHandle alg = parse_algebra(opt.algebra);
    if (!alg.is_finite())
        throw error("infinite_algebra", "basis listing needs a finite-dimensional algebra");
    if (opt.m == 0) throw error("bad_argument", "--m must be at least 1");
    BasisCatalog cat = basis_monomials(alg.dim(), opt.m);
    std::string text;
    for (const auto& [s, words] : cat.by_degree) {
        text += "degree " + std::to_string(s) + ": " + std::to_string(words.size());
        if (opt.list_words) {
            text += "  [";
            for (std::size_t i = 0; i < words.size(); ++i)
                text += (i ? ", " : "") + detail::format_word(words[i]);
            text += "]";
        }
        text += "\n";
    }
    text += "unit: 1\ntotal: " + std::to_string(cat.total());
    emit(opt, to_json(cat, opt.list_words), text);
    return 0;
}

int run_codim(const Options& opt) {
    AlgebraHandle alg = parse_algebra(opt.algebra);
    if (opt.m == 0) throw error("bad_argument", "--m must be at least 1");
    unsigned value = multilinear_codim(alg, opt.m);
    emit(opt, json{{"algebra", to_json(alg)}, {"m", opt.m}, {"codim", value}}, std::to_string(value));
    return 0;
}

int run_verify(const Options& opt) {
    for (int id : opt.criteria)
        if (id < 1 || id > 9) throw error("bad_argument", "criteria are numbered 1..9");
    auto results = selftest::run_all(opt.seed, opt.criteria);
    bool all = true;
    if (json_mode(opt)) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all = all && r.pass;
        }
        std::cout << json{{"seed", opt.seed}, {"results", arr}, {"pass", all}}.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << "\n";
            if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
            all = all && r.pass;
        }
        std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for null-filiform Leibniz algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_algebra, bool needs_expr) {
        if (needs_algebra)
            sub->add_option("--algebra", opt.algebra, "dimension n, or 'inf'")->required();
        sub->add_option("--field", opt.field, "scalar domain: q or fp:P (default q)");
        sub->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (needs_expr) sub->add_option("expr", opt.expr, "polynomial expression")->required();
    };

    add_common(app.add_subcommand("reduce", "canonical form modulo the identities"), true, true);
    add_common(app.add_subcommand("identity", "identity test (rewriting + oracle concordance)"), true, true);
    add_common(app.add_subcommand("classify", "image descriptor of a multihomogeneous polynomial"), true, true);
    {
        auto* sub = app.add_subcommand("preimage", "solve f(...) = target");
        add_common(sub, true, true);
        sub->add_option("--target", opt.target, "target element, e.g. \"e3\" or \"2*e2 - 1/3*e4\"")
            ->required();
    }
    {
        auto* sub = app.add_subcommand("eval", "evaluate a polynomial on elements");
        add_common(sub, true, true);
        sub->add_option("--assign", opt.assigns, "variable binding x<k>=<element> (repeatable)");
    }
    {
        auto* sub = app.add_subcommand("dim", "dimension of the relatively free algebra");
        add_common(sub, true, false);
        sub->add_option("--m", opt.m, "number of variables")->required();
    }
    {
        auto* sub = app.add_subcommand("basis", "canonical basis monomials by degree");
        add_common(sub, true, false);
        sub->add_option("--m", opt.m, "number of variables")->required();
        sub->add_flag("--words", opt.list_words, "list the words, not just the counts");
    }
    {
        auto* sub = app.add_subcommand("codim", "multilinear codimension c_m");
        add_common(sub, true, false);
        sub->add_option("--m", opt.m, "number of variables")->required();
    }
    {
        auto* sub = app.add_subcommand("verify", "run the self-verification suites");
        add_common(sub, false, false);
        sub->add_option("--seed", opt.seed, "corpus seed (default 20240807)");
        sub->add_option("--criterion", opt.criteria, "run only the given criteria (repeatable)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        FieldChoice field = parse_field(opt.field);
        if (!field.rational && (sub == "identity" || sub == "classify" || sub == "verify"))
            throw error("field_not_supported",
                        sub + " runs over the rationals (the underlying theorems assume an infinite field)");

        if (sub == "identity") return run_identity(opt);
        if (sub == "classify") return run_classify(opt);
        if (sub == "dim") return run_dim(opt);
        if (sub == "basis") return run_basis(opt);
        if (sub == "codim") return run_codim(opt);
        if (sub == "verify") return run_verify(opt);

        if (field.rational) {
            RationalDomain dom;
            if (sub == "reduce") return run_reduce(opt, dom);
            if (sub == "preimage") return run_preimage(opt, dom);
            if (sub == "eval") return run_eval(opt, dom);
        } else {
            FpDomain dom(field.p);
            if (sub == "reduce") return run_reduce(opt, dom);
            if (sub == "preimage") return run_preimage(opt, dom);
            if (sub == "eval") return run_eval(opt, dom);
        }
        throw error("bad_command", "unknown subcommand " + sub);
    } catch (const parse_error& e) {
        if (json_mode(opt))
            std::cout << json{{"error", e.tag()}, {"message", e.what()}, {"position", e.position()}}.dump()
                      << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        if (json_mode(opt))
            std::cout << json{{"error", e.tag()}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        if (json_mode(opt))
            std::cout << json{{"error", "internal_error"}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
