#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mzv/evaluator.hpp"
#include "mzv/finite_sums.hpp"
#include "mzv/harmonic.hpp"
#include "mzv/verify.hpp"

namespace {

using namespace mzv;

// split "m=(1,2),p=(1),a=-1" on top-level commas
std::map<std::string, std::string> split_params(const std::string& s) {
    std::map<std::string, std::string> out;
    int depth = 0;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        auto eq = cur.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("parameter needs key=value: " + cur);
        out[cur.substr(0, eq)] = cur.substr(eq + 1);
        cur.clear();
    };
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        cur += c;
    }
    flush();
    return out;
}

// l index of a circled product; the head entry may be 0
struct KyL {
    int head_exp;
    int head_sign;
    SignedIndex tail;
};

KyL parse_ky_l(const std::string& text) {
    auto comma = text.find(',');
    std::string head = comma == std::string::npos ? text : text.substr(0, comma);
    std::string rest = comma == std::string::npos ? "" : text.substr(comma + 1);
    if (head == "0") return {0, 1, parse_index(rest)};
    SignedIndex full = parse_index(text);
    return {full.exponent(0), full.sign(0), full.tail()};
}

void print_value(const BigFloat& v) {
    std::cout << v.to_string(40) << "  (error bound " << v.error_double() << ")\n";
}

int print_reports(const std::vector<InstanceReport>& reports, const VerifyOptions& opt) {
    for (const auto& r : reports) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.family << " " << r.params;
        if (r.residual != "0" && !r.residual.empty())
            std::cout << "  residual=" << r.residual;
        if (r.lhs_terms + r.rhs_terms > 0)
            std::cout << "  (" << r.lhs_terms + r.rhs_terms << " terms, " << r.millis
                      << " ms)";
        if (!r.notes.empty()) std::cout << "  [" << r.notes << "]";
        std::cout << "\n";
    }
    std::cout << (all_pass(reports) ? "all checks passed" : "FAILURES present") << "\n";
    if (!opt.json_path.empty()) {
        std::ofstream f(opt.json_path);
        f << reports_to_json(reports, opt);
    }
    return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and certified-precision toolkit for multiple zeta values"};
    app.require_subcommand(1);

    long prec = 128;
    double tol = 1e-20;
    long max_terms = 200000;
    unsigned long seed = 20240915;
    std::string json_path;
    app.add_option("--prec", prec, "working precision in bits")->capture_default_str();

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a single value");
    eval_cmd->require_subcommand(1);
    eval_cmd->fallthrough();
    std::string eval_idx, eval_args_str, eval_k, eval_l;
    long ky_terms = 200000;
    auto* eval_mzv_cmd = eval_cmd->add_subcommand("mzv", "alternating multiple zeta value");
    eval_mzv_cmd->fallthrough();
    eval_mzv_cmd->add_option("index", eval_idx, "signed index, e.g. -2,3")->required();
    auto* eval_li_cmd = eval_cmd->add_subcommand("li", "multiple polylogarithm");
    eval_li_cmd->fallthrough();
    eval_li_cmd->add_option("index", eval_idx, "exponent list, e.g. 2,1")->required();
    eval_li_cmd->add_option("--args", eval_args_str, "rational arguments, e.g. 1/2,1")->required();
    auto* eval_ky_cmd = eval_cmd->add_subcommand("ky", "circled-product value");
    eval_ky_cmd->fallthrough();
    eval_ky_cmd->add_option("k", eval_k, "k index")->required();
    eval_ky_cmd->add_option("l", eval_l, "l index (head may be 0)")->required();
    eval_ky_cmd->add_option("--max-terms", ky_terms, "series truncation for the direct route");

    // --- finite ---
    auto* fin_cmd = app.add_subcommand("finite", "exact finite harmonic sum");
    fin_cmd->fallthrough();
    long fin_n = 0;
    std::string fin_idx, fin_x;
    bool fin_star = false;
    fin_cmd->add_option("n", fin_n, "upper summation bound")->required();
    fin_cmd->add_option("index", fin_idx, "signed index");
    fin_cmd->add_flag("--star", fin_star, "non-strict (star) sum");
    fin_cmd->add_option("--x", fin_x, "parametric weight x (rational)");

    // --- algebra ---
    std::string alg_a, alg_b;
    auto* stuffle_cmd = app.add_subcommand("stuffle", "harmonic product of two indices");
    stuffle_cmd->add_option("first", alg_a)->required();
    stuffle_cmd->add_option("second", alg_b)->required();
    auto* star_cmd = app.add_subcommand("starexpand", "star expansion of an index");
    star_cmd->add_option("index", alg_a)->required();
    auto* circ_cmd = app.add_subcommand("circledstar", "circled product of two indices");
    circ_cmd->add_option("first", alg_a)->required();
    circ_cmd->add_option("second", alg_b)->required();

    // --- poset ---
    auto* poset_cmd = app.add_subcommand("poset", "labeled poset integrals");
    poset_cmd->require_subcommand(1);
    poset_cmd->fallthrough();
    std::string poset_file;
    auto* poset_eval_cmd = poset_cmd->add_subcommand("eval", "evaluate the integral");
    poset_eval_cmd->fallthrough();
    poset_eval_cmd->add_option("file", poset_file, "poset JSON file")->required();
    auto* poset_expand_cmd = poset_cmd->add_subcommand("expand", "list extension words");
    poset_expand_cmd->fallthrough();
    poset_expand_cmd->add_option("file", poset_file, "poset JSON file")->required();

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "verify an identity family or suite");
    verify_cmd->fallthrough();
    std::vector<std::string> verify_args;
    std::string params_str;
    verify_cmd->add_option("target", verify_args, "family name, or: suite <name>")
        ->expected(1, 2);
    verify_cmd->add_option("--params", params_str, "family parameters, e.g. m=0,n=1");
    verify_cmd->add_option("--tol", tol, "residual tolerance")->capture_default_str();
    verify_cmd->add_option("--json", json_path, "write a JSON report");
    verify_cmd->add_option("--seed", seed, "seed for sampled grids")->capture_default_str();
    verify_cmd->add_option("--max-terms", max_terms, "cap for direct series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Evaluator::Options eopt{static_cast<mpfr_prec_t>(prec), 16, max_terms};
        if (eval_mzv_cmd->parsed()) {
            Evaluator ev(eopt);
            print_value(ev.eval_mzv(parse_index(eval_idx)));
            return 0;
        }
        if (eval_li_cmd->parsed()) {
            Evaluator ev(eopt);
            std::vector<int> exps;
            for (int e : parse_index(eval_idx).parts) exps.push_back(e);
            std::vector<Rational> args;
            {
                std::stringstream ss(eval_args_str);
                std::string tok;
                while (std::getline(ss, tok, ',')) args.push_back(parse_rational(tok));
            }
            print_value(ev.eval(make_li(exps, args)));
            return 0;
        }
        if (eval_ky_cmd->parsed()) {
            Evaluator ev(eopt);
            SignedIndex k = parse_index(eval_k);
            KyL l = parse_ky_l(eval_l);
            BigFloat hi = ev.eval_ky_reduced(k, l.head_exp, l.head_sign, l.tail);
            BigFloat direct = ev.eval_ky(k, l.head_exp, l.head_sign, l.tail, ky_terms);
            std::cout << "reduced : ";
            print_value(hi);
            std::cout << "direct  : ";
            print_value(direct);
            return 0;
        }
        if (fin_cmd->parsed()) {
            SignedIndex idx = parse_index(fin_idx);
            Rational v;
            if (!fin_x.empty())
                v = parametric_star_eval(static_cast<int>(fin_n), idx, parse_rational(fin_x));
            else if (fin_star)
                v = mhss_eval(static_cast<int>(fin_n), idx);
            else
                v = mhs_eval(static_cast<int>(fin_n), idx);
            std::cout << format_rational(v) << "\n";
            return 0;
        }
        if (stuffle_cmd->parsed()) {
            std::cout << stuffle(parse_index(alg_a), parse_index(alg_b)).to_string() << "\n";
            return 0;
        }
        if (star_cmd->parsed()) {
            std::cout << star_expand(parse_index(alg_a)).to_string() << "\n";
            return 0;
        }
        if (circ_cmd->parsed()) {
            std::cout << circled_star(parse_index(alg_a), parse_index(alg_b)).to_string()
                      << "\n";
            return 0;
        }
        if (poset_eval_cmd->parsed() || poset_expand_cmd->parsed()) {
            std::ifstream f(poset_file);
            if (!f) throw std::invalid_argument("cannot open " + poset_file);
            std::stringstream buf;
            buf << f.rdbuf();
            Poset p = Poset::from_json(buf.str());
            if (poset_expand_cmd->parsed()) {
                for (const auto& [w, mult] : p.extension_words())
                    std::cout << mult << " * [" << w.to_string() << "]\n";
                std::cout << "extensions: " << p.extension_count() << "\n";
            } else {
                Evaluator ev(eopt);
                print_value(ev.eval_poset(p));
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (verify_args.empty()) {
                std::cerr << "verify needs a family or: suite <name>\n";
                return 2;
            }
            VerifyOptions vopt;
            vopt.prec = static_cast<mpfr_prec_t>(prec);
            vopt.tol = tol;
            vopt.max_terms = max_terms;
            vopt.seed = seed;
            vopt.json_path = json_path;
            std::vector<InstanceReport> reports;
            if (verify_args[0] == "suite") {
                if (verify_args.size() != 2) {
                    std::cerr << "verify suite needs a name; known:";
                    for (const auto& n : suite_names()) std::cerr << " " << n;
                    std::cerr << "\n";
                    return 2;
                }
                reports = run_suite(verify_args[1], vopt);
            } else {
                IdentityInstance inst =
                    make_instance(verify_args[0], split_params(params_str));
                reports.push_back(run_instance(inst, vopt));
            }
            return print_reports(reports, vopt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
