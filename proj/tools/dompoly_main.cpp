#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dompoly/compute.hpp"
#include "dompoly/engines.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/reduction.hpp"
#include "dompoly/sequences.hpp"
#include "dompoly/verify.hpp"

namespace {

using namespace dompoly;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct GlobalOpts {
    std::string format = "text";
    int cap_brute = 26;
    int cap_product = kMaxVertices;
    std::uint64_t seed = 0xD0317AB1E;
};

void check_product_cap(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw CapacityError("graph has " + std::to_string(g.vertex_count()) +
                            " vertices, --cap-product is " + std::to_string(cap));
}

// "q*n+p" linear form: "n", "2n+1", "1/2n", "n-3", or a bare rational.
std::pair<Rational, Rational> parse_linear_form(const std::string& s) {
    auto npos = s.find('n');
    if (npos == std::string::npos) return {Rational(0), parse_rational(s)};
    std::string qs = s.substr(0, npos);
    if (!qs.empty() && qs.back() == '*') qs.pop_back();
    Rational q = qs.empty() ? Rational(1) : (qs == "-" ? Rational(-1) : parse_rational(qs));
    std::string ps = s.substr(npos + 1);
    Rational p = 0;
    if (!ps.empty()) {
        if (ps[0] == '+') ps.erase(0, 1);
        p = parse_rational(ps);
    }
    return {q, p};
}

nlohmann::json poly_json(const IntPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    return coeffs;
}

int cmd_compute(const GlobalOpts& g, const std::string& graph_expr, const std::string& method) {
    const Expr expr = parse_expr(graph_expr);
    if (expr.has_free_var())
        throw InvalidParameterError("compute needs a concrete graph; use `sequence` for families");
    check_product_cap(expr.instantiate(), g.cap_product);
    ComputeConfig cfg;
    cfg.cap_brute = g.cap_brute;
    const ComputeResult res = compute(expr, parse_method(method), cfg);
    if (g.format == "json") {
        nlohmann::json j;
        j["graph"] = expr.to_string();
        j["method"] = res.method_used;
        j["degree"] = res.poly.degree();
        j["coefficients"] = poly_json(res.poly);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "D(G,x) = " << res.poly.to_string() << "\n";
        std::cout << "method: " << res.method_used << "\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int max_n, int trials) {
    VerifyOptions opt;
    opt.seed = g.seed;
    opt.max_n = max_n;
    opt.trials = trials;
    std::vector<SuiteResult> results;
    if (suite == "all")
        for (const auto& name : suite_names()) results.push_back(run_suite(name, opt));
    else
        results.push_back(run_suite(suite, opt));
    bool all_pass = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (g.format == "json")
            report.push_back(nlohmann::json::parse(r.to_json()));
        else {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.suite << " (" << r.checks
                      << " checks)\n";
            for (const auto& f : r.failures) std::cout << "    " << f << "\n";
        }
    }
    if (g.format == "json") std::cout << report.dump() << "\n";
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_sequence(const GlobalOpts& g, const std::string& family_expr, long start, long terms,
                 const std::string& method, const std::string& coeff, bool use_ceil, bool polys,
                 bool gamma_number, const std::string& sum, const std::string& guess,
                 int max_order, int max_degree) {
    FamilySpec fam;
    fam.expr = parse_expr(family_expr);
    fam.n_begin = start;
    fam.n_end = start + terms - 1;
    if (terms < 1) throw InvalidParameterError("--terms must be >= 1");
    ComputeConfig cfg;
    cfg.cap_brute = g.cap_brute;
    const auto ps = family_polynomials(fam, parse_method(method), cfg);

    std::optional<RecurrenceSpec> rec;
    std::optional<VerifyReport> recheck;

    if (gamma_number) {
        if (g.format == "csv" || g.format == "text") {
            std::cout << "n,gamma\n";
            for (std::size_t i = 0; i < ps.size(); ++i)
                std::cout << (start + static_cast<long>(i)) << "," << ps[i].min_support() << "\n";
        } else {
            nlohmann::json j = nlohmann::json::array();
            for (std::size_t i = 0; i < ps.size(); ++i)
                j.push_back({{"n", start + static_cast<long>(i)}, {"gamma", ps[i].min_support()}});
            std::cout << j.dump() << "\n";
        }
        return kExitOk;
    }

    if (polys) {
        if (guess == "polyx") rec = guess_polyx_recurrence(ps, max_order, max_degree);
        if (g.format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (std::size_t i = 0; i < ps.size(); ++i)
                j.push_back({{"n", start + static_cast<long>(i)}, {"coefficients", poly_json(ps[i])}});
            std::cout << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < ps.size(); ++i)
                std::cout << "n=" << (start + static_cast<long>(i)) << ": " << ps[i].to_string()
                          << "\n";
        }
        if (rec) recheck = verify_recurrence(ps, *rec);
    } else {
        std::vector<BigInt> seq;
        if (!sum.empty()) {
            auto [q, p] = parse_linear_form(sum);
            std::vector<long> sizes;
            for (const auto& poly : ps) sizes.push_back(poly.degree() < 0 ? 0 : poly.degree());
            seq = partial_sum_sequence(ps, q, p, sizes);
        } else {
            CoeffIndexSpec spec;
            std::tie(spec.q, spec.p) = parse_linear_form(coeff.empty() ? "n" : coeff);
            spec.rounding =
                use_ceil ? CoeffIndexSpec::Rounding::Ceil : CoeffIndexSpec::Rounding::Floor;
            seq = extract_coeff_sequence(ps, spec, start);
        }
        if (guess == "cfinite") rec = guess_cfinite(seq, max_order);
        if (guess == "holonomic") rec = guess_holonomic(seq, max_order, max_degree);
        if (rec) recheck = verify_recurrence(seq, *rec);
        if (g.format == "json") {
            nlohmann::json j;
            nlohmann::json vals = nlohmann::json::array();
            for (const auto& v : seq) vals.push_back(v.str());
            j["start"] = start;
            j["values"] = vals;
            if (rec) {
                j["recurrence"] = nlohmann::json::parse(rec->to_json());
                j["recurrence_verified"] = recheck->ok;
            } else if (!guess.empty()) {
                j["recurrence"] = nullptr;
            }
            std::cout << j.dump() << "\n";
            return kExitOk;
        }
        std::cout << sequence_to_csv(seq, start);
    }
    if (rec && g.format != "json") {
        std::cout << "recurrence: " << rec->to_string() << "\n";
        std::cout << "re-verified: " << (recheck->ok ? "yes" : "NO") << "\n";
    } else if (!guess.empty() && !rec && g.format != "json") {
        std::cout << "recurrence: none found within bounds\n";
    }
    return kExitOk;
}

int cmd_interpolate(const GlobalOpts& g, const std::string& graph_expr, const std::string& gamma_s,
                    const std::string& oracle_kind) {
    const Expr expr = parse_expr(graph_expr);
    if (expr.has_free_var())
        throw InvalidParameterError("interpolate needs a concrete graph");
    const Graph graph = expr.instantiate();
    check_product_cap(graph, g.cap_product);
    const Rational gamma = parse_rational(gamma_s);
    EvaluationOracle oracle;
    if (oracle_kind == "brute" ||
        (oracle_kind == "auto" &&
         static_cast<long>(graph.vertex_count()) * (graph.vertex_count() + 1) <= g.cap_brute))
        oracle = brute_product_oracle(gamma, g.cap_brute);
    else
        oracle = composed_oracle(gamma, g.cap_brute);
    const ReductionTrace trace = interpolation_reduction(graph, oracle);
    std::cout << trace.to_json() << "\n";
    if (g.format == "text")
        std::cout << "recovered D(G,x) = " << trace.result.to_string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domination polynomial toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.fallthrough();  // allow global options after the subcommand name
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("DOMPOLY_FORMAT");
    app.add_option("--cap-brute", g.cap_brute, "brute-force vertex cap")
        ->check(CLI::PositiveNumber)
        ->envname("DOMPOLY_CAP_BRUTE");
    app.add_option("--cap-product", g.cap_product, "product vertex cap")
        ->check(CLI::PositiveNumber)
        ->envname("DOMPOLY_CAP_PRODUCT");
    app.add_option("--seed", g.seed, "seed for randomized verify suites")
        ->envname("DOMPOLY_SEED");

    auto* compute_cmd = app.add_subcommand("compute", "compute D(G,x) for one graph");
    std::string graph_expr, method = "auto";
    compute_cmd->add_option("--graph", graph_expr, "graph expression")->required();
    compute_cmd->add_option("--method", method, "engine selector")
        ->check(CLI::IsMember(
            {"auto", "brute", "recurrence", "formula", "gk2", "pnkr", "strong-compose"}));

    auto* verify_cmd = app.add_subcommand("verify", "run a cross-validation suite");
    std::string suite;
    int max_n = -1, trials = -1;
    verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
    verify_cmd->add_option("--max-n", max_n, "override the suite's size bound");
    verify_cmd->add_option("--trials", trials, "override the suite's trial count");

    auto* seq_cmd = app.add_subcommand("sequence", "family sequences and recurrence mining");
    std::string family_expr, coeff, sum, guess;
    long start = 1, terms = 10;
    bool use_ceil = false, polys = false, gamma_number = false;
    int max_order = 5, max_degree = 3;
    seq_cmd->add_option("--family", family_expr, "family expression with free n")->required();
    seq_cmd->add_option("--start", start, "first n");
    seq_cmd->add_option("--terms", terms, "number of family members");
    seq_cmd->add_option("--method", method, "engine selector");
    seq_cmd->add_option("--coeff", coeff, "coefficient index q*n+p");
    seq_cmd->add_flag("--ceil", use_ceil, "round the index up instead of down");
    seq_cmd->add_flag("--polys", polys, "emit the full polynomials");
    seq_cmd->add_flag("--gamma-number", gamma_number, "emit the domination-number table");
    seq_cmd->add_option("--sum", sum, "partial sums up to floor(q*|V|+p)");
    seq_cmd->add_option("--guess", guess, "recurrence guesser")
        ->check(CLI::IsMember({"cfinite", "holonomic", "polyx"}));
    seq_cmd->add_option("--max-order", max_order, "guesser order bound");
    seq_cmd->add_option("--max-degree", max_degree, "guesser coefficient-degree bound");

    auto* interp_cmd = app.add_subcommand("interpolate", "interpolation-reduction demo");
    std::string gamma_s, oracle_kind = "auto";
    interp_cmd->add_option("--graph", graph_expr, "graph expression")->required();
    interp_cmd->add_option("--gamma", gamma_s, "evaluation point, rational a/b")->required();
    interp_cmd->add_option("--oracle", oracle_kind, "oracle backend")
        ->check(CLI::IsMember({"auto", "brute", "compose"}));

    try {
        app.parse(argc, argv);
        if (compute_cmd->parsed()) return cmd_compute(g, graph_expr, method);
        if (verify_cmd->parsed()) return cmd_verify(g, suite, max_n, trials);
        if (seq_cmd->parsed())
            return cmd_sequence(g, family_expr, start, terms, method, coeff, use_ceil, polys,
                                gamma_number, sum, guess, max_order, max_degree);
        if (interp_cmd->parsed()) return cmd_interpolate(g, graph_expr, gamma_s, oracle_kind);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const dompoly::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const dompoly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dompoly::TooFewTermsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
