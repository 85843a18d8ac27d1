#include "homlie/cli.hpp"

#include "homlie/errors.hpp"
#include "homlie/extension.hpp"
#include "homlie/families.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace homlie {

namespace {

using json = nlohmann::ordered_json;

int parse_int_token(const std::string& token, const std::string& what) {
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw SyntaxError("expected an integer for " + what + ", got '" +
                              token + "'",
                          0);
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& what) {
    std::vector<int> out;
    for (const std::string& token : split(text, ','))
        out.push_back(parse_int_token(token, what));
    return out;
}

std::vector<std::vector<int>> parse_matrix(const std::string& text) {
    std::vector<std::vector<int>> rows;
    for (const std::string& row : split(text, ';'))
        rows.push_back(parse_int_list(row, "a matrix entry"));
    for (const auto& row : rows)
        if (row.size() != rows.size())
            throw SyntaxError(
                "matrix must be square, rows ';'-separated and entries "
                "','-separated",
                0);
    return rows;
}

std::pair<int, int> parse_range(const std::string& text) {
    const std::size_t pos = text.find("..");
    if (pos == std::string::npos)
        throw SyntaxError("range must have the form a..b, got '" + text + "'",
                          0);
    const int lo = parse_int_token(text.substr(0, pos), "the range start");
    const int hi = parse_int_token(text.substr(pos + 2), "the range end");
    if (lo > hi)
        throw SyntaxError("range '" + text + "' is empty", 0);
    return {lo, hi};
}

Rat parse_rational(const std::string& text) {
    const std::size_t pos = text.find('/');
    Int num, den(1);
    try {
        num = Int(pos == std::string::npos ? text : text.substr(0, pos));
        if (pos != std::string::npos) den = Int(text.substr(pos + 1));
    } catch (const std::exception&) {
        throw SyntaxError("expected an integer or p/q rational, got '" + text +
                              "'",
                          0);
    }
    if (den == 0) throw DivisionByZero("evaluation denominator is zero");
    return Rat(num, den);
}

// Every tuple in [-w, w]^arity, ascending lexicographically.
std::vector<std::vector<int>> box_indices(std::size_t arity, int w) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(arity, -w);
    while (true) {
        out.push_back(v);
        std::size_t i = arity;
        while (i > 0) {
            if (v[i - 1] < w) {
                ++v[i - 1];
                break;
            }
            v[i - 1] = -w;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

std::string fmt_tuple(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

json element_to_json(const HomLieElement& element) {
    json arr = json::array();
    for (const auto& [idx, coeff] : element.terms()) {
        json entry;
        if (idx.central)
            entry["index"] = "central";
        else
            entry["index"] = idx.index;
        entry["coeff"] = coeff.to_string();
        arr.push_back(entry);
    }
    return arr;
}

HomLieElement evaluate_element(const HomLieElement& element,
                               const std::map<std::string, Rat>& point) {
    static const ParamSetPtr no_params = ParamSet::make({});
    HomLieElement out;
    for (const auto& [idx, coeff] : element.terms()) {
        const Rat value = coeff.evaluate(point);
        if (value == 0) continue;
        const Scalar c = Scalar::rational(no_params, value);
        out += idx.central ? HomLieElement::central(c)
                           : HomLieElement::basis(idx.index, c);
    }
    return out;
}

std::string render_element(const HomLieElement& element,
                           const std::string& format,
                           const std::string& symbol) {
    return format == "latex" ? element.to_latex(symbol)
                             : element.to_string(symbol);
}

// ---------------------------------------------------------------------------
// Family construction from command-line options.
// ---------------------------------------------------------------------------

struct Options {
    std::string family;
    int s = 2;
    int k = 0;
    std::string alpha = "1";
    std::string q_capital = "1";
    std::string matrix;
    std::string g_tuple;
    std::string range = "-3..3";
    int window = -1; // -1: use the verb default
    std::string format = "text";
    std::string sigma;
    std::string tau = "t";
    std::string left, right;
    std::vector<int> entry;
    bool verify_suite = false;
    std::string at_q;
    std::vector<std::string> at;
    std::string what; // verify target
};

int pick_window(const Options& opt, int fallback) {
    if (opt.window < 0) return fallback;
    if (opt.window < 1)
        throw SyntaxError("--window must be at least 1", 0);
    return opt.window;
}

std::map<std::string, Rat> evaluation_point(const Options& opt) {
    std::map<std::string, Rat> point;
    if (!opt.at_q.empty()) point["q"] = parse_rational(opt.at_q);
    for (const std::string& assignment : opt.at) {
        const std::size_t pos = assignment.find('=');
        if (pos == std::string::npos || pos == 0)
            throw SyntaxError("--at expects name=value, got '" + assignment +
                                  "'",
                              0);
        point[assignment.substr(0, pos)] =
            parse_rational(assignment.substr(pos + 1));
    }
    return point;
}

/// A family bundled uniformly for table/verify verbs: closed-form bracket on
/// index tuples, matching generator context, and the index arity.
struct Family {
    std::string name;
    std::size_t arity = 1;
    ParamSetPtr ps;
    std::function<HomLieElement(const std::vector<int>&,
                                const std::vector<int>&)>
        closed;
    BracketContext context;
    json params; // echo of the defining parameters
};

Family make_family(const Options& opt) {
    if (opt.family.empty())
        throw SyntaxError("--family is required for this command", 0);
    const std::string& name = opt.family;
    if (name == "multivariate") {
        if (opt.matrix.empty() || opt.g_tuple.empty())
            throw SyntaxError(
                "--matrix and --G are required for the multivariate family",
                0);
        const auto S = parse_matrix(opt.matrix);
        const auto G = parse_int_list(opt.g_tuple, "a G entry");
        if (G.size() != S.size())
            throw ArityMismatch("--G must have one entry per matrix row");
        const std::size_t n = S.size();
        const ParamSetPtr ps = multivariate_params(n);
        const Scalar Q = parse_scalar(opt.q_capital, ps);
        std::vector<Scalar> scales;
        for (std::size_t i = 1; i <= n; ++i)
            scales.push_back(Scalar::param(ps, "q" + std::to_string(i)));
        json params;
        params["S"] = S;
        params["G"] = G;
        params["Q"] = Q.to_string();
        return Family{name, n, ps,
                      [S, G, Q, scales](const std::vector<int>& a,
                                        const std::vector<int>& b) {
                          return multivariate_bracket(a, b, S, G, Q, scales);
                      },
                      multivariate_context(S, G, Q, scales),
                      std::move(params)};
    }

    const ParamSetPtr ps = univariate_params();
    auto lift = [](std::function<HomLieElement(int, int)> f) {
        return [f = std::move(f)](const std::vector<int>& a,
                                  const std::vector<int>& b) {
            return f(a.at(0), b.at(0));
        };
    };
    if (name == "qwitt") {
        return Family{name, 1, ps,
                      lift([ps](int n, int m) {
                          return qwitt_bracket(n, m, ps);
                      }),
                      qwitt_context(ps), json::object()};
    }
    if (name == "symqdiff") {
        return Family{name, 1, ps,
                      lift([ps](int n, int m) {
                          return symqdiff_bracket(n, m, ps);
                      }),
                      symqdiff_context(ps), json::object()};
    }
    if (name == "nonlinear" || name == "submodule") {
        const Scalar alpha = parse_scalar(opt.alpha, ps);
        const int s = opt.s, k = opt.k;
        json params;
        params["s"] = s;
        params["k"] = k;
        params["alpha"] = alpha.to_string();
        if (name == "nonlinear") {
            return Family{name, 1, ps,
                          lift([s, k, alpha, ps](int n, int m) {
                              return nonlinear_bracket(n, m, s, k, alpha, ps);
                          }),
                          nonlinear_context(s, k, alpha, ps),
                          std::move(params)};
        }
        return Family{name, 1, ps,
                      lift([s, k, alpha, ps](int n, int m) {
                          return submodule_bracket(n, m, s, k, alpha, ps);
                      }),
                      submodule_context(s, k, alpha, ps), std::move(params)};
    }
    throw SyntaxError("unknown family '" + name +
                          "' (expected qwitt, nonlinear, submodule, "
                          "multivariate, or symqdiff)",
                      0);
}

MonomialEndo endo_from_expression(const std::string& text,
                                  const ParamSetPtr& ps,
                                  const std::string& flag) {
    const LaurentPoly image = parse_laurent(text, 1, ps);
    if (image.terms().size() != 1)
        throw NotAUnit(flag + " must be a single monomial c*t^s, got '" +
                       text + "'");
    const auto& [exp, coeff] = *image.terms().begin();
    return MonomialEndo::univariate(coeff, exp.at(0));
}

// ---------------------------------------------------------------------------
// Verbs.
// ---------------------------------------------------------------------------

int cmd_table(const Options& opt, std::ostream& out) {
    const Family family = make_family(opt);
    const auto point = evaluation_point(opt);

    std::vector<std::vector<int>> indices;
    std::string span;
    if (family.arity == 1) {
        const auto [lo, hi] = parse_range(opt.range);
        for (int n = lo; n <= hi; ++n) indices.push_back({n});
        span = opt.range;
    } else {
        const int w = pick_window(opt, 2);
        indices = box_indices(family.arity, w);
        span = "window " + std::to_string(w);
    }

    json entries = json::array();
    std::vector<std::string> lines;
    for (const auto& n : indices) {
        for (const auto& m : indices) {
            HomLieElement value = family.closed(n, m);
            if (!point.empty()) value = evaluate_element(value, point);
            if (opt.format == "json") {
                json entry;
                entry["left"] = n;
                entry["right"] = m;
                entry["result"] = element_to_json(value);
                entries.push_back(std::move(entry));
            } else if (opt.format == "latex") {
                lines.push_back("$[d_{" + fmt_tuple(n) + "}, d_{" +
                                fmt_tuple(m) +
                                "}] = " + value.to_latex("d") + "$");
            } else {
                lines.push_back("[d" + fmt_tuple(n) + ",d" + fmt_tuple(m) +
                                "] = " + value.to_string("d"));
            }
        }
    }

    if (opt.format == "json") {
        json doc;
        doc["family"] = family.name;
        doc["params"] = family.params;
        doc["span"] = span;
        if (!point.empty()) {
            json at;
            for (const auto& [name, value] : point)
                at[name] = value.str();
            doc["at"] = at;
        }
        doc["entries"] = std::move(entries);
        out << doc.dump(2) << "\n";
    } else {
        for (const std::string& line : lines) out << line << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const Family family = make_family(opt);
    const bool multivariate = family.arity > 1;

    struct Violation {
        std::string where;
        std::string defect;
    };
    std::vector<Violation> violations;
    long checks = 0;
    auto note = [&violations](std::string where, std::string defect) {
        if (violations.size() < 25)
            violations.push_back({std::move(where), std::move(defect)});
    };

    if (opt.what == "skew") {
        const int w = pick_window(opt, multivariate ? 2 : 5);
        const auto indices = box_indices(family.arity, w);
        for (const auto& n : indices) {
            for (const auto& m : indices) {
                ++checks;
                const HomLieElement defect =
                    family.closed(n, m) + family.closed(m, n);
                if (!defect.is_zero())
                    note(fmt_tuple(n) + "," + fmt_tuple(m),
                         defect.to_string("d"));
            }
        }
    } else if (opt.what == "oracle") {
        const int w = pick_window(opt, multivariate ? 2 : 4);
        const auto indices = box_indices(family.arity, w);
        std::vector<LaurentPoly> probes;
        for (const auto& r : indices)
            probes.push_back(LaurentPoly::monomial(Scalar(Int(1)), r));
        for (const auto& n : indices) {
            const LaurentPoly zn = LaurentPoly::monomial(Scalar(Int(1)), n);
            for (const auto& m : indices) {
                ++checks;
                const LaurentPoly zm =
                    LaurentPoly::monomial(Scalar(Int(1)), m);
                const HomLieElement via_generator =
                    HomLieElement::from_coefficient(
                        family.context.bracket(zn, zm));
                const HomLieElement defect =
                    via_generator - family.closed(n, m);
                if (!defect.is_zero()) {
                    note(fmt_tuple(n) + "," + fmt_tuple(m),
                         defect.to_string("d"));
                    continue;
                }
                if (!family.context.oracle_check(zn, zm, probes))
                    note(fmt_tuple(n) + "," + fmt_tuple(m),
                         "operator-composition mismatch");
            }
        }
    } else if (opt.what == "jacobi") {
        const int w = pick_window(opt, multivariate ? 2 : 4);
        const auto indices = box_indices(family.arity, w);
        std::vector<LaurentPoly> monomials;
        for (const auto& r : indices)
            monomials.push_back(LaurentPoly::monomial(Scalar(Int(1)), r));
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            for (std::size_t j = 0; j < monomials.size(); ++j) {
                for (std::size_t l = 0; l < monomials.size(); ++l) {
                    ++checks;
                    const LaurentPoly defect = family.context.six_term_defect(
                        monomials[i], monomials[j], monomials[l]);
                    if (!defect.is_zero())
                        note(fmt_tuple(indices[i]) + "," +
                                 fmt_tuple(indices[j]) + "," +
                                 fmt_tuple(indices[l]),
                             defect.to_string());
                }
            }
        }
    } else {
        throw SyntaxError("unknown verify target '" + opt.what +
                              "' (expected skew, oracle, or jacobi)",
                          0);
    }

    const bool ok = violations.empty();
    if (opt.format == "json") {
        json doc;
        doc["verb"] = "verify";
        doc["what"] = opt.what;
        doc["family"] = family.name;
        doc["params"] = family.params;
        doc["checks"] = checks;
        doc["ok"] = ok;
        json list = json::array();
        for (const auto& v : violations) {
            json item;
            item["at"] = v.where;
            item["defect"] = v.defect;
            list.push_back(std::move(item));
        }
        doc["violations"] = std::move(list);
        doc["truncated"] = violations.size() == 25;
        out << doc.dump(2) << "\n";
    } else {
        if (ok) {
            out << "verified " << opt.what << " for family " << family.name
                << ": " << checks << " checks, all defects exactly zero\n";
        } else {
            for (const auto& v : violations)
                out << "violation at " << v.where << ": defect " << v.defect
                    << "\n";
            out << violations.size() << " violation(s) shown of " << checks
                << " checks\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_generator(const Options& opt, std::ostream& out) {
    if (opt.sigma.empty())
        throw SyntaxError("--sigma is required for this command", 0);
    const ParamSetPtr ps = univariate_params();
    const MonomialEndo sigma = endo_from_expression(opt.sigma, ps, "--sigma");
    const MonomialEndo tau = endo_from_expression(opt.tau, ps, "--tau");
    const int w = pick_window(opt, 4);
    const TwistedDerivation gen =
        TwistedDerivation::canonical_generator(sigma, tau, w);
    if (opt.format == "json") {
        json doc;
        doc["divisor"] = gen.divisor().to_string();
        doc["prescale"] = gen.prescale().to_string();
        doc["window"] = w;
        out << doc.dump(2) << "\n";
    } else if (opt.format == "latex") {
        out << gen.divisor().to_latex() << "\n";
    } else {
        out << "divisor: " << gen.divisor().to_string() << "\n";
        out << "prescale: " << gen.prescale().to_string() << "\n";
    }
    return 0;
}

int cmd_delta(const Options& opt, std::ostream& out) {
    const Family family = make_family(opt);
    const LaurentPoly& delta = family.context.delta();
    if (opt.format == "json") {
        json doc;
        doc["family"] = family.name;
        doc["params"] = family.params;
        doc["delta"] = delta.to_string();
        out << doc.dump(2) << "\n";
    } else if (opt.format == "latex") {
        out << delta.to_latex() << "\n";
    } else {
        out << "delta: " << delta.to_string() << "\n";
    }
    return 0;
}

int cmd_eigensearch(const Options& opt, std::ostream& out) {
    if (opt.matrix.empty())
        throw SyntaxError("--matrix is required for this command", 0);
    const auto S = parse_matrix(opt.matrix);
    const auto basis = integer_eigenvectors(S);
    if (opt.format == "json") {
        json doc;
        doc["matrix"] = S;
        doc["basis"] = basis;
        out << doc.dump(2) << "\n";
    } else {
        out << "integer eigenvectors fixed by the transpose action: "
            << basis.size() << "\n";
        for (const auto& v : basis) out << "  " << fmt_tuple(v) << "\n";
    }
    return 0;
}

int cmd_virasoro(const Options& opt, std::ostream& out) {
    const ParamSetPtr ps = univariate_params();
    const auto point = evaluation_point(opt);

    if (opt.verify_suite) {
        const int w = pick_window(opt, 6);
        const AbstractHomLie base = qwitt_homlie(ps);
        CocycleData data;
        data.g = [ps](const std::vector<int>& x, const std::vector<int>& y) {
            return virasoro_cocycle(x.at(0), y.at(0), ps) / Scalar(Int(6));
        };
        data.f_center = [](const Scalar& a) { return a; };

        std::vector<std::pair<std::string, bool>> results;
        const CocycleReport report = check_cocycle_conditions(base, data, w);
        results.emplace_back("cocycle-conditions", report.ok);

        bool constructed = true;
        try {
            build_extension(base, data, w);
        } catch (const CocycleInvalid&) {
            constructed = false;
        }
        results.emplace_back("extension-construction", constructed);

        bool recurrence_ok = true;
        for (int n = -w; n <= w; ++n) {
            const Scalar zero;
            if (!(recurrence_defect(
                      [&ps](int j) { return recurrence_b1(j, ps); }, n, ps) ==
                  zero) ||
                !(recurrence_defect(
                      [&ps](int j) { return recurrence_b2(j, ps); }, n, ps) ==
                  zero))
                recurrence_ok = false;
        }
        results.emplace_back("recurrence-solutions", recurrence_ok);

        const Scalar q = Scalar::param(ps, "q");
        const bool independent =
            recurrence_b1(1, ps) == Scalar() &&
            recurrence_b2(1, ps) == q.inverse() * (Scalar::one(ps) + q);
        results.emplace_back("solution-independence", independent);

        const TrivialityResult verdict = triviality_check(base, data, w);
        const bool nontrivial =
            verdict.verdict == TrivialityResult::Verdict::Nontrivial &&
            verdict.conflict.has_value() &&
            verdict.conflict->first.left == std::vector<int>{1} &&
            verdict.conflict->first.right == std::vector<int>{-1} &&
            verdict.conflict->second.left == std::vector<int>{2} &&
            verdict.conflict->second.right == std::vector<int>{-2};
        results.emplace_back("nontriviality", nontrivial);

        bool all_ok = true;
        for (const auto& [label, ok] : results) all_ok = all_ok && ok;

        if (opt.format == "json") {
            json doc;
            doc["verb"] = "virasoro-verify";
            doc["window"] = w;
            json checks;
            for (const auto& [label, ok] : results)
                checks[label] = ok ? "pass" : "fail";
            doc["checks"] = std::move(checks);
            if (!report.ok) doc["violations"] = report.violations;
            doc["ok"] = all_ok;
            out << doc.dump(2) << "\n";
        } else {
            for (const auto& [label, ok] : results)
                out << label << ": " << (ok ? "pass" : "fail") << "\n";
            if (!report.ok)
                for (const auto& line : report.violations)
                    out << "  " << line << "\n";
        }
        return all_ok ? 0 : 1;
    }

    if (opt.entry.size() != 2)
        throw SyntaxError("--entry m n is required (or use --verify)", 0);
    const int m = opt.entry[0], n = opt.entry[1];
    HomLieElement value = virasoro_bracket(HomLieElement::basis({m}),
                                           HomLieElement::basis({n}), ps);
    if (!point.empty()) value = evaluate_element(value, point);
    if (opt.format == "json") {
        json doc;
        doc["left"] = std::vector<int>{m};
        doc["right"] = std::vector<int>{n};
        doc["result"] = element_to_json(value);
        out << doc.dump(2) << "\n";
    } else if (opt.format == "latex") {
        out << "$[L_{" << m << "}, L_{" << n << "}] = " << value.to_latex("L")
            << "$\n";
    } else {
        out << "[L(" << m << "),L(" << n << ")] = " << value.to_string("L")
            << "\n";
    }
    return 0;
}

int cmd_bracket(const Options& opt, std::ostream& out) {
    if (opt.sigma.empty() || opt.left.empty() || opt.right.empty())
        throw SyntaxError("--sigma, --left, and --right are required", 0);
    const ParamSetPtr ps = univariate_params();
    const MonomialEndo sigma = endo_from_expression(opt.sigma, ps, "--sigma");
    const MonomialEndo tau = endo_from_expression(opt.tau, ps, "--tau");
    const int w = pick_window(opt, 4);
    const TwistedDerivation gen =
        TwistedDerivation::canonical_generator(sigma, tau, w);
    const LaurentPoly a = parse_laurent(opt.left, 1, ps);
    const LaurentPoly b = parse_laurent(opt.right, 1, ps);
    const LaurentPoly coefficient = bracket_coefficient(gen, a, b);
    HomLieElement element = HomLieElement::from_coefficient(coefficient);
    const auto point = evaluation_point(opt);
    if (!point.empty()) element = evaluate_element(element, point);

    if (opt.format == "json") {
        json doc;
        doc["coefficient"] = coefficient.to_string();
        doc["element"] = element_to_json(element);
        out << doc.dump(2) << "\n";
    } else if (opt.format == "latex") {
        out << render_element(element, opt.format, "d") << "\n";
    } else {
        out << "coefficient: " << coefficient.to_string() << "\n";
        out << "element: " << element.to_string("d") << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Options opt;
    CLI::App app{"Exact bracket tables and identity verification for "
                 "twisted-derivation algebras",
                 "homlie"};
    app.require_subcommand(1);

    const auto add_family_flags = [&opt](CLI::App* sub) {
        sub->add_option("--family", opt.family,
                        "qwitt | nonlinear | submodule | multivariate | "
                        "symqdiff");
        sub->add_option("--s", opt.s, "twist exponent (nonlinear/submodule)");
        sub->add_option("--k", opt.k, "divisor exponent (nonlinear/submodule)");
        sub->add_option("--alpha", opt.alpha,
                        "prescale expression (nonlinear/submodule)");
        sub->add_option("--Q", opt.q_capital,
                        "prescale expression (multivariate)");
        sub->add_option("--matrix", opt.matrix,
                        "exponent matrix, e.g. \"1,1;0,1\"");
        sub->add_option("--G", opt.g_tuple, "divisor exponents, e.g. \"0,1\"");
    };
    const auto add_format = [&opt](CLI::App* sub) {
        sub->add_option("--format", opt.format, "text | json | latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };
    const auto add_window = [&opt](CLI::App* sub) {
        sub->add_option("--window", opt.window, "verification window");
    };
    const auto add_evaluation = [&opt](CLI::App* sub) {
        sub->add_option("--at-q", opt.at_q,
                        "evaluate at q = integer or p/q rational");
        sub->add_option("--at", opt.at,
                        "evaluate with name=value (repeatable)");
    };

    CLI::App* table = app.add_subcommand(
        "table", "structure-constant table of a family");
    add_family_flags(table);
    table->add_option("--range", opt.range, "index range a..b (one variable)");
    add_window(table);
    add_format(table);
    add_evaluation(table);

    CLI::App* verify = app.add_subcommand(
        "verify", "verify an identity on a window (exit 1 on violation)");
    verify->add_option("what", opt.what, "skew | oracle | jacobi")
        ->required();
    add_family_flags(verify);
    add_window(verify);
    add_format(verify);

    CLI::App* generator = app.add_subcommand(
        "generator", "canonical generator for given twists");
    generator->add_option("--sigma", opt.sigma, "image of t, e.g. \"q*t^2\"");
    generator->add_option("--tau", opt.tau, "image of t (default t)");
    add_window(generator);
    add_format(generator);

    CLI::App* delta = app.add_subcommand(
        "delta", "scaling factor of a family's twisted Jacobi identity");
    add_family_flags(delta);
    add_format(delta);

    CLI::App* eigensearch = app.add_subcommand(
        "eigensearch", "integer vectors fixed by the transpose action");
    eigensearch->add_option("--matrix", opt.matrix,
                            "exponent matrix, e.g. \"1,1;0,1\"");
    add_format(eigensearch);

    CLI::App* virasoro = app.add_subcommand(
        "virasoro", "central-extension bracket and verification suite");
    virasoro->add_option("--entry", opt.entry, "basis indices m n")
        ->expected(2);
    virasoro->add_flag("--verify", opt.verify_suite,
                       "run the full condition suite");
    add_window(virasoro);
    add_format(virasoro);
    add_evaluation(virasoro);

    CLI::App* bracket = app.add_subcommand(
        "bracket", "coefficient bracket for explicit twists and elements");
    bracket->add_option("--sigma", opt.sigma, "image of t");
    bracket->add_option("--tau", opt.tau, "image of t (default t)");
    bracket->add_option("--left", opt.left, "left element, e.g. \"t^2+1\"");
    bracket->add_option("--right", opt.right, "right element");
    add_window(bracket);
    add_format(bracket);
    add_evaluation(bracket);

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("homlie");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (table->parsed()) return cmd_table(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (generator->parsed()) return cmd_generator(opt, out);
        if (delta->parsed()) return cmd_delta(opt, out);
        if (eigensearch->parsed()) return cmd_eigensearch(opt, out);
        if (virasoro->parsed()) return cmd_virasoro(opt, out);
        if (bracket->parsed()) return cmd_bracket(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no command given\n";
    return 2;
}

} // namespace homlie
