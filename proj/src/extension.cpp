#include "homlie/extension.hpp"

#include "homlie/derivation.hpp"
#include "homlie/errors.hpp"
#include "homlie/families.hpp"

#include <algorithm>

namespace homlie {

namespace {

std::string fmt_index(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

int norm_inf(const std::vector<int>& v) {
    int n = 0;
    for (int e : v) n = std::max(n, std::abs(e));
    return n;
}

// The zero tuple followed by every nonzero tuple of max-norm <= window.
std::vector<std::vector<int>> window_indices(std::size_t arity, int window) {
    std::vector<std::vector<int>> out;
    out.emplace_back(arity, 0);
    for (auto& v : window_exponents(arity, window)) out.push_back(std::move(v));
    return out;
}

// g extended linearly over the basis expansion of its second argument.
Scalar cochain_on_element(const CocycleData& cocycle, const std::vector<int>& x,
                          const HomLieElement& w) {
    Scalar out;
    for (const auto& [idx, coeff] : w.terms()) {
        if (idx.central)
            throw InternalError("base bracket produced a central part");
        out = out + coeff * cocycle.g(x, idx.index);
    }
    return out;
}

} // namespace

CocycleReport check_cocycle_conditions(const AbstractHomLie& base,
                                       const CocycleData& cocycle,
                                       int window) {
    CocycleReport report;
    auto fail = [&report](std::string line) {
        report.ok = false;
        if (report.violations.size() < 25)
            report.violations.push_back(std::move(line));
    };
    const auto indices = window_indices(base.arity, window);
    const Scalar zero;

    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = i; j < indices.size(); ++j) {
            const auto& x = indices[i];
            const auto& y = indices[j];
            const HomLieElement skew = base.bracket_on_basis(x, y) +
                                       base.bracket_on_basis(y, x);
            if (!skew.is_zero())
                fail("base-skew: [" + fmt_index(x) + "," + fmt_index(y) +
                     "] + [" + fmt_index(y) + "," + fmt_index(x) +
                     "] = " + skew.to_string());
            const Scalar alt = cocycle.g(x, y) + cocycle.g(y, x);
            if (!(alt == zero))
                fail("alternation: g" + fmt_index(x) + fmt_index(y) + " + g" +
                     fmt_index(y) + fmt_index(x) + " = " + alt.to_string());
        }
    }

    for (const auto& x : indices) {
        const Scalar lx = base.twist_eigenvalue(x);
        for (const auto& y : indices) {
            const Scalar gxy = cocycle.g(x, y);
            const Scalar defect =
                lx * base.twist_eigenvalue(y) * gxy - cocycle.f_center(gxy);
            if (!(defect == zero))
                fail("twist-compatibility: defect " + defect.to_string() +
                     " at " + fmt_index(x) + fmt_index(y));
        }
    }

    const Scalar one(Int(1));
    for (const auto& x : indices) {
        for (const auto& y : indices) {
            const HomLieElement wxy = base.bracket_on_basis(x, y);
            for (const auto& z : indices) {
                // Rotations (x,[y,z]), (y,[z,x]), (z,[x,y]).
                Scalar defect =
                    (one + base.twist_eigenvalue(x)) *
                        cochain_on_element(cocycle, x,
                                           base.bracket_on_basis(y, z)) +
                    (one + base.twist_eigenvalue(y)) *
                        cochain_on_element(cocycle, y,
                                           base.bracket_on_basis(z, x)) +
                    (one + base.twist_eigenvalue(z)) *
                        cochain_on_element(cocycle, z, wxy);
                if (!(defect == zero))
                    fail("cyclic: defect " + defect.to_string() + " at (" +
                         fmt_index(x) + "," + fmt_index(y) + "," +
                         fmt_index(z) + ")");
            }
        }
    }
    return report;
}

HomLieElement ExtendedAlgebra::bracket(const HomLieElement& x,
                                       const HomLieElement& y) const {
    return bilinear_bracket(bracket_fn(), x, y);
}

HomLieElement ExtendedAlgebra::twist(const HomLieElement& x) const {
    HomLieElement out;
    for (const auto& [idx, coeff] : x.terms()) {
        if (idx.central)
            out += HomLieElement::central(cocycle_.f_center(coeff));
        else
            out += HomLieElement::basis(
                idx.index, coeff * base_.twist_eigenvalue(idx.index));
    }
    return out;
}

BasisBracket ExtendedAlgebra::bracket_fn() const {
    auto bracket_on_basis = base_.bracket_on_basis;
    auto g = cocycle_.g;
    return [bracket_on_basis, g](const BasisIndex& a,
                                 const BasisIndex& b) -> HomLieElement {
        if (a.central || b.central) return HomLieElement::zero();
        HomLieElement out = bracket_on_basis(a.index, b.index);
        const Scalar gv = g(a.index, b.index);
        if (!(gv == Scalar())) out += HomLieElement::central(gv);
        return out;
    };
}

BasisTwist ExtendedAlgebra::twist_fn() const {
    auto eigenvalue = base_.twist_eigenvalue;
    auto f_center = cocycle_.f_center;
    return [eigenvalue, f_center](const BasisIndex& a) -> HomLieElement {
        if (a.central)
            return HomLieElement::central(f_center(Scalar(Int(1))));
        return HomLieElement::basis(a.index, eigenvalue(a.index));
    };
}

ExtendedAlgebra build_extension(AbstractHomLie base, CocycleData cocycle,
                                int window) {
    const CocycleReport report =
        check_cocycle_conditions(base, cocycle, window);
    if (!report.ok) {
        std::string msg = "extension data fails its conditions: " +
                          report.violations.front();
        if (report.violations.size() > 1)
            msg += " (and " + std::to_string(report.violations.size() - 1) +
                   " more)";
        throw CocycleInvalid(msg);
    }

    ExtendedAlgebra extension(std::move(base), std::move(cocycle));

    // Independent re-verification of the constructed object.
    std::vector<HomLieElement> gens;
    gens.push_back(HomLieElement::central());
    for (const auto& v : window_indices(extension.base().arity, window))
        gens.push_back(HomLieElement::basis(v));

    const BasisBracket br = extension.bracket_fn();
    const BasisTwist tw = extension.twist_fn();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            const HomLieElement xy = extension.bracket(gens[i], gens[j]);
            if (!(xy + extension.bracket(gens[j], gens[i])).is_zero())
                throw CocycleInvalid(
                    "constructed extension fails skew-symmetry at pair " +
                    std::to_string(i) + "," + std::to_string(j));
            if (!(extension.twist(xy) ==
                  extension.bracket(extension.twist(gens[i]),
                                    extension.twist(gens[j]))))
                throw CocycleInvalid(
                    "constructed extension twist is not multiplicative at "
                    "pair " +
                    std::to_string(i) + "," + std::to_string(j));
        }
    }
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens)
                if (!homlie_jacobi_defect(br, tw, x, y, z).is_zero())
                    throw CocycleInvalid(
                        "constructed extension fails the twisted Jacobi "
                        "identity on the window");
    return extension;
}

TrivialityResult triviality_check(const AbstractHomLie& base,
                                  const CocycleData& cocycle, int window) {
    // Scan pairs radius-by-radius, descending lexicographically within each
    // radius, so conflicts are discovered in a reproducible order.
    std::vector<std::vector<int>> indices = window_indices(base.arity, window);
    std::sort(indices.begin(), indices.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a > b;
              });

    struct Constraint {
        Scalar value;
        IndexPair source;
    };
    std::map<std::vector<int>, Constraint> constraints;
    const Scalar zero;

    for (int radius = 0; radius <= window; ++radius) {
        for (const auto& x : indices) {
            if (norm_inf(x) > radius) continue;
            for (const auto& y : indices) {
                if (norm_inf(y) > radius) continue;
                if (std::max(norm_inf(x), norm_inf(y)) < radius) continue;
                const HomLieElement w = base.bracket_on_basis(x, y);
                const Scalar gv = cocycle.g(x, y);
                if (w.is_zero()) {
                    if (gv == zero) continue;
                    TrivialityResult out;
                    out.verdict = TrivialityResult::Verdict::Nontrivial;
                    out.conflict = {IndexPair{x, y}, IndexPair{x, y}};
                    return out;
                }
                if (w.terms().size() > 1)
                    throw UnderdeterminedWindow(
                        "the bracket of " + fmt_index(x) + "," + fmt_index(y) +
                        " is supported on " +
                        std::to_string(w.terms().size()) +
                        " basis indices; the window solve needs single-index "
                        "support");
                const auto& [bidx, lambda] = *w.terms().begin();
                if (bidx.central)
                    throw InternalError(
                        "base bracket produced a central part");
                const Scalar required = gv / lambda;
                auto it = constraints.find(bidx.index);
                if (it == constraints.end()) {
                    constraints.emplace(bidx.index,
                                        Constraint{required, IndexPair{x, y}});
                } else if (!(it->second.value == required)) {
                    TrivialityResult out;
                    out.verdict = TrivialityResult::Verdict::Nontrivial;
                    out.conflict = {it->second.source, IndexPair{x, y}};
                    return out;
                }
            }
        }
    }

    TrivialityResult out;
    out.verdict = TrivialityResult::Verdict::Trivial;
    for (const auto& [idx, constraint] : constraints)
        out.witness.emplace(idx, constraint.value);
    return out;
}

AbstractHomLie qwitt_homlie(const ParamSetPtr& ps) {
    AbstractHomLie algebra;
    algebra.name = "qwitt";
    algebra.arity = 1;
    algebra.bracket_on_basis = [ps](const std::vector<int>& x,
                                    const std::vector<int>& y) {
        return qwitt_bracket(x.at(0), y.at(0), ps);
    };
    algebra.twist_eigenvalue = [q = Scalar::param(ps, "q")](
                                   const std::vector<int>& x) {
        return q.pow(x.at(0));
    };
    return algebra;
}

Scalar virasoro_cocycle(int m, int n, const ParamSetPtr& ps) {
    if (m + n != 0) return Scalar::zero(ps);
    const Scalar q = Scalar::param(ps, "q");
    return q.pow(-m) * q_number(ps, m - 1) * q_number(ps, m) *
           q_number(ps, m + 1) / (Scalar::one(ps) + q.pow(m));
}

Scalar recurrence_defect(const std::function<Scalar(int)>& b, int n,
                         const ParamSetPtr& ps) {
    const Scalar q = Scalar::param(ps, "q");
    const Scalar one = Scalar::one(ps);
    const Scalar lhs = q * (one + q.pow(n + 1)) * q_number(ps, n - 1) * b(n + 1);
    const Scalar rhs = (one + q.pow(n)) * q_number(ps, n + 2) * b(n) -
                       (one + q) * q_number(ps, 2 * n + 1) * b(1);
    return lhs - rhs;
}

Scalar recurrence_b1(int m, const ParamSetPtr& ps) {
    return virasoro_cocycle(m, -m, ps);
}

Scalar recurrence_b2(int m, const ParamSetPtr& ps) {
    return Scalar::param(ps, "q").pow(-m) * q_number(ps, 2 * m);
}

ExtendedAlgebra virasoro_extension(const ParamSetPtr& ps, int window) {
    CocycleData data;
    data.g = [ps](const std::vector<int>& x, const std::vector<int>& y) {
        return virasoro_cocycle(x.at(0), y.at(0), ps) / Scalar(Int(6));
    };
    data.f_center = [](const Scalar& a) { return a; };
    return build_extension(qwitt_homlie(ps), std::move(data), window);
}

HomLieElement virasoro_bracket(const HomLieElement& x, const HomLieElement& y,
                               const ParamSetPtr& ps) {
    const BasisBracket on_basis = [ps](const BasisIndex& a,
                                       const BasisIndex& b) -> HomLieElement {
        if (a.central || b.central) return HomLieElement::zero();
        const int m = a.index.at(0), n = b.index.at(0);
        HomLieElement out = qwitt_bracket(m, n, ps);
        const Scalar gv = virasoro_cocycle(m, n, ps) / Scalar(Int(6));
        if (!(gv == Scalar())) out += HomLieElement::central(gv);
        return out;
    };
    return bilinear_bracket(on_basis, x, y);
}

} // namespace homlie
