#pragma once

#include <map>
#include <optional>
#include <string>

#include "homlie/bracket.hpp"

namespace homlie {

/// A bracket algebra given abstractly on a basis indexed by integer tuples,
/// together with a twist that acts diagonally on that basis.
struct AbstractHomLie {
    std::string name;
    std::size_t arity = 1;
    /// [e_x, e_y] expanded in the basis; never produces a central part.
    std::function<HomLieElement(const std::vector<int>&,
                                const std::vector<int>&)>
        bracket_on_basis;
    /// Eigenvalue of the twist on e_x.
    std::function<Scalar(const std::vector<int>&)> twist_eigenvalue;
};

/// Data for a one-dimensional central extension: the 2-cochain g with values
/// in the center, and the twist's action on the central line (applied to the
/// central coordinate; the identity for the standard instance).
struct CocycleData {
    std::function<Scalar(const std::vector<int>&, const std::vector<int>&)> g;
    std::function<Scalar(const Scalar&)> f_center;
};

/// Outcome of the window verification of the extension conditions.
struct CocycleReport {
    bool ok = true;
    /// One line per violation (condition name, tuple, defect), deterministic.
    std::vector<std::string> violations;
};

/// Verifies on all basis tuples with max-norm <= window:
///   - the base bracket is skew-symmetric,
///   - g is alternating,
///   - compatibility: lambda_x * lambda_y * g(x,y) == f_center(g(x,y)),
///   - the cyclic condition: sum_cyc g(x + twist(x), [y,z]) == 0.
CocycleReport check_cocycle_conditions(const AbstractHomLie& base,
                                       const CocycleData& cocycle,
                                       int window = 6);

/// The central extension of `base` by a one-dimensional center: basis
/// {e_x} plus one central element c, bracket [x, y] = [x, y]_base + g(x,y)*c,
/// [c, anything] = 0, twist e_x -> lambda_x e_x and a*c -> f_center(a)*c.
class ExtendedAlgebra {
public:
    const AbstractHomLie& base() const { return base_; }
    const CocycleData& cocycle() const { return cocycle_; }

    HomLieElement bracket(const HomLieElement& x, const HomLieElement& y) const;
    HomLieElement twist(const HomLieElement& x) const;

    /// The same bracket / twist packaged for the abstract identity checkers.
    BasisBracket bracket_fn() const;
    BasisTwist twist_fn() const;

private:
    friend ExtendedAlgebra build_extension(AbstractHomLie base,
                                           CocycleData cocycle, int window);
    ExtendedAlgebra(AbstractHomLie base, CocycleData cocycle)
        : base_(std::move(base)), cocycle_(std::move(cocycle)) {}

    AbstractHomLie base_;
    CocycleData cocycle_;
};

/// Checks the extension conditions on the window (CocycleInvalid on failure),
/// constructs the extended algebra, and re-verifies independently that the
/// result satisfies skew-symmetry, the twisted three-term Jacobi identity,
/// and twist multiplicativity on the window before returning it.
ExtendedAlgebra build_extension(AbstractHomLie base, CocycleData cocycle,
                                int window = 6);

/// One ordered pair of basis indices.
struct IndexPair {
    std::vector<int> left, right;
};

/// Verdict of the coboundary solve: either a witness s1 with
/// g(x,y) == s1-coefficient of [x,y] throughout the window, or two pairs
/// whose constraints on one s1 value contradict each other.
struct TrivialityResult {
    enum class Verdict { Trivial, Nontrivial };
    Verdict verdict = Verdict::Trivial;
    /// Trivial: value of s1 on every index constrained inside the window.
    std::map<std::vector<int>, Scalar> witness;
    /// Nontrivial: the clashing constraints (equal pairs when a single pair
    /// is already inconsistent).
    std::optional<std::pair<IndexPair, IndexPair>> conflict;
};

/// Solves g(x,y) = lambda * s1(j) over all window pairs, where
/// [x,y]_base = lambda * e_j. Requires every nonzero window bracket to be
/// supported on a single basis index (UnderdeterminedWindow otherwise).
/// Pairs are scanned radius-by-radius, descending lexicographically inside
/// each radius, so the reported conflict is deterministic.
TrivialityResult triviality_check(const AbstractHomLie& base,
                                  const CocycleData& cocycle, int window = 6);

// ---------------------------------------------------------------------------
// The scaling family as an abstract algebra, its central 2-cochain, and the
// resulting deformed Virasoro algebra.
// ---------------------------------------------------------------------------

/// Basis d_n, bracket ({n} - {m}) d_{n+m}, twist eigenvalue q^n.
AbstractHomLie qwitt_homlie(const ParamSetPtr& ps);

/// delta_{m+n,0} * (q^{-m}/(1+q^m)) * {m-1}{m}{m+1}.
Scalar virasoro_cocycle(int m, int n, const ParamSetPtr& ps);

/// Defect (left minus right) at n of the second-order recurrence
///   q(1+q^{n+1}){n-1} b(n+1) = (1+q^n){n+2} b(n) - (1+q){2n+1} b(1).
Scalar recurrence_defect(const std::function<Scalar(int)>& b, int n,
                         const ParamSetPtr& ps);

/// The two independent solutions of that recurrence:
///   b1(m) = (q^{-m}/(1+q^m)) {m-1}{m}{m+1},   b2(m) = q^{-m} {2m}.
Scalar recurrence_b1(int m, const ParamSetPtr& ps);
Scalar recurrence_b2(int m, const ParamSetPtr& ps);

/// Central extension of the scaling family by the cocycle scaled by 1/6:
///   [L_m, L_n] = ({m}-{n}) L_{m+n}
///                + delta_{m+n,0} (q^{-m}/(6(1+q^m))) {m-1}{m}{m+1} c,
/// with twist L_n -> q^n L_n, c -> c.
ExtendedAlgebra virasoro_extension(const ParamSetPtr& ps, int window = 6);

/// The bracket of that algebra extended bilinearly to arbitrary elements.
HomLieElement virasoro_bracket(const HomLieElement& x, const HomLieElement& y,
                               const ParamSetPtr& ps);

} // namespace homlie
