#pragma once

// Superelliptic families y^n = f(x): structural equation templates, table
// records, and the genus / branch-count bookkeeping that ties them together.

#include "supell/exact.hpp"
#include "supell/groups.hpp"
#include "supell/signature.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace supell {

/// Coefficient of one term of a factor: a fixed constant, a free parameter
/// a_i, or a rational multiple of one (as in -a_1 or 2a_1).
struct Coefficient {
    enum class Kind { fixed, param, scaled };

    Kind kind = Kind::fixed;
    QuadExt value{1};   // fixed
    int index = 0;      // param, scaled
    Rational scale{1};  // scaled

    static Coefficient fixed(QuadExt v) { return {Kind::fixed, std::move(v), 0, 1}; }
    static Coefficient param(int i) { return {Kind::param, QuadExt(1), i, 1}; }
    static Coefficient scaled(Rational s, int i) { return {Kind::scaled, QuadExt(1), i, std::move(s)}; }

    bool is_parametric() const { return kind != Kind::fixed; }
    friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

struct Term {
    int exponent = 0;
    Coefficient coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Terms in printed order; the factor's degree is its largest exponent.
using Factor = std::vector<Term>;

/// f(x) as an ordered product of factors over Q(sqrt radicand).
struct EquationTemplate {
    std::vector<Factor> factors;
    long radicand = 1;

    friend bool operator==(const EquationTemplate&, const EquationTemplate&) = default;
};

/// Builders for writing templates structurally.
namespace build {
/// The factor x.
Factor x();
/// x^k + c.
Factor binomial(int k, long c);
/// x^{2k} + a_i x^k + 1.
Factor palindromic(int k, int param);
/// palindromic(k, first), ..., palindromic(k, first + count - 1).
std::vector<Factor> palindromics(int k, int count, int first = 1);
/// x^top + sum_{j=1..count} a_j x^{step j} + 1.
Factor lacunary(int top, int step, int count);
/// Explicit term list.
Factor terms(std::vector<Term> t);
Term fixed(int e, QuadExt c);
Term param(int e, int i);
Term scaled(int e, Rational s, int i);
EquationTemplate product(std::vector<Factor> factors, long radicand = 1);
/// Concatenates factor lists.
std::vector<Factor> operator+(std::vector<Factor> a, const std::vector<Factor>& b);
}  // namespace build

/// Sum over factors of their largest exponent. Throws for an empty template.
int template_degree(const EquationTemplate& t);
/// Number of distinct parameter indices.
int parameter_count(const EquationTemplate& t);
std::set<int> parameter_indices(const EquationTemplate& t);

/// Text such as "x(x^10+a_1x^5+1)" or "(x^4+2sqrt(-3)x^2+1)(...)".
std::string render(const EquationTemplate& t);

/// Branch points of X -> X/<tau>: deg f, plus infinity when n does not divide deg f.
/// Throws std::domain_error when deg f is neither divisible by nor coprime to n.
int branch_count(int level, const EquationTemplate& t);

/// g = (n-1)(B-2)/2; throws when non-integral, B < 3, or g < 2.
int superelliptic_genus(int level, int branches);

/// All (n, B) with n >= 2, B >= 3 and (n-1)(B-2) = 2g, ordered by n.
std::vector<std::pair<int, int>> enumerate_levels(int genus);

/// Expands the product with a_i = values.at(i). Throws std::out_of_range
/// when a parameter has no value.
Poly instantiate(const EquationTemplate& t, const std::map<int, Rational>& values);

/// a_i = i-th prime starting at 5 (5, 7, 11, ...).
std::map<int, Rational> prime_probe(const EquationTemplate& t);

/// Signature of X -> X/G read off the equation, for trivial, cyclic and
/// dihedral reduced groups in their standard normal forms (x -> zeta_m x,
/// and x -> 1/x for the dihedral case). Roots of parametric factors are
/// taken to be generic. Returns nullopt when the reduced group is not handled
/// or the template is not invariant in the expected way.
std::optional<Signature> equation_signature(int level, const ReducedGroup& reduced, const EquationTemplate& t);

struct RowKey {
    int genus = 0;
    int nr = 0;
    friend auto operator<=>(const RowKey&, const RowKey&) = default;
    friend bool operator==(const RowKey&, const RowKey&) = default;
};

std::string to_string(const RowKey& key);

/// One row of a classification table, stored exactly as printed.
struct FamilyRecord {
    RowKey key;
    ReducedGroup reduced = ReducedGroup::trivial();
    std::optional<GroupLabel> group;
    int level = 2;
    /// Printed m column; nullopt when the cell is blank.
    std::optional<int> m;
    Signature signature;
    int delta = 0;
    EquationTemplate equation;
    bool blue = false;

    long group_order() const { return full_group_order(level, reduced); }
    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

/// superelliptic_genus(n, branch_count(n, equation)).
int genus_of_family(const FamilyRecord& rec);
int genus_of_family(int level, const EquationTemplate& t);

}  // namespace supell
