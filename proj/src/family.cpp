#include "supell/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supell {

namespace build {

Factor x() { return {Term{1, Coefficient::fixed(1)}}; }

Factor binomial(int k, long c) { return {Term{k, Coefficient::fixed(1)}, Term{0, Coefficient::fixed(c)}}; }

Factor palindromic(int k, int param) {
    return {Term{2 * k, Coefficient::fixed(1)}, Term{k, Coefficient::param(param)}, Term{0, Coefficient::fixed(1)}};
}

std::vector<Factor> palindromics(int k, int count, int first) {
    std::vector<Factor> out;
    for (int i = 0; i < count; ++i) out.push_back(palindromic(k, first + i));
    return out;
}

Factor lacunary(int top, int step, int count) {
    Factor f{Term{top, Coefficient::fixed(1)}};
    for (int j = 1; j <= count; ++j) f.push_back(Term{step * j, Coefficient::param(j)});
    f.push_back(Term{0, Coefficient::fixed(1)});
    return f;
}

Factor terms(std::vector<Term> t) { return t; }
Term fixed(int e, QuadExt c) { return {e, Coefficient::fixed(std::move(c))}; }
Term param(int e, int i) { return {e, Coefficient::param(i)}; }
Term scaled(int e, Rational s, int i) { return {e, Coefficient::scaled(std::move(s), i)}; }

EquationTemplate product(std::vector<Factor> factors, long radicand) { return {std::move(factors), radicand}; }

std::vector<Factor> operator+(std::vector<Factor> a, const std::vector<Factor>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace build

namespace {

int factor_degree(const Factor& f) {
    if (f.empty()) throw std::invalid_argument("empty factor");
    int d = 0;
    for (const auto& t : f) d = std::max(d, t.exponent);
    return d;
}

int lowest_exponent(const Factor& f) {
    int lo = f.front().exponent;
    for (const auto& t : f) lo = std::min(lo, t.exponent);
    return lo;
}

bool is_one(const Coefficient& c) { return c.kind == Coefficient::Kind::fixed && c.value == QuadExt(1); }

bool is_x(const Factor& f) { return f.size() == 1 && f[0].exponent == 1 && is_one(f[0].coeff); }

// x^k + c with c = +-1; returns (k, c).
std::optional<std::pair<int, int>> as_unit_binomial(const Factor& f) {
    if (f.size() != 2 || f[1].exponent != 0 || f[0].exponent < 1 || !is_one(f[0].coeff)) return std::nullopt;
    const auto& c = f[1].coeff;
    if (c.kind != Coefficient::Kind::fixed) return std::nullopt;
    if (c.value == QuadExt(1)) return std::pair{f[0].exponent, 1};
    if (c.value == QuadExt(-1)) return std::pair{f[0].exponent, -1};
    return std::nullopt;
}

// x^{2k} + a x^k + 1 with a parametric; returns k.
std::optional<int> as_palindromic(const Factor& f) {
    if (f.size() != 3) return std::nullopt;
    const int k = f[1].exponent;
    if (k < 1 || f[0].exponent != 2 * k || f[2].exponent != 0) return std::nullopt;
    if (!is_one(f[0].coeff) || !is_one(f[2].coeff) || !f[1].coeff.is_parametric()) return std::nullopt;
    return k;
}

std::string render_coefficient(const Coefficient& c, bool leading, bool constant_term) {
    // Produces the signed prefix for a term, e.g. "+", "-", "+a_1", "-33", "+2a_1".
    std::string body;
    bool negative = false;
    switch (c.kind) {
        case Coefficient::Kind::fixed: {
            if (!c.value.is_rational() && c.value.rational_part() != 0) {
                body = "(" + c.value.to_string() + ")";
            } else {
                body = c.value.to_string();
                if (body.front() == '-') {
                    negative = true;
                    body.erase(0, 1);
                }
                if (body == "1" && !constant_term) body.clear();
            }
            break;
        }
        case Coefficient::Kind::param: body = "a_" + std::to_string(c.index); break;
        case Coefficient::Kind::scaled: {
            Rational s = c.scale;
            if (s < 0) {
                negative = true;
                s = -s;
            }
            body = (s == 1 ? std::string() : to_string(s)) + "a_" + std::to_string(c.index);
            break;
        }
    }
    if (negative) return "-" + body;
    return leading ? body : "+" + body;
}

std::string render_factor(const Factor& f) {
    std::string out;
    bool leading = true;
    for (const auto& t : f) {
        out += render_coefficient(t.coeff, leading, t.exponent == 0);
        if (t.exponent >= 1) out += "x";
        if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
        leading = false;
    }
    return out;
}

QuadExt coefficient_value(const Coefficient& c, const std::map<int, Rational>& values, long radicand) {
    switch (c.kind) {
        case Coefficient::Kind::fixed:
            if (!c.value.is_rational() && c.value.radicand() != radicand) {
                throw RadicandMismatch("coefficient radicand differs from the template's");
            }
            return c.value;
        case Coefficient::Kind::param: {
            auto it = values.find(c.index);
            if (it == values.end()) throw std::out_of_range("no value for parameter a_" + std::to_string(c.index));
            return QuadExt(it->second);
        }
        case Coefficient::Kind::scaled: {
            auto it = values.find(c.index);
            if (it == values.end()) throw std::out_of_range("no value for parameter a_" + std::to_string(c.index));
            return QuadExt(c.scale * it->second);
        }
    }
    return QuadExt();
}

}  // namespace

int template_degree(const EquationTemplate& t) {
    if (t.factors.empty()) throw std::invalid_argument("empty equation template");
    int d = 0;
    for (const auto& f : t.factors) d += factor_degree(f);
    return d;
}

std::set<int> parameter_indices(const EquationTemplate& t) {
    std::set<int> out;
    for (const auto& f : t.factors) {
        for (const auto& term : f) {
            if (term.coeff.is_parametric()) out.insert(term.coeff.index);
        }
    }
    return out;
}

int parameter_count(const EquationTemplate& t) { return static_cast<int>(parameter_indices(t).size()); }

std::string render(const EquationTemplate& t) {
    if (t.factors.size() == 1) return render_factor(t.factors.front());
    std::string out;
    for (const auto& f : t.factors) {
        if (is_x(f)) {
            out += "x";
        } else {
            out += "(" + render_factor(f) + ")";
        }
    }
    return out;
}

int branch_count(int level, const EquationTemplate& t) {
    if (level < 2) throw std::domain_error("level must be at least 2");
    const int d = template_degree(t);
    if (d < 1) throw std::domain_error("deg f must be at least 1");
    if (d % level == 0) return d;
    if (std::gcd(d, level) != 1) {
        throw std::domain_error("non-superelliptic branch structure: deg f = " + std::to_string(d) +
                                " is neither divisible by nor coprime to n = " + std::to_string(level));
    }
    return d + 1;
}

int superelliptic_genus(int level, int branches) {
    if (level < 2) throw std::domain_error("level must be at least 2");
    if (branches < 3) throw std::domain_error("need at least three branch points");
    const long twice = static_cast<long>(level - 1) * (branches - 2);
    if (twice % 2 != 0) throw std::domain_error("non-integral genus (n-1)(B-2)/2");
    const long g = twice / 2;
    if (g <= 1) throw std::domain_error("genus " + std::to_string(g) + " is out of scope (need g >= 2)");
    return static_cast<int>(g);
}

std::vector<std::pair<int, int>> enumerate_levels(int genus) {
    if (genus < 2) throw std::domain_error("genus must be at least 2");
    std::vector<std::pair<int, int>> out;
    const int twice = 2 * genus;
    for (int a = 1; a <= twice; ++a) {
        if (twice % a == 0) out.emplace_back(a + 1, twice / a + 2);
    }
    return out;
}

Poly instantiate(const EquationTemplate& t, const std::map<int, Rational>& values) {
    if (t.factors.empty()) throw std::invalid_argument("empty equation template");
    Poly result = Poly::constant(QuadExt(1));
    for (const auto& f : t.factors) {
        Poly factor;
        for (const auto& term : f) {
            factor = factor + Poly::monomial(static_cast<unsigned>(term.exponent), coefficient_value(term.coeff, values, t.radicand));
        }
        result = result * factor;
    }
    return result;
}

std::map<int, Rational> prime_probe(const EquationTemplate& t) {
    std::map<int, Rational> values;
    long candidate = 5;
    auto is_prime = [](long p) {
        for (long q = 2; q * q <= p; ++q) {
            if (p % q == 0) return false;
        }
        return true;
    };
    for (int index : parameter_indices(t)) {
        while (!is_prime(candidate)) ++candidate;
        values[index] = candidate++;
    }
    return values;
}

std::optional<Signature> equation_signature(int level, const ReducedGroup& reduced, const EquationTemplate& t) {
    const int deg = template_degree(t);
    int zero_roots = 0;
    for (const auto& f : t.factors) {
        if (is_x(f)) {
            ++zero_roots;
        } else if (lowest_exponent(f) != 0) {
            return std::nullopt;
        }
    }
    if (zero_roots > 1) return std::nullopt;
    const bool zero_branched = zero_roots == 1;
    const bool infinity_branched = deg % level != 0;
    if (infinity_branched && std::gcd(deg, level) != 1) return std::nullopt;

    std::vector<int> orders;
    const int m = reduced.m();
    switch (reduced.kind()) {
        case ReducedKind::trivial: {
            orders.assign(static_cast<std::size_t>(deg + (infinity_branched ? 1 : 0)), level);
            break;
        }
        case ReducedKind::cyclic: {
            // x -> zeta_m x: 0 and infinity are the fixed points, every other
            // root lies in a free orbit of size m.
            for (const auto& f : t.factors) {
                if (is_x(f)) continue;
                for (const auto& term : f) {
                    if (term.exponent % m != 0) return std::nullopt;
                }
            }
            const int nonzero = deg - zero_roots;
            orders.assign(static_cast<std::size_t>(nonzero / m), level);
            orders.push_back(zero_branched ? m * level : m);
            orders.push_back(infinity_branched ? m * level : m);
            break;
        }
        case ReducedKind::dihedral: {
            // Special orbits: {0, inf} (stabilizer C_m), {x^m = 1} and {x^m = -1}
            // (stabilizer C_2). Everything else splits into orbits of size 2m.
            if (zero_branched != infinity_branched) return std::nullopt;
            bool plus_one = false;
            bool minus_one = false;
            int generic = 0;
            auto mark = [](bool& flag) {
                if (flag) return false;
                flag = true;
                return true;
            };
            for (const auto& f : t.factors) {
                if (is_x(f)) continue;
                if (auto k = as_palindromic(f)) {
                    if (*k % m != 0) return std::nullopt;
                    generic += *k / m;
                } else if (auto b = as_unit_binomial(f)) {
                    const auto [k, c] = *b;
                    if (k % m != 0) return std::nullopt;
                    const int j = k / m;
                    // roots have x^m = u with u^j = -c; u = 1 and u = -1 are the special values
                    const bool hits_one = (c == -1);
                    const bool hits_minus_one = (c == -1) ? (j % 2 == 0) : (j % 2 == 1);
                    if (hits_one && !mark(plus_one)) return std::nullopt;
                    if (hits_minus_one && !mark(minus_one)) return std::nullopt;
                    const int rest = j - (hits_one ? 1 : 0) - (hits_minus_one ? 1 : 0);
                    generic += rest / 2;
                } else {
                    return std::nullopt;
                }
            }
            orders.assign(static_cast<std::size_t>(generic), level);
            orders.push_back(zero_branched ? m * level : m);
            orders.push_back(plus_one ? 2 * level : 2);
            orders.push_back(minus_one ? 2 * level : 2);
            break;
        }
        default: return std::nullopt;
    }
    return Signature::from_orders(orders);
}

std::string to_string(const RowKey& key) {
    return "genus " + std::to_string(key.genus) + " Nr. " + std::to_string(key.nr);
}

int genus_of_family(int level, const EquationTemplate& t) { return superelliptic_genus(level, branch_count(level, t)); }

int genus_of_family(const FamilyRecord& rec) { return genus_of_family(rec.level, rec.equation); }

}  // namespace supell
