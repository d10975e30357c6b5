#include "supell/groups.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace supell {

ReducedGroup ReducedGroup::cyclic(int m) {
    if (m < 2) throw std::invalid_argument("cyclic reduced group needs m >= 2 (use trivial for m = 1)");
    return ReducedGroup(ReducedKind::cyclic, m);
}

ReducedGroup ReducedGroup::dihedral(int m) {
    if (m < 2) throw std::invalid_argument("dihedral reduced group needs m >= 2");
    return ReducedGroup(ReducedKind::dihedral, m);
}

std::string ReducedGroup::name() const {
    switch (kind_) {
        case ReducedKind::trivial: return "trivial";
        case ReducedKind::cyclic: return "C_" + std::to_string(m_);
        case ReducedKind::dihedral: return "D_" + std::to_string(2 * m_);
        case ReducedKind::tetrahedral: return "A_4";
        case ReducedKind::octahedral: return "S_4";
        case ReducedKind::icosahedral: return "A_5";
    }
    return "trivial";
}

ReducedGroup ReducedGroup::parse(std::string_view name) {
    if (name == "trivial" || name == "{I}" || name == "1" || name == "C_1") return trivial();
    if (name == "A_4") return a4();
    if (name == "S_4") return s4();
    if (name == "A_5") return a5();
    if (name == "V_4") return dihedral(2);
    if (name.size() > 2 && name[1] == '_' && (name[0] == 'C' || name[0] == 'D')) {
        int k = 0;
        auto digits = name.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) {
            if (name[0] == 'C') return k == 1 ? trivial() : cyclic(k);
            if (k % 2 == 0) return dihedral(k / 2);
        }
    }
    throw std::invalid_argument("unknown reduced group '" + std::string(name) + "'");
}

long reduced_order(const ReducedGroup& g) {
    switch (g.kind()) {
        case ReducedKind::trivial: return 1;
        case ReducedKind::cyclic: return g.m();
        case ReducedKind::dihedral: return 2L * g.m();
        case ReducedKind::tetrahedral: return 12;
        case ReducedKind::octahedral: return 24;
        case ReducedKind::icosahedral: return 60;
    }
    return 1;
}

bool is_cyclic_or_trivial(const ReducedGroup& g) {
    return g.kind() == ReducedKind::trivial || g.kind() == ReducedKind::cyclic;
}

long full_group_order(int level, const ReducedGroup& g) {
    if (level < 2) throw std::domain_error("level must be at least 2");
    return level * reduced_order(g);
}

namespace {

// Splits on '×' (UTF-8), 'x', '*' after stripping whitespace.
std::vector<std::string> split_factors(std::string_view text) {
    std::string compact;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') compact += ch;
    }
    static const std::string times = "\xC3\x97";
    std::vector<std::string> parts;
    std::string current;
    for (std::size_t i = 0; i < compact.size();) {
        if (compact.compare(i, times.size(), times) == 0) {
            parts.push_back(current);
            current.clear();
            i += times.size();
        } else if (compact[i] == 'x' || compact[i] == '*') {
            parts.push_back(current);
            current.clear();
            ++i;
        } else {
            current += compact[i++];
        }
    }
    parts.push_back(current);
    return parts;
}

long parse_count(std::string_view s, std::string_view whole) {
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
        throw std::invalid_argument("malformed group label '" + std::string(whole) + "'");
    }
    return v;
}

long factorial(long k) {
    long r = 1;
    for (long i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

GroupLabel parse_group_label(std::string_view text, std::optional<long> context_order) {
    auto parts = split_factors(text);
    bool opaque = false;
    long order = 1;
    for (const auto& raw : parts) {
        if (raw.empty()) throw std::invalid_argument("malformed group label '" + std::string(text) + "'");
        std::string_view atom = raw;
        long power = 1;
        // a trailing ^e applies to the whole atom
        if (auto caret = atom.rfind('^'); caret != std::string_view::npos) {
            power = parse_count(atom.substr(caret + 1), text);
            atom = atom.substr(0, caret);
        }
        if (atom == "K") {
            opaque = true;
            continue;
        }
        if (atom.size() < 3 || atom[1] != '_') throw std::invalid_argument("malformed group label '" + std::string(text) + "'");
        const char family = atom[0];
        const long k = parse_count(atom.substr(2), text);
        long factor_order = 0;
        switch (family) {
            case 'C': factor_order = k; break;
            case 'D': factor_order = k; break;  // D_k has order k
            case 'V':
                if (k != 4) throw std::invalid_argument("only V_4 is a recognized Klein group");
                factor_order = 4;
                break;
            case 'A': factor_order = k < 2 ? 1 : factorial(k) / 2; break;
            case 'S': factor_order = factorial(k); break;
            case 'G': opaque = true; continue;
            default: throw std::invalid_argument("malformed group label '" + std::string(text) + "'");
        }
        if (family == 'D' && k % 2 != 0) throw std::invalid_argument("dihedral order must be even in '" + std::string(text) + "'");
        for (long i = 0; i < power; ++i) order *= factor_order;
    }

    std::string normalized;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) normalized += "\xC3\x97";
        normalized += parts[i];
    }

    if (opaque) {
        if (parts.size() != 1) throw std::invalid_argument("opaque group '" + std::string(text) + "' cannot appear in a product");
        if (!context_order) throw std::invalid_argument("order of opaque group '" + std::string(text) + "' needs row context");
        return {normalized, *context_order, false};
    }
    return {normalized, order, true};
}

}  // namespace supell
