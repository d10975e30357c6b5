#include "supell/signature.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace supell {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_positive(std::string_view token, std::string_view whole) {
    token = trim(token);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("malformed signature '" + std::string(whole) + "'");
    }
    return value;
}

std::vector<long> divisors_at_least_two(long n) {
    std::vector<long> out;
    for (long c = 2; c <= n; ++c) {
        if (n % c == 0) out.push_back(c);
    }
    return out;
}

}  // namespace

Signature Signature::from_entries(const std::vector<ConeEntry>& entries) {
    std::map<int, int> counts;
    for (const auto& e : entries) {
        if (e.order < 2) throw std::invalid_argument("cone order " + std::to_string(e.order) + " is below 2");
        if (e.multiplicity < 1) throw std::invalid_argument("cone multiplicity must be positive");
        counts[e.order] += e.multiplicity;
    }
    Signature s;
    for (auto [order, mult] : counts) s.entries_.push_back({order, mult});
    return s;
}

Signature Signature::from_orders(const std::vector<int>& orders) {
    std::vector<ConeEntry> entries;
    entries.reserve(orders.size());
    for (int c : orders) entries.push_back({c, 1});
    return from_entries(entries);
}

Signature Signature::parse(std::string_view text) {
    std::vector<ConeEntry> entries;
    if (trim(text).empty()) return {};
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view token = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
        const auto caret = token.find('^');
        if (caret == std::string_view::npos) {
            entries.push_back({parse_positive(token, text), 1});
        } else {
            entries.push_back({parse_positive(token.substr(0, caret), text), parse_positive(token.substr(caret + 1), text)});
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return from_entries(entries);
}

std::vector<int> Signature::orders() const {
    std::vector<int> out;
    for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.order);
    return out;
}

int Signature::size() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0, [](int acc, const ConeEntry& e) { return acc + e.multiplicity; });
}

int Signature::multiplicity(int order) const {
    for (const auto& e : entries_) {
        if (e.order == order) return e.multiplicity;
    }
    return 0;
}

Signature Signature::with_added(int order) const {
    auto entries = entries_;
    entries.push_back({order, 1});
    return from_entries(entries);
}

Signature Signature::with_removed(int order) const {
    auto entries = entries_;
    auto it = std::find_if(entries.begin(), entries.end(), [&](const ConeEntry& e) { return e.order == order; });
    if (it == entries.end()) throw std::invalid_argument("cone order " + std::to_string(order) + " not in signature");
    if (--it->multiplicity == 0) entries.erase(it);
    return from_entries(entries);
}

std::string Signature::to_string() const {
    std::string out;
    for (const auto& e : entries_) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.order);
        if (e.multiplicity > 1) out += '^' + std::to_string(e.multiplicity);
    }
    return out;
}

std::string Signature::to_display() const {
    std::string out;
    for (const auto& e : entries_) {
        if (!out.empty()) out += ", ";
        out += std::to_string(e.order);
        if (e.multiplicity > 1) out += '^' + std::to_string(e.multiplicity);
    }
    return out;
}

Rational quotient_genus_exact(int genus, long group_order, const Signature& sig) {
    if (genus < 2) throw std::domain_error("curve genus must be at least 2");
    if (group_order < 1) throw std::domain_error("group order must be positive");
    Rational branch_sum = 0;
    for (const auto& e : sig.entries()) branch_sum += Rational(e.multiplicity) * (Rational(1) - Rational(1, e.order));
    // g0 = 1 + (g - 1)/|G| - sum/2
    return Rational(1) + Rational(genus - 1, group_order) - branch_sum / 2;
}

int quotient_genus(int genus, long group_order, const Signature& sig) {
    Rational g0 = quotient_genus_exact(genus, group_order, sig);
    if (denominator(g0) != 1 || g0 < 0) {
        throw InconsistentSignature("inconsistent signature " + sig.to_string() + " for genus " + std::to_string(genus) +
                                        " and |G| = " + std::to_string(group_order) + ": quotient genus would be " +
                                        to_string(g0),
                                    g0);
    }
    return static_cast<int>(numerator(g0));
}

int moduli_dimension(int quotient_genus, int cone_count) {
    if (quotient_genus < 0 || cone_count < 0) throw std::domain_error("negative quotient genus or cone count");
    int delta = 3 * quotient_genus - 3 + cone_count;
    if (delta < 0) throw std::domain_error("non-hyperbolic quotient orbifold (negative moduli dimension)");
    return delta;
}

bool is_odd_signature(const Signature& sig) {
    return std::any_of(sig.entries().begin(), sig.entries().end(), [](const ConeEntry& e) { return e.multiplicity % 2 == 1; });
}

std::string_view to_string(RepairStatus status) {
    switch (status) {
        case RepairStatus::consistent: return "consistent";
        case RepairStatus::completed: return "completed";
        case RepairStatus::corrected: return "corrected";
        case RepairStatus::reconstructed: return "reconstructed";
        case RepairStatus::unrepairable: return "unrepairable";
    }
    return "unrepairable";
}

RepairStatus parse_repair_status(std::string_view text) {
    for (auto s : {RepairStatus::consistent, RepairStatus::completed, RepairStatus::corrected, RepairStatus::reconstructed,
                   RepairStatus::unrepairable}) {
        if (to_string(s) == text) return s;
    }
    throw std::invalid_argument("unknown repair status '" + std::string(text) + "'");
}

RepairOutcome complete_signature(int genus, long group_order, const Signature& partial) {
    RepairOutcome out;
    out.printed = partial;
    if (quotient_genus_exact(genus, group_order, partial) == 0) {
        out.status = RepairStatus::consistent;
        out.repaired = partial;
        return out;
    }

    const auto divisors = divisors_at_least_two(group_order);

    std::vector<long> appended;
    for (long c : divisors) {
        Signature s = partial.with_added(static_cast<int>(c));
        if (quotient_genus_exact(genus, group_order, s) == 0) {
            out.candidates.push_back(s);
            appended.push_back(c);
        }
    }
    if (!out.candidates.empty()) {
        out.status = RepairStatus::completed;
        out.repaired = out.candidates.front();
        out.changed_entry = "appended " + std::to_string(appended.front());
        return out;
    }

    // Replacements, scanned from the largest printed order down so the
    // preferred candidate comes first.
    struct Edit {
        int from;
        long to;
    };
    std::vector<Edit> edits;
    const auto& entries = partial.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        for (long c : divisors) {
            if (c == it->order) continue;
            Signature s = partial.with_removed(it->order).with_added(static_cast<int>(c));
            if (quotient_genus_exact(genus, group_order, s) == 0) {
                out.candidates.push_back(s);
                edits.push_back({it->order, c});
            }
        }
    }
    if (!out.candidates.empty()) {
        out.status = RepairStatus::corrected;
        out.repaired = out.candidates.front();
        out.changed_entry = "replaced " + std::to_string(edits.front().from) + " by " + std::to_string(edits.front().to);
        return out;
    }

    out.status = RepairStatus::unrepairable;
    return out;
}

bool cyclic_branch_data_valid(int level, const std::vector<int>& data) {
    if (level < 2) throw std::domain_error("level must be at least 2");
    if (data.empty()) throw std::invalid_argument("empty branch data");
    long sum = 0;
    for (int d : data) {
        if (d < 1 || d >= level) throw std::domain_error("branch datum outside 1..n-1");
        if (std::gcd(d, level) != 1) return false;
        sum += d;
    }
    return sum % level == 0;
}

}  // namespace supell
