#pragma once

// Signatures of branched covers X -> X/G over a genus-zero (or higher) quotient,
// Riemann-Hurwitz arithmetic, and repair of printed signatures that fail it.

#include "supell/exact.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace supell {

struct ConeEntry {
    int order = 2;
    int multiplicity = 1;
    friend bool operator==(const ConeEntry&, const ConeEntry&) = default;
};

/// Multiset of cone orders, kept sorted by order with no repeated keys.
class Signature {
  public:
    Signature() = default;
    /// Orders in any sequence; each must be >= 2.
    static Signature from_orders(const std::vector<int>& orders);
    static Signature from_entries(const std::vector<ConeEntry>& entries);
    /// "2^5,4^2", "2, 11, 22", "2,5,5,10". Whitespace around tokens is ignored.
    static Signature parse(std::string_view text);

    const std::vector<ConeEntry>& entries() const { return entries_; }
    /// Cone orders with multiplicity, ascending.
    std::vector<int> orders() const;
    /// Total number of cone points r.
    int size() const;
    bool empty() const { return entries_.empty(); }
    int multiplicity(int order) const;

    Signature with_added(int order) const;
    /// Removes one copy of `order`; throws if absent.
    Signature with_removed(int order) const;

    /// Canonical text form, e.g. "2^5,4^2". parse(to_string()) == *this.
    std::string to_string() const;
    /// Display form with spaces, "2^5, 4^2".
    std::string to_display() const;

    friend bool operator==(const Signature&, const Signature&) = default;

  private:
    std::vector<ConeEntry> entries_;
};

/// Riemann-Hurwitz does not produce a non-negative integral quotient genus.
class InconsistentSignature : public std::runtime_error {
  public:
    InconsistentSignature(const std::string& what, Rational quotient_genus)
        : std::runtime_error(what), quotient_genus_(std::move(quotient_genus)) {}
    /// The exact (rational) value that Riemann-Hurwitz forces on g0.
    const Rational& quotient_genus() const { return quotient_genus_; }

  private:
    Rational quotient_genus_;
};

/// Exact g0 from 2(g-1) = 2|G|(g0-1) + |G| sum(1 - 1/c), without integrality checks.
Rational quotient_genus_exact(int genus, long group_order, const Signature& sig);

/// Integral g0 >= 0 or InconsistentSignature carrying the rational value.
int quotient_genus(int genus, long group_order, const Signature& sig);

/// delta = 3 g0 - 3 + r; throws std::domain_error when negative.
int moduli_dimension(int quotient_genus, int cone_count);

/// Some cone order appears an odd number of times.
bool is_odd_signature(const Signature& sig);

enum class RepairStatus { consistent, completed, corrected, reconstructed, unrepairable };

std::string_view to_string(RepairStatus status);
RepairStatus parse_repair_status(std::string_view text);

struct RepairOutcome {
    RepairStatus status = RepairStatus::unrepairable;
    Signature printed;
    /// Present for consistent/completed/corrected/reconstructed.
    std::optional<Signature> repaired;
    /// Human-readable edit, e.g. "replaced 22 by 11"; empty when nothing changed.
    std::string changed_entry;
    /// Every signature that passes with a single edit of the same kind.
    std::vector<Signature> candidates;

    bool ambiguous() const { return candidates.size() > 1; }
    friend bool operator==(const RepairOutcome&, const RepairOutcome&) = default;
};

/// Restores g0 = 0 for a truncated or misprinted signature.
///
/// Tries, in order: the signature as given; appending one cone order c | |G|;
/// replacing exactly one entry by some c | |G|. Among replacements the one
/// changing the largest printed order is preferred and every candidate is
/// reported. Never throws for inconsistent input; failure is `unrepairable`.
RepairOutcome complete_signature(int genus, long group_order, const Signature& partial);

/// Branch data (d_1..d_k) of a C_n cover of the sphere in which every cone
/// point has order n: each d_i a unit mod n and sum d_i = 0 mod n.
bool cyclic_branch_data_valid(int level, const std::vector<int>& data);

}  // namespace supell
