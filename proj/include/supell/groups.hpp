#pragma once

// Finite subgroups of PGL_2 (the reduced automorphism group) and the printed
// names of full automorphism groups G, a degree-n central extension of it.

#include <optional>
#include <string>
#include <string_view>

namespace supell {

enum class ReducedKind { trivial, cyclic, dihedral, tetrahedral, octahedral, icosahedral };

/// Reduced automorphism group. Dihedral groups store the rotation order m and
/// have order 2m; their printed name uses the order, D_{2m}.
class ReducedGroup {
  public:
    static ReducedGroup trivial() { return ReducedGroup(ReducedKind::trivial, 1); }
    static ReducedGroup cyclic(int m);
    static ReducedGroup dihedral(int m);
    static ReducedGroup a4() { return ReducedGroup(ReducedKind::tetrahedral, 0); }
    static ReducedGroup s4() { return ReducedGroup(ReducedKind::octahedral, 0); }
    static ReducedGroup a5() { return ReducedGroup(ReducedKind::icosahedral, 0); }

    ReducedKind kind() const { return kind_; }
    /// Rotation order for cyclic/dihedral, 1 for trivial, 0 otherwise.
    int m() const { return m_; }

    /// "trivial", "C_3", "D_6", "A_4", "S_4", "A_5".
    std::string name() const;
    /// Inverse of name(); also accepts "V_4" and "{I}".
    static ReducedGroup parse(std::string_view name);

    friend bool operator==(const ReducedGroup&, const ReducedGroup&) = default;

  private:
    ReducedGroup(ReducedKind kind, int m) : kind_(kind), m_(m) {}
    ReducedKind kind_;
    int m_;
};

long reduced_order(const ReducedGroup& g);
bool is_cyclic_or_trivial(const ReducedGroup& g);
/// n * |reduced group|.
long full_group_order(int level, const ReducedGroup& g);

/// Printed name of a full automorphism group, e.g. "D_6×C_3", "G_8", "V_4".
struct GroupLabel {
    std::string text;
    long order = 1;
    /// False when the order came from row context (G_k, K) rather than the factors.
    bool recognized = true;

    std::string render() const { return text; }
    friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

/// Grammar: atom (('×' | 'x' | '*') atom)*, atom = C_k | D_k | V_4 | A_4 |
/// S_4 | A_5 | S_k | A_k with optional "^e" power, or an opaque G_k / K.
/// Braces as in C_{22} are accepted. Opaque atoms need `context_order`
/// (n times the reduced order of the row) and must stand alone.
GroupLabel parse_group_label(std::string_view text, std::optional<long> context_order = std::nullopt);

}  // namespace supell
