#include "supell/dataset.hpp"

namespace supell {
namespace {

using namespace build;

constexpr int blank = -1;

QuadExt sqrt_minus_3(long b) { return QuadExt(0, b, -3); }

// x^12 - a_1 x^10 - 33x^8 + 2a_1 x^6 - 33x^4 - a_1 x^2 + 1
Factor f1() {
    return terms({fixed(12, 1), scaled(10, -1, 1), fixed(8, -33), scaled(6, 2, 1), fixed(4, -33), scaled(2, -1, 1),
                  fixed(0, 1)});
}

Factor octahedral_12() { return terms({fixed(12, 1), fixed(8, -33), fixed(4, -33), fixed(0, 1)}); }
Factor octahedral_8() { return terms({fixed(8, 1), fixed(4, 14), fixed(0, 1)}); }

struct RowBuilder {
    std::vector<FamilyRecord> rows;

    void add(int genus, int nr, ReducedGroup reduced, const char* label, int level, int m, const char* sig, int delta,
             bool blue, EquationTemplate eq) {
        FamilyRecord rec;
        rec.key = {genus, nr};
        rec.reduced = reduced;
        rec.level = level;
        if (*label) rec.group = parse_group_label(label, full_group_order(level, reduced));
        if (m != blank) rec.m = m;
        rec.signature = Signature::parse(sig);
        rec.delta = delta;
        rec.blue = blue;
        rec.equation = std::move(eq);
        rows.push_back(std::move(rec));
    }
};

ReducedGroup trivial() { return ReducedGroup::trivial(); }
ReducedGroup cyclic(int m) { return ReducedGroup::cyclic(m); }
ReducedGroup dihedral(int m) { return ReducedGroup::dihedral(m); }
ReducedGroup a4() { return ReducedGroup::a4(); }
ReducedGroup s4() { return ReducedGroup::s4(); }
ReducedGroup a5() { return ReducedGroup::a5(); }

}  // namespace

std::vector<FamilyRecord> embedded_records() {
    RowBuilder b;
    auto add = [&b](auto&&... args) { b.add(std::forward<decltype(args)>(args)...); };

    // genus 3
    add(3, 1, trivial(), "C_2", 2, 1, "2^8", 5, true, product({x(), lacunary(6, 1, 5)}));
    add(3, 2, cyclic(2), "V_4", 2, 2, "2^6", 3, true, product({lacunary(8, 2, 3)}));
    add(3, 3, cyclic(2), "C_4", 2, 2, "2^3,4^2", 2, false, product({x(), lacunary(6, 2, 2)}));
    add(3, 4, cyclic(2), "C_6", 3, 2, "2,3^2,6", 1, false, product({palindromic(2, 1)}));
    add(3, 5, dihedral(2), "V_4×C_4", 4, 2, "2^3,4", 1, false, product({palindromic(2, 1)}));

    // genus 4
    add(4, 1, trivial(), "C_2", 2, 1, "2^10", 7, true, product({x(), lacunary(8, 1, 7)}));
    add(4, 2, cyclic(2), "V_4", 2, 2, "2^7", 4, false, product({lacunary(10, 2, 4)}));
    add(4, 3, cyclic(2), "C_4", 2, 2, "2^4,4^2", 3, true, product({x(), terms({fixed(8, 1), param(6, 3), param(4, 2), param(2, 1), fixed(0, 1)})}));
    add(4, 4, cyclic(3), "C_6", 2, 3, "2^3,3,6", 2, false, product({lacunary(9, 3, 2)}));
    add(4, 5, trivial(), "C_3", 3, 1, "3^6", 3, true, product({x(), lacunary(4, 1, 3)}));
    add(4, 6, cyclic(2), "C_2×C_3", 3, 2, "2^2,3^3", 2, false, product({terms({fixed(6, 1), param(4, 2), param(2, 1), fixed(0, 1)})}));
    add(4, 7, dihedral(3), "D_6×C_3", 3, 3, "2^2,3^2", 1, false, product({palindromic(3, 1)}));
    add(4, 8, dihedral(2), "V_4×C_3", 3, 2, "2^2,3,6", 1, false, product({binomial(2, -1), palindromic(2, 1)}));
    add(4, 9, dihedral(2), "V_4×C_3", 3, 2, "2^2,3,6", 1, false, product({x(), palindromic(2, 1)}));

    // genus 5
    add(5, 1, cyclic(2), "V_4", 2, 2, "2^8", 5, true, product({lacunary(12, 2, 5)}));
    add(5, 2, cyclic(3), "C_3×C_2", 2, 3, "2^4,3^2", 3, true, product({lacunary(12, 3, 3)}));
    add(5, 3, cyclic(4), "C_2×C_4", 2, 4, "2^3,4^2", 2, false, product({terms({fixed(12, 1), param(8, 2), param(4, 1), fixed(0, 1)})}));
    add(5, 4, cyclic(11), "C_22", 2, 11, "2,11,22", 0, false, product({binomial(11, 1)}));
    add(5, 5, cyclic(2), "C_22", 11, 2, "2,22,22", 0, false, product({binomial(2, 1)}));
    add(5, 6, trivial(), "C_2", 2, 1, "2^12", 9, true, product({x(), lacunary(10, 1, 9)}));
    add(5, 7, cyclic(2), "C_4", 2, 2, "2^5,4^2", 4, false, product({x(), lacunary(10, 2, 4)}));
    add(5, 8, dihedral(2), "", 2, 2, "2^6", 3, false, product(palindromics(2, 3)));
    add(5, 9, dihedral(3), "", 2, 3, "2^4,3", 2, false, product(palindromics(3, 2)));
    add(5, 10, dihedral(6), "", 2, 6, "2^3,6", 1, false, product({palindromic(6, 1)}));
    add(5, 11, dihedral(4), "", 2, 4, "2^2,4^2", 1, false, product({binomial(4, -1), palindromic(4, 1)}));
    add(5, 12, dihedral(12), "", 2, 12, "2,4,12", 0, false, product({binomial(12, -1)}));
    add(5, 13, dihedral(5), "", 2, 5, "2^3,10", 1, false, product({x(), palindromic(5, 1)}));
    add(5, 14, dihedral(2), "", 2, 2, "2^3,4^2", 2, false, product(std::vector<Factor>{binomial(4, -1)} + palindromics(2, 2)));
    add(5, 15, dihedral(3), "", 2, 3, "2,3,4^2", 1, false, product({binomial(6, -1), palindromic(3, 1)}));
    add(5, 16, dihedral(2), "", 2, 2, "2^3,4^2", 2, false, product(std::vector<Factor>{x(), binomial(2, -1)} + palindromics(2, 2)));
    add(5, 17, dihedral(10), "", 2, 10, "2,4,20", 0, false, product({x(), binomial(10, -1)}));
    add(5, 18, a4(), "", 2, blank, "2^2,3^2", 1, false, product({f1()}));
    add(5, 19, s4(), "", 2, 0, "3,4^2", 0, false, product({octahedral_12()}));
    add(5, 20, a5(), "", 2, blank, "2,3,10", 0, false, product({x(), terms({fixed(10, 1), fixed(5, 11), fixed(0, -1)})}));

    // genus 6
    add(6, 1, cyclic(2), "V_4", 2, 2, "2^9", 6, false, product({lacunary(14, 2, 6)}));
    add(6, 2, cyclic(13), "C_26", 2, 13, "2,13,26", 0, false, product({binomial(13, 1)}));
    add(6, 3, cyclic(7), "C_21", 3, 7, "3,7,21", 0, false, product({binomial(7, 1)}));
    add(6, 4, cyclic(5), "C_20", 4, 5, "4,5,20", 0, false, product({binomial(5, 1)}));
    add(6, 5, cyclic(2), "C_10", 5, 2, "2,5,5,10", 1, false, product({palindromic(2, 1)}));
    add(6, 6, cyclic(4), "C_20", 5, 4, "4,5,20", 0, false, product({binomial(4, 1)}));
    add(6, 7, cyclic(3), "C_21", 7, 3, "3,7,21", 0, false, product({binomial(3, 1)}));
    add(6, 8, cyclic(2), "C_26", 13, 2, "2,13,26", 0, false, product({binomial(2, 1)}));
    add(6, 9, trivial(), "C_2", 2, 1, "2^14", 11, true, product({x(), lacunary(12, 1, 11)}));
    add(6, 10, cyclic(2), "C_4", 2, 2, "2^6,4^2", 5, true, product({x(), lacunary(12, 2, 5)}));
    add(6, 11, cyclic(3), "C_6", 2, 3, "2^3,3^2,6^2", 3, false, product({x(), lacunary(12, 3, 3)}));
    add(6, 12, cyclic(4), "C_8", 2, 4, "2^3,8^2", 2, false, product({x(), lacunary(12, 4, 2)}));
    add(6, 13, trivial(), "C_3", 3, 1, "3^8", 5, true, product({lacunary(6, 1, 5)}));
    add(6, 14, cyclic(2), "C_6", 3, 2, "3^3,6^2", 2, false, product({terms({fixed(6, 1), param(4, 2), param(2, 1), fixed(0, 1)})}));
    add(6, 15, trivial(), "C_4", 4, 1, "4^6", 3, true, product({lacunary(4, 1, 3)}));
    add(6, 16, trivial(), "C_5", 5, 1, "5^5", 2, false, product({lacunary(3, 1, 2)}));
    add(6, 17, dihedral(7), "D_14×C_2", 2, 7, "2^3,7", 1, false, product({palindromic(7, 1)}));
    add(6, 18, dihedral(2), "G_5", 2, 2, "2^5,4", 3, false, product(std::vector<Factor>{binomial(2, -1)} + palindromics(2, 3)));
    add(6, 19, dihedral(14), "G_5", 2, 14, "2,4,14", 0, false, product({binomial(14, -1)}));
    add(6, 20, dihedral(5), "D_10×C_2", 5, 5, "2,5,10", 0, false, product({binomial(5, -1)}));
    add(6, 21, dihedral(2), "D_8", 2, 2, "2^5,4", 3, false, product(std::vector<Factor>{x()} + palindromics(2, 3)));
    add(6, 22, dihedral(3), "D_6×C_2", 2, 3, "2^4,6", 2, false, product(std::vector<Factor>{x()} + palindromics(2, 2)));
    add(6, 23, dihedral(6), "D_24", 2, 6, "2^3,12", 1, false, product({x(), palindromic(6, 1)}));
    add(6, 24, dihedral(3), "D_6×C_3", 3, 3, "2^2,3,9", 1, false, product({x(), palindromic(3, 1)}));
    add(6, 25, dihedral(2), "D_16", 4, 2, "2^2,4,8", 1, false, product({x(), palindromic(2, 1)}));
    add(6, 26, dihedral(4), "G_8", 2, 4, "2^2,4,8", 1, false, product({x(), binomial(4, -1), palindromic(4, 1)}));
    add(6, 27, dihedral(12), "G_8", 2, 12, "2,4,24", 0, false, product({x(), binomial(12, -1)}));
    add(6, 28, dihedral(2), "V_4×C_3", 3, 2, "2,3,6^2", 1, false, product({x(), binomial(2, -1), palindromic(2, 1)}));
    add(6, 29, dihedral(6), "D_12×C_3", 3, 6, "2,6,18", 0, false, product({x(), binomial(6, -1)}));
    add(6, 30, dihedral(4), "G_8", 4, 4, "2,8,16", 0, false, product({x(), binomial(4, -1)}));
    add(6, 31, dihedral(3), "D_6×C_5", 5, 3, "2,10,15", 0, false, product({x(), binomial(3, -1)}));
    add(6, 32, dihedral(2), "V_4×C_7", 7, 2, "2,14^2", 0, false, product({x(), binomial(2, -1)}));
    add(6, 33, dihedral(2), "G_9", 2, 2, "2^2,4^3", 2, false, product(std::vector<Factor>{x(), binomial(4, -1)} + palindromics(2, 2)));
    add(6, 34, dihedral(3), "G_9", 2, 3, "2,4^2,6", 1, false, product({x(), binomial(6, -1), palindromic(3, 1)}));
    add(6, 35, s4(), "G_18", 4, 0, "2,3,16", 0, false, product({x(), binomial(4, -1)}));
    add(6, 36, s4(), "G_19", 2, 0, "2,6,8", 0, false, product({x(), binomial(4, -1), octahedral_8()}));

    // genus 7
    add(7, 1, cyclic(2), "V_4", 2, 2, "2^10", 7, true, product({lacunary(16, 2, 7)}));
    add(7, 2, cyclic(4), "C_2×C_4", 2, 4, "2^4,4^2", 3, true, product({lacunary(16, 4, 3)}));
    add(7, 3, cyclic(3), "C_3^2", 3, 3, "3^5", 2, false, product({terms({fixed(9, 1), param(6, 2), param(3, 1), fixed(0, 1)})}));
    add(7, 4, cyclic(3), "C_6", 2, 3, "2^5,3,6", 4, false, product({lacunary(15, 3, 4)}));
    add(7, 5, cyclic(5), "C_10", 2, 5, "2^3,5,10", 2, false, product({lacunary(15, 5, 2)}));
    add(7, 6, cyclic(15), "C_30", 2, 15, "2,15,30", 0, false, product({binomial(15, 1)}));
    add(7, 7, cyclic(2), "C_6", 3, 2, "2,3^4,6", 3, false, product({terms({fixed(8, 1), param(6, 3), param(4, 2), param(2, 1), fixed(0, 1)})}));
    add(7, 8, cyclic(4), "C_12", 3, 4, "3^2,4,12", 1, false, product({palindromic(4, 1)}));
    add(7, 9, cyclic(8), "C_24", 3, 8, "3,8,24", 0, false, product({binomial(8, 1)}));
    add(7, 10, cyclic(2), "C_30", 15, 2, "2,15,30", 0, false, product({binomial(2, 1)}));
    add(7, 11, trivial(), "C_2", 2, 1, "2^16", 13, true, product({x(), lacunary(14, 1, 13)}));
    add(7, 12, cyclic(2), "C_4", 2, 2, "2^7,4^2", 6, false, product({x(), lacunary(14, 2, 6)}));
    add(7, 13, trivial(), "C_3", 3, 1, "3^9", 6, false, product({lacunary(7, 1, 6)}));
    add(7, 14, dihedral(2), "V_4×C_2", 2, 2, "2^7", 4, false, product(palindromics(2, 4)));
    add(7, 15, dihedral(4), "D_8×C_2", 2, 4, "2^4,4", 2, false, product(palindromics(4, 2)));
    add(7, 16, dihedral(8), "D_16×C_2", 2, 8, "2^3,8", 1, false, product({palindromic(8, 1)}));
    add(7, 17, dihedral(16), "G_5", 2, 16, "2,4,16", 0, false, product({binomial(16, -1)}));
    add(7, 18, dihedral(3), "D_6×C_3", 3, 3, "2,3^2,6", 1, false, product({binomial(3, -1), palindromic(3, 1)}));
    add(7, 19, dihedral(9), "D_18×C_3", 3, 9, "2,6,9", 0, false, product({binomial(9, -1)}));
    add(7, 20, dihedral(7), "D_14×C_2", 2, 7, "2^3,14", 1, false, product({x(), palindromic(7, 1)}));
    add(7, 21, dihedral(2), "G_7", 2, 2, "2^4,4^2", 3, false, product(std::vector<Factor>{binomial(4, -1)} + palindromics(2, 3)));
    add(7, 22, dihedral(4), "G_7", 2, 4, "2,4^3", 1, false, product({binomial(8, -1), palindromic(4, 1)}));
    add(7, 23, dihedral(2), "G_8", 2, 2, "2^4,4^2", 3, false, product(std::vector<Factor>{x(), binomial(2, -1)} + palindromics(2, 3)));
    add(7, 24, dihedral(14), "G_8", 2, 14, "2,4,28", 0, false, product({x(), binomial(14, -1)}));
    add(7, 25, dihedral(7), "D_14×C_3", 3, 7, "2,6,21", 0, false, product({x(), binomial(7, -1)}));
    add(7, 26, dihedral(2), "G_8", 8, 2, "2,16^2", 0, false, product({x(), binomial(2, -1)}));
    add(7, 27, a4(), "K", 2, 0, "2^2,3,6", 1, false, product({terms({fixed(4, 1), fixed(2, sqrt_minus_3(2)), fixed(0, 1)}), f1()}, -3));

    // genus 8
    add(8, 1, cyclic(2), "V_4", 2, 2, "2^11", 8, false, product({lacunary(18, 2, 8)}));
    add(8, 2, cyclic(3), "C_2×C_3", 2, 3, "2^6,3^2", 5, true, product({lacunary(18, 3, 5)}));
    add(8, 3, cyclic(6), "C_2×C_6", 2, 6, "2^3,6^2", 2, false, product({lacunary(18, 6, 2)}));
    add(8, 4, cyclic(17), "C_34", 2, 17, "2,17,34", 0, false, product({binomial(17, 1)}));
    add(8, 5, cyclic(2), "C_34", 17, 2, "2,17,34", 0, false, product({binomial(2, 1)}));
    add(8, 6, trivial(), "C_2", 2, 1, "2^18", 15, true, product({x(), lacunary(16, 1, 15)}));
    add(8, 7, cyclic(2), "C_4", 2, 2, "2^8,4^2", 7, true, product({x(), lacunary(16, 2, 7)}));
    add(8, 8, cyclic(4), "C_8", 2, 4, "2^4,8^2", 3, true, product({x(), lacunary(16, 4, 3)}));
    add(8, 9, dihedral(3), "D_6×C_2", 2, 3, "2^5,3", 3, false, product(palindromics(3, 3)));
    add(8, 10, dihedral(9), "D_18×C_2", 2, 9, "2^3,9", 1, false, product({palindromic(9, 1)}));
    add(8, 11, dihedral(2), "G_5", 2, 2, "2^6,4", 4, false, product(std::vector<Factor>{binomial(2, -1)} + palindromics(2, 4)));
    add(8, 12, dihedral(6), "G_5", 2, 6, "2^2,4,6", 1, false, product({binomial(6, -1), palindromic(6, 1)}));
    add(8, 13, dihedral(18), "G_5", 2, 18, "2,4,18", 0, false, product({binomial(18, -1)}));
    add(8, 14, dihedral(2), "D_8", 2, 2, "2^6,4", 4, false, product(std::vector<Factor>{x()} + palindromics(2, 4)));
    add(8, 15, dihedral(4), "D_16", 2, 4, "2^4,8", 2, false, product(std::vector<Factor>{x()} + palindromics(4, 2)));
    add(8, 16, dihedral(8), "D_32", 2, 8, "2^3,16", 1, false, product({x(), palindromic(8, 1)}));
    add(8, 17, dihedral(3), "G_9", 2, 3, "2^2,3,4^2", 2, false, product(std::vector<Factor>{binomial(6, -1)} + palindromics(3, 2)));
    add(8, 18, dihedral(16), "G_8", 2, 16, "2,4,32", 0, false, product({x(), binomial(16, -1)}));
    add(8, 19, dihedral(2), "G_9", 2, 2, "2^3,4^3", 3, false, product(std::vector<Factor>{x()} + palindromics(3, 3)));
    add(8, 20, dihedral(4), "G_9", 2, 4, "2,4^2,8", 1, false, product({x(), binomial(8, -1), palindromic(4, 1)}));
    add(8, 21, a4(), "K", 2, 0, "2,3^2,4", 1, false, product({x(), binomial(4, -1), f1()}));
    add(8, 22, s4(), "G_22", 2, 0, "3,4,8", 0, false, product({x(), binomial(4, -1), octahedral_12()}));

    // genus 9
    add(9, 1, cyclic(2), "V_4", 2, 2, "2^12", 9, true, product({lacunary(20, 2, 9)}));
    add(9, 2, cyclic(4), "C_2×C_4", 2, 4, "2^5,4^2", 4, false, product({lacunary(20, 4, 4)}));
    add(9, 3, cyclic(5), "C_2×C_5", 2, 5, "2^4,5^2", 3, true, product({lacunary(20, 5, 3)}));
    add(9, 4, cyclic(2), "C_2×C_4", 4, 2, "2^2,4^4", 3, true, product({lacunary(8, 2, 3)}));
    add(9, 5, cyclic(19), "C_38", 2, 19, "2,19,38", 0, false, product({binomial(19, 1)}));
    add(9, 6, cyclic(2), "C_6", 3, 2, "2,3^5,6", 4, false, product({lacunary(10, 2, 4)}));
    add(9, 7, cyclic(5), "C_15", 3, 5, "3^2,5,15", 1, false, product({palindromic(5, 1)}));
    add(9, 8, cyclic(10), "C_30", 3, 10, "3,10^2", 0, false, product({binomial(10, 1)}));
    add(9, 9, cyclic(7), "C_28", 4, 7, "4,7^2", 0, false, product({binomial(7, 1)}));
    add(9, 10, cyclic(2), "C_14", 7, 2, "2,7^2,14", 1, false, product({palindromic(2, 1)}));
    add(9, 11, cyclic(4), "C_28", 7, 4, "4^2,7", 0, false, product({binomial(4, 1)}));
    add(9, 12, cyclic(3), "C_30", 10, 3, "3^2,10", 0, false, product({binomial(3, 1)}));
    add(9, 13, cyclic(2), "C_38", 19, 2, "2^2,19", 0, false, product({binomial(2, 1)}));
    add(9, 14, trivial(), "C_2", 2, 1, "2^20", 17, true, product({x(), lacunary(18, 1, 17)}));
    add(9, 15, cyclic(2), "C_4", 2, 2, "2^9,4^2", 8, false, product({x(), lacunary(18, 2, 8)}));
    add(9, 16, cyclic(3), "C_6", 2, 3, "2^6,6^2", 5, true, product({x(), lacunary(18, 3, 5)}));
    add(9, 17, cyclic(6), "C_12", 2, 6, "2^3,12^2", 2, false, product({x(), lacunary(18, 6, 2)}));
    add(9, 18, trivial(), "C_3", 3, 1, "3^11", 8, false, product({lacunary(9, 1, 8)}));
    add(9, 19, cyclic(3), "C_9", 3, 3, "3^3,9^2", 2, false, product({terms({fixed(9, 1), param(6, 2), param(3, 1), fixed(0, 1)})}));
    add(9, 20, trivial(), "C_4", 4, 1, "4^8", 5, true, product({lacunary(6, 1, 5)}));
    add(9, 21, cyclic(2), "C_8", 4, 2, "4^3,8^2", 2, false, product({terms({fixed(6, 1), param(4, 2), param(2, 1), fixed(0, 1)})}));
    add(9, 22, trivial(), "C_7", 7, 1, "7^5", 2, false, product({lacunary(3, 1, 2)}));
    add(9, 23, dihedral(2), "V_4×C_2", 2, 2, "2^8", 5, false, product(palindromics(2, 5)));
    add(9, 24, dihedral(5), "D_10×C_2", 2, 5, "2^4,5", 2, false, product(palindromics(5, 2)));
    add(9, 25, dihedral(10), "D_20×C_2", 2, 10, "2^3,10", 1, false, product({palindromic(10, 1)}));
    add(9, 26, dihedral(2), "V_4×C_4", 4, 2, "2^3,4^2", 2, false, product(palindromics(2, 2)));
    add(9, 27, dihedral(4), "D_8×C_4", 4, 4, "2^2,4^2", 1, false, product({palindromic(4, 1)}));
    add(9, 28, dihedral(4), "G_5", 2, 4, "2^3,4^2", 2, false, product(std::vector<Factor>{binomial(4, -1)} + palindromics(4, 2)));
    add(9, 29, dihedral(20), "G_5", 2, 20, "2,4,20", 0, false, product({binomial(20, -1)}));
    add(9, 30, dihedral(8), "G_5", 4, 8, "2,8^2", 0, false, product({binomial(8, -1)}));
    add(9, 31, dihedral(3), "D_6×C_2", 2, 3, "2^5,6", 3, false, product(std::vector<Factor>{x()} + palindromics(3, 3)));
    add(9, 32, dihedral(9), "D_18×C_2", 2, 9, "2^3,18", 1, false, product({x(), palindromic(9, 1)}));
    add(9, 33, dihedral(3), "D_6×C_4", 4, 3, "2^2,4,12", 1, false, product({x(), palindromic(3, 1)}));
    add(9, 34, dihedral(2), "G_7", 2, 2, "2^5,4^2", 4, false, product(std::vector<Factor>{binomial(4, -1)} + palindromics(2, 4)));
    add(9, 35, dihedral(5), "G_9", 2, 5, "2,4^2,5", 1, false, product({binomial(10, -1), palindromic(5, 1)}));
    add(9, 36, dihedral(2), "G_7", 4, 2, "2,4,8^2", 1, false, product({binomial(4, -1), palindromic(2, 1)}));
    add(9, 37, dihedral(2), "G_8", 2, 2, "2^5,4^2", 4, false, product(std::vector<Factor>{x(), binomial(2, -1)} + palindromics(2, 4)));
    add(9, 38, dihedral(6), "G_8", 2, 6, "2^2,4,12", 1, false, product({x(), binomial(6, -1), palindromic(6, 1)}));
    add(9, 39, dihedral(18), "G_8", 2, 18, "2,4,36", 0, false, product({x(), binomial(18, -1)}));
    add(9, 40, dihedral(3), "D_6×C_3", 3, 3, "2,3,6,9", 1, false, product({x(), binomial(3, -1), palindromic(3, 1)}));
    add(9, 41, dihedral(9), "D_18×C_3", 3, 9, "2,6,27", 0, false, product({x(), binomial(9, -1)}));
    add(9, 42, dihedral(2), "G_8", 4, 2, "2,4,8^2", 1, false, product({x(), binomial(2, -1), palindromic(2, 1)}));
    add(9, 43, dihedral(6), "G_8", 4, 6, "2,8,24", 0, false, product({x(), binomial(6, -1)}));
    add(9, 44, dihedral(3), "D_6×C_7", 7, 3, "2,14,21", 0, false, product({x(), binomial(3, -1)}));
    add(9, 45, dihedral(2), "G_8", 10, 2, "2,20^2", 0, false, product({x(), binomial(2, -1)}));
    add(9, 46, dihedral(3), "G_9", 2, 3, "2^2,4^2,6", 2, false, product(std::vector<Factor>{x(), binomial(6, -1)} + palindromics(3, 2)));
    add(9, 47, a4(), "K", 2, 0, "2^2,6^2", 1, false, product({octahedral_8(), f1()}));
    add(9, 48, s4(), "G_17", 4, 0, "2,4,12", 0, false, product({octahedral_8()}));
    add(9, 49, s4(), "G_21", 2, 0, "4^2,6", 0, false, product({octahedral_8(), octahedral_12()}));
    add(9, 50, a5(), "", 2, blank, "2,5,6", 0, false, product({terms({fixed(20, 1), fixed(15, -228), fixed(10, 494), fixed(5, 228), fixed(0, 1)})}));

    // genus 10
    add(10, 1, cyclic(2), "V_4", 2, 2, "2^13", 10, false, product({lacunary(22, 2, 10)}));
    add(10, 2, cyclic(2), "C_2×C_3", 3, 2, "2^2,3^6", 5, true, product({lacunary(12, 2, 5)}));
    add(10, 3, cyclic(3), "C_3^2", 3, 3, "3^6", 3, true, product({lacunary(12, 3, 3)}));
    add(10, 4, cyclic(4), "C_3×C_4", 3, 4, "3^3,4^2", 2, false, product({lacunary(12, 4, 2)}));
    add(10, 5, cyclic(2), "C_2×C_6", 6, 2, "2^2,6^3", 2, false, product({lacunary(6, 2, 2)}));
    add(10, 6, cyclic(3), "C_6", 2, 3, "2^7,3,6", 6, false, product({lacunary(21, 3, 6)}));
    add(10, 7, cyclic(7), "C_14", 2, 7, "2^3,7,14", 2, false, product({lacunary(21, 7, 2)}));
    add(10, 8, cyclic(21), "C_42", 2, 21, "2,4,21", 0, false, product({binomial(21, 1)}));
    add(10, 9, cyclic(11), "C_33", 3, 11, "3,11^2", 0, false, product({binomial(11, 1)}));
    add(10, 10, cyclic(2), "C_10", 5, 2, "2,5^3,10", 2, false, product({terms({fixed(6, 1), param(4, 2), param(2, 1), fixed(0, 1)})}));
    add(10, 11, cyclic(3), "C_15", 5, 3, "3,5^2,15", 1, false, product({palindromic(3, 1)}));
    add(10, 12, cyclic(6), "C_30", 5, 6, "5,6^2", 0, false, product({binomial(6, 1)}));
    add(10, 13, cyclic(5), "C_30", 6, 5, "5^2,6", 0, false, product({binomial(5, 1)}));
    add(10, 14, cyclic(3), "C_33", 11, 3, "3^2,11", 0, false, product({binomial(3, 1)}));
    add(10, 15, cyclic(2), "C_42", 21, 2, "2,21,42", 0, false, product({binomial(2, 1)}));
    add(10, 16, trivial(), "C_2", 2, 1, "2^22", 19, true, product({x(), lacunary(20, 1, 19)}));
    add(10, 17, cyclic(2), "C_4", 2, 2, "2^10,4^2", 9, true, product({x(), lacunary(20, 2, 9)}));
    add(10, 18, cyclic(4), "C_8", 2, 4, "2^5,8^2", 4, false, product({x(), lacunary(20, 4, 4)}));
    add(10, 19, cyclic(5), "C_10", 2, 5, "2^4,10^2", 3, true, product({x(), lacunary(20, 5, 3)}));
    add(10, 20, trivial(), "C_3", 3, 1, "3^12", 9, true, product({lacunary(10, 1, 9)}));
    add(10, 21, cyclic(2), "C_6", 3, 2, "3^5,6^2", 4, false, product({lacunary(10, 2, 4)}));
    add(10, 22, trivial(), "C_5", 5, 1, "5^7", 4, false, product({lacunary(5, 1, 4)}));
    add(10, 23, trivial(), "C_6", 6, 1, "6^6", 3, true, product({lacunary(4, 1, 3)}));
    add(10, 24, dihedral(11), "D_22×C_2", 2, 11, "2^3,11", 1, false, product({palindromic(11, 1)}));
    add(10, 25, dihedral(2), "V_4×C_3", 3, 2, "2^3,3^3", 3, false, product(palindromics(2, 3)));
    add(10, 26, dihedral(3), "D_6×C_3", 3, 3, "2^2,3^3", 2, false, product(palindromics(3, 2)));
    add(10, 27, dihedral(6), "D_12×C_3", 3, 6, "2^2,3,6", 1, false, product({palindromic(6, 1)}));
    add(10, 28, dihedral(3), "D_6×C_6", 6, 3, "2^2,3,6", 1, false, product({palindromic(3, 1)}));
    add(10, 29, dihedral(2), "G_5", 2, 2, "2^7,4", 5, false, product(std::vector<Factor>{binomial(2, -1)} + palindromics(2, 5)));
    add(10, 30, dihedral(22), "G_5", 2, 22, "2,4,22", 0, false, product({binomial(22, -1)}));
    add(10, 31, dihedral(4), "D_8×C_3", 3, 4, "2,3,4,6", 1, false, product({binomial(4, -1), palindromic(4, 1)}));
    add(10, 32, dihedral(12), "D_24×C_3", 3, 12, "2,6,12", 0, false, product({binomial(12, -1)}));
    add(10, 33, dihedral(2), "G_5", 6, 2, "2^2,6,12", 1, false, product({binomial(2, -1), palindromic(2, 1)}));
    add(10, 34, dihedral(6), "G_5", 6, 6, "2,6,12", 0, false, product({binomial(6, -1)}));
    add(10, 35, dihedral(2), "D_8", 2, 2, "2^7,4", 5, false, product(std::vector<Factor>{x()} + palindromics(2, 5)));
    add(10, 36, dihedral(5), "D_10×C_2", 2, 5, "2^4,10", 2, false, product(std::vector<Factor>{x()} + palindromics(5, 2)));
    add(10, 37, dihedral(10), "D_40", 2, 10, "2^3,20", 1, false, product({x(), palindromic(10, 1)}));
    add(10, 38, dihedral(5), "D_10×C_3", 3, 5, "2^2,3,15", 1, false, product({x(), palindromic(5, 1)}));
    add(10, 39, dihedral(2), "D_24", 6, 2, "2^2,6,12", 1, false, product({x(), palindromic(2, 1)}));
    add(10, 40, dihedral(2), "V_4×C_3", 3, 2, "2,3^2,6^2", 2, false, product(std::vector<Factor>{binomial(2, -1)} + palindromics(2, 2)));
    add(10, 41, dihedral(3), "D_6×C_3", 3, 3, "3^2,6^2", 1, false, product({binomial(6, -1), palindromic(3, 1)}));
    add(10, 42, dihedral(4), "G_8", 2, 4, "2^3,4,8", 2, false, product(std::vector<Factor>{x(), binomial(4, -1)} + palindromics(4, 2)));
    add(10, 43, dihedral(20), "G_8", 2, 20, "2,4,40", 0, false, product({x(), binomial(20, -1)}));
    add(10, 44, dihedral(2), "V_4×C_3", 3, 2, "2,3^2,6^2", 2, false, product(std::vector<Factor>{x(), binomial(2, -1)} + palindromics(2, 2)));
    add(10, 45, dihedral(10), "D_20×C_3", 3, 10, "2,6,30", 0, false, product({x(), binomial(10, -1)}));
    add(10, 46, dihedral(5), "D_10×C_5", 5, 5, "2,10,25", 0, false, product({x(), binomial(5, -1)}));
    add(10, 47, dihedral(4), "G_8", 6, 4, "2,12,24", 0, false, product({x(), binomial(4, -1)}));
    add(10, 48, dihedral(2), "V_4×C_11", 11, 2, "2,22^2", 0, false, product({x(), binomial(2, -1)}));
    add(10, 49, dihedral(2), "G_9", 2, 2, "2^4,4^3", 4, false, product(std::vector<Factor>{x(), binomial(4, -1)} + palindromics(2, 4)));
    add(10, 50, dihedral(5), "G_9", 2, 5, "2,4^2,10", 1, false, product({x(), binomial(10, -1), palindromic(5, 1)}));
    add(10, 51, a4(), "", 3, 0, "2,3^3", 1, false, product({f1()}));
    add(10, 52, a4(), "", 2, 0, "2,3,4,6", 1, false, product({x(), binomial(4, -1), terms({fixed(4, 1), fixed(2, sqrt_minus_3(2)), fixed(0, 1)}), f1()}, -3));
    add(10, 53, s4(), "G_18", 6, 0, "2,3,24", 0, false, product({x(), binomial(4, -1)}));
    add(10, 54, s4(), "S_4×C_3", 3, 0, "3,4,6", 0, false, product({octahedral_12()}));
    add(10, 55, a5(), "A_5×C_3", 3, 0, "2,3,15", 0, false, product({x(), terms({fixed(10, 1), fixed(5, 11), fixed(0, -1)})}));
    return b.rows;
}

std::vector<EquationErratum> embedded_equation_errata() {
    std::vector<EquationErratum> e;
    e.push_back({{6, 13}, product({x(), lacunary(6, 1, 5)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{6, 14}, product({x(), terms({fixed(6, 1), param(4, 2), param(2, 1), fixed(0, 1)})}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{6, 15}, product({x(), lacunary(4, 1, 3)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{6, 16}, product({x(), lacunary(3, 1, 2)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{6, 22}, product(std::vector<Factor>{x()} + palindromics(3, 2)), "printed factors do not give the row genus"});
    e.push_back({{7, 13}, product({x(), lacunary(7, 1, 6)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{8, 19}, product(std::vector<Factor>{x(), binomial(4, -1)} + palindromics(2, 3)), "printed factors do not give the row genus"});
    e.push_back({{9, 18}, product({x(), lacunary(9, 1, 8)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{9, 19}, product({x(), terms({fixed(9, 1), param(6, 2), param(3, 1), fixed(0, 1)})}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{9, 20}, product({x(), lacunary(6, 1, 5)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{9, 21}, product({x(), terms({fixed(6, 1), param(4, 2), param(2, 1), fixed(0, 1)})}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{9, 22}, product({x(), lacunary(3, 1, 2)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{10, 20}, product({x(), lacunary(10, 1, 9)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{10, 21}, product({x(), lacunary(10, 2, 4)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{10, 22}, product({x(), lacunary(5, 1, 4)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{10, 23}, product({x(), lacunary(4, 1, 3)}), "factor x missing; the printed degree does not give the row genus"});
    e.push_back({{10, 40}, product(std::vector<Factor>{binomial(4, -1)} + palindromics(2, 2)), "printed factors do not give the row genus"});
    return e;
}

std::vector<NamedCurve> embedded_named_curves() {
    const Rational third(1, 3);
    return {
        {3, 2, "C_14", product({binomial(7, 1)})},
        {3, 3, "C_12", product({binomial(4, 1)})},
        {3, 4, "reduced A_4", product({terms({fixed(4, 1), fixed(2, 2), fixed(0, QuadExt(third))})})},
        {3, 2, "reduced S_4", product({octahedral_8()})},
        {3, 4, "G_5", product({binomial(4, -1)})},
        {3, 3, "D_6×C_3", product({x(), binomial(3, -1)})},
        {3, 4, "G_8", product({x(), binomial(2, -1)})},
        {4, 3, "reduced S_4", product({x(), binomial(4, -1)})},
        {4, 3, "D_12×C_3", product({binomial(6, -1)})},
        {4, 3, "D_8×C_3", product({x(), binomial(4, -1)})},
        {4, 5, "D_4×C_5", product({x(), binomial(2, -1)})},
        {4, 2, "C_18", product({binomial(9, 1)})},
        {4, 3, "C_15", product({binomial(5, 1)})},
    };
}

}  // namespace supell
