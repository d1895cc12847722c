#include "orbiheat/golden_tables.hpp"

#include "orbiheat/conway.hpp"
#include "orbiheat/heat_invariants.hpp"

#include <functional>

namespace orbiheat::tables {

namespace {

Rational q(long long num, long long den) { return Rational(num) / Rational(den); }
Rational recip(Order m) { return q(1, m); }
std::string str(Order m) { return std::to_string(m); }

struct Builder {
    std::vector<ExpansionEntry> rows;

    void fixed(const std::string& row, const std::vector<std::string>& notations, Rational constant, bool mirror) {
        for (const auto& n : notations) rows.push_back({row, n, constant, mirror});
    }
};

}  // namespace

std::vector<ExpansionEntry> expansion_table(Order family_bound) {
    Builder b;
    const Order top = family_bound;

    // chi > 0
    for (Order m = 2; m <= top; ++m) {
        b.fixed("O(m)", {str(m)}, q(1, 12) * (2 + m + recip(m)), false);
    }
    for (Order m = 2; m <= top; ++m) {
        b.fixed("O(*m)", {"*" + str(m)}, q(1, 24) * (2 + m + recip(m)), true);
    }
    for (Order m = 2; m <= top; ++m) {
        for (Order n = m; n <= top; ++n) {
            b.fixed("O(m,n)", {str(m) + "," + str(n)}, q(1, 12) * (m + n + recip(m) + recip(n)), false);
        }
    }
    for (Order m = 2; m <= top; ++m) {
        for (Order n = m; n <= top; ++n) {
            b.fixed("O(*m,n)", {"*" + str(m) + "," + str(n)}, q(1, 24) * (m + n + recip(m) + recip(n)), true);
        }
    }
    for (Order m = 2; m <= top; ++m) {
        b.fixed("O(mx)", {str(m) + "x"}, q(1, 12) * (m + recip(m)), false);
    }
    for (Order m = 2; m <= top; ++m) {
        b.fixed("O(m*)", {str(m) + "*"}, q(1, 12) * (m + recip(m)), true);
    }
    for (Order m = 2; m <= top; ++m) {
        b.fixed("O(2,2,m)", {"2,2," + str(m)}, q(1, 12) * (3 + m + recip(m)), false);
    }
    for (Order m = 2; m <= top; ++m) {
        b.fixed("O(*2,2,m), O(2,*m)", {"*2,2," + str(m), "2,*" + str(m)}, q(1, 24) * (3 + m + recip(m)), true);
    }
    b.fixed("O(2,3,3)", {"2,3,3"}, q(43, 72), false);
    b.fixed("O(*2,3,3), O(3,*2)", {"*2,3,3", "3,*2"}, q(43, 144), true);
    b.fixed("O(2,3,4)", {"2,3,4"}, q(97, 144), false);
    b.fixed("O(*2,3,4)", {"*2,3,4"}, q(97, 288), true);
    b.fixed("O(2,3,5)", {"2,3,5"}, q(271, 360), false);
    b.fixed("O(*2,3,5)", {"*2,3,5"}, q(271, 720), true);

    // chi = 0
    b.fixed("torus, Klein bottle", {"torus", "klein"}, 0, false);
    b.fixed("*torus, *Klein bottle", {"*torus", "*klein"}, 0, true);
    b.fixed("O(2,2,2,2)", {"2,2,2,2"}, q(1, 2), false);
    b.fixed("O(*2,2,2,2), O(2,*2,2), O(2,2*)", {"*2,2,2,2", "2,*2,2", "2,2*"}, q(1, 4), true);
    b.fixed("O(2,2x)", {"2,2x"}, q(1, 4), false);
    b.fixed("O(2,4,4)", {"2,4,4"}, q(3, 4), false);
    b.fixed("O(*2,4,4), O(4,*2)", {"*2,4,4", "4,*2"}, q(3, 8), true);
    b.fixed("O(3,3,3)", {"3,3,3"}, q(2, 3), false);
    b.fixed("O(*3,3,3), O(3,*3)", {"*3,3,3", "3,*3"}, q(1, 3), true);
    b.fixed("O(2,3,6)", {"2,3,6"}, q(5, 6), false);
    b.fixed("O(*2,3,6)", {"*2,3,6"}, q(5, 12), true);
    return b.rows;
}

std::vector<PillowEntry> pillow_table(Order family_bound) {
    std::vector<PillowEntry> rows;
    auto add = [&rows](const std::string& row, const std::string& notation, Rational chi, Rational c) {
        rows.push_back({row, notation, std::move(chi), std::move(c)});
    };
    // chi > 0
    add("O(2,2,2)", "2,2,2", q(1, 2), 5 + q(1, 2));
    for (Order m = 2; m <= family_bound; ++m) add("O(2,2,m)", "2,2," + str(m), recip(m), 3 + m + recip(m));
    add("O(2,3,3)", "2,3,3", q(1, 6), 7 + q(1, 6));
    add("O(2,3,4)", "2,3,4", q(1, 12), 8 + q(1, 12));
    add("O(2,3,5)", "2,3,5", q(1, 30), 9 + q(1, 30));
    // chi = 0
    add("O(3,3,3)", "3,3,3", 0, 8);
    add("O(2,4,4)", "2,4,4", 0, 9);
    add("O(2,3,6)", "2,3,6", 0, 10);
    // chi < 0
    add("O(3,3,4)", "3,3,4", q(-1, 12), 8 + q(11, 12));
    add("O(3,4,4)", "3,4,4", q(-1, 6), 9 + q(5, 6));
    add("O(3,3,5)", "3,3,5", q(-2, 15), 9 + q(13, 15));
    add("O(2,4,5)", "2,4,5", q(-1, 20), 9 + q(19, 20));
    return rows;
}

std::vector<std::string> expansion_rows() {
    std::vector<std::string> out;
    for (const auto& e : expansion_table(2)) {
        if (out.empty() || out.back() != e.row) out.push_back(e.row);
    }
    return out;
}

std::vector<std::string> pillow_rows() {
    std::vector<std::string> out;
    for (const auto& e : pillow_table(2)) {
        if (out.empty() || out.back() != e.row) out.push_back(e.row);
    }
    return out;
}

TableCheck check_expansion_table(Order family_bound) {
    TableCheck check;
    for (const auto& e : expansion_table(family_bound)) {
        const auto sig = conway::parse(e.notation);
        const Rational constant = degree_zero_term(sig);
        const bool mirror = has_half_integer_terms(sig);
        ++check.entries_checked;
        if (constant != e.constant) {
            check.mismatches.push_back({e.row, e.notation, "degree 0", e.constant.str(), constant.str()});
        }
        if (mirror != e.mirror_term) {
            check.mismatches.push_back({e.row, e.notation, "mirror term", e.mirror_term ? "yes" : "no",
                                        mirror ? "yes" : "no"});
        }
    }
    return check;
}

TableCheck check_pillow_table(Order family_bound) {
    TableCheck check;
    for (const auto& e : pillow_table(family_bound)) {
        const auto sig = conway::parse(e.notation);
        const Rational chi = euler_characteristic(sig);
        const Rational c = spectral_c(sig);
        ++check.entries_checked;
        if (chi != e.chi) check.mismatches.push_back({e.row, e.notation, "chi", e.chi.str(), chi.str()});
        if (c != e.c) check.mismatches.push_back({e.row, e.notation, "c", e.c.str(), c.str()});
    }
    return check;
}

}  // namespace orbiheat::tables
