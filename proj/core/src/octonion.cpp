#include "horoct/octonion.hpp"

#include "horoct/dual.hpp"

#include <random>
#include <stdexcept>

namespace horoct {

MulTable build_mul_table(const std::array<IndexTriple, 7>& triples) {
    MulTable t;
    for (std::size_t j = 0; j < 8; ++j) {
        t.sign[0][j] = 1;
        t.index[0][j] = static_cast<std::uint8_t>(j);
        t.sign[j][0] = 1;
        t.index[j][0] = static_cast<std::uint8_t>(j);
    }
    for (std::size_t i = 1; i < 8; ++i) {
        t.sign[i][i] = -1;
        t.index[i][i] = 0;
    }

    bool seen[8][8] = {};
    for (const auto& triple : triples) {
        const std::uint8_t rot[3][3] = {{triple[0], triple[1], triple[2]},
                                        {triple[1], triple[2], triple[0]},
                                        {triple[2], triple[0], triple[1]}};
        for (const auto& r : rot) {
            const auto i = r[0], j = r[1], k = r[2];
            if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7 || i == j || j == k || i == k)
                throw std::invalid_argument("triple indices must be distinct and in 1..7");
            if (seen[i][j]) throw std::invalid_argument("pair covered twice by triples");
            seen[i][j] = seen[j][i] = true;
            t.sign[i][j] = 1;
            t.index[i][j] = k;
            t.sign[j][i] = -1;
            t.index[j][i] = k;
        }
    }
    for (std::size_t i = 1; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            if (!seen[i][j]) throw std::invalid_argument("pair not covered by any triple");
    return t;
}

const MulTable& octonion_table() {
    static const MulTable table = build_mul_table(kCanonicalTriples);
    return table;
}

bool certify_composition(const MulTable& table, std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);

    const auto draw = [&] {
        Octonion<BigRat> x;
        for (auto& coeff : x.c) coeff = BigRat(num(rng)) / BigRat(den(rng));
        return x;
    };
    // Norm against the candidate table; impurity of x conj(x) is failure, not
    // an internal error.
    const auto pure_norm = [&](const Octonion<BigRat>& x, BigRat& out) {
        const Octonion<BigRat> p = mul(x, conj(x), table);
        for (std::size_t i = 1; i < 8; ++i)
            if (p.c[i] != 0) return false;
        out = p.c[0];
        return true;
    };

    for (int i = 0; i < trials; ++i) {
        const auto x = draw();
        const auto y = draw();
        const auto xy = mul(x, y, table);
        BigRat nx, ny, nxy;
        if (!pure_norm(x, nx) || !pure_norm(y, ny) || !pure_norm(xy, nxy))
            return false;
        if (nxy != nx * ny) return false;
        if (mul(x, xy, table) != mul(mul(x, x, table), y, table)) return false;
        if (mul(mul(y, x, table), x, table) != mul(y, mul(x, x, table), table)) return false;
        if (conj(xy) != mul(conj(y), conj(x), table)) return false;
    }
    return true;
}

std::string to_string(const Octonion<BigRat>& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < 8; ++i) {
        if (i) out += ',';
        out += to_canonical(a.c[i]);
    }
    out += ')';
    return out;
}

std::string to_string(const DualElem<BigRat>& x) {
    if (x.du < 0) return to_canonical(x.re) + " - " + to_canonical(BigRat(-x.du)) + "ε";
    return to_canonical(x.re) + " + " + to_canonical(x.du) + "ε";
}

std::string to_string(const DualElem<Octonion<BigRat>>& x) {
    return to_string(x.re) + " + " + to_string(x.du) + "ε";
}

} // namespace horoct
