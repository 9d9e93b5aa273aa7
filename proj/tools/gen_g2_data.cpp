// Derives the split-G2 tables that ship in src/g2_data.cpp and
// data/g2_structure.json, from first principles:
//
//   1. Split octonions as Zorn vector matrices over the rationals; the
//      7-dimensional imaginary part in the fixed weight basis
//      (v1, 2*w3, 2*w2, u, v2, v3, 2*w1), ordered by torus weight and
//      scaled so the invariant bilinear form is 2 x (anti-diagonal ones).
//   2. The derivation algebra of the product, computed as the nullspace of
//      the Leibniz constraints (a 392 x 56 exact linear system). Its
//      dimension must come out as 14.
//   3. Root-space decomposition of the derivation algebra under two
//      explicit commuting diagonal derivations, yielding 12 integral
//      nilpotent root matrices, ordered by their pairing with the
//      tau cocharacter (-3..3).
//   4. The structure tensor T(x, y, z) = <x*y, z> on the same basis.
//
// Everything is checked along the way (norm multiplicativity, Leibniz,
// nilpotency, exp preserving the form and tensor) and the tool aborts on
// any mismatch. Run: gen_g2_data <out.cpp> <out.json>
#include <array>
#include <cassert>
#include <fstream>
#include <iostream>
#include <map>
#include <vector>

#include "freecert/groups.hpp"
#include "freecert/linalg.hpp"
#include "freecert/matrix.hpp"
#include "freecert/rng.hpp"

using namespace freecert;

namespace {

struct Zorn {
    Rational a, b;
    std::array<Rational, 3> v{}, w{};
};

std::array<Rational, 3> cross(const std::array<Rational, 3>& x,
                              const std::array<Rational, 3>& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Rational dot(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

Zorn mul(const Zorn& x, const Zorn& y) {
    Zorn z;
    z.a = x.a * y.a + dot(x.v, y.w);
    z.b = x.b * y.b + dot(x.w, y.v);
    auto ww = cross(x.w, y.w);
    auto vv = cross(x.v, y.v);
    for (int i = 0; i < 3; ++i) {
        z.v[i] = x.a * y.v[i] + y.b * x.v[i] + ww[i];
        z.w[i] = y.a * x.w[i] + x.b * y.w[i] - vv[i];
    }
    return z;
}

Zorn add(const Zorn& x, const Zorn& y) {
    Zorn z;
    z.a = x.a + y.a;
    z.b = x.b + y.b;
    for (int i = 0; i < 3; ++i) {
        z.v[i] = x.v[i] + y.v[i];
        z.w[i] = x.w[i] + y.w[i];
    }
    return z;
}


Rational norm(const Zorn& x) { return x.a * x.b - dot(x.v, x.w); }

// Basis of the full algebra: index 0..6 = imaginary basis f, index 7 = one.
Zorn one() {
    Zorn z;
    z.a = 1;
    z.b = 1;
    return z;
}

Zorn basis_f(int i) {
    Zorn z;
    auto set_v = [&](int j, const Rational& c) { z.v[j] = c; };
    auto set_w = [&](int j, const Rational& c) { z.w[j] = c; };
    switch (i) {
        case 0: set_v(0, 1); break;            // v1
        case 1: set_w(2, 2); break;            // 2 w3
        case 2: set_w(1, 2); break;            // 2 w2
        case 3: z.a = 1; z.b = -1; break;      // u
        case 4: set_v(1, 1); break;            // v2
        case 5: set_v(2, 1); break;            // v3
        case 6: set_w(0, 2); break;            // 2 w1
        default: assert(false);
    }
    return z;
}

Zorn basis(int i) { return i == 7 ? one() : basis_f(i); }

// Coordinates of z in the basis (f0..f6, one). v/w coords read off
// directly; the scaled w entries divide by 2.
std::array<Rational, 8> coords(const Zorn& z) {
    std::array<Rational, 8> c{};
    c[0] = z.v[0];
    c[4] = z.v[1];
    c[5] = z.v[2];
    c[6] = z.w[0] / 2;
    c[2] = z.w[1] / 2;
    c[1] = z.w[2] / 2;
    c[3] = (z.a - z.b) / 2;
    c[7] = (z.a + z.b) / 2;
    return c;
}

Rational bilinear(const Zorn& x, const Zorn& y) {
    return -(norm(add(x, y)) - norm(x) - norm(y));
}

void check(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "check failed: " << what << "\n";
        std::exit(1);
    }
}


}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: gen_g2_data <out.cpp> <out.json>\n";
        return 2;
    }

    // --- sanity: composition algebra axioms on random integer samples ---
    SplitMix64 rng(20260808);
    auto random_zorn = [&]() {
        Zorn z;
        auto r = [&]() { return Rational(static_cast<long>(rng.below(7)) - 3); };
        z.a = r();
        z.b = r();
        for (int i = 0; i < 3; ++i) {
            z.v[i] = r();
            z.w[i] = r();
        }
        return z;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Zorn x = random_zorn(), y = random_zorn();
        check(norm(mul(x, y)) == norm(x) * norm(y), "norm multiplicativity");
        // alternative laws
        check(coords(mul(mul(x, x), y)) == coords(mul(x, mul(x, y))), "left alternative");
        check(coords(mul(y, mul(x, x))) == coords(mul(mul(y, x), x)), "right alternative");
        Zorn e = one();
        check(coords(mul(e, x)) == coords(x) && coords(mul(x, e)) == coords(x), "unit");
    }

    // --- bilinear form on the f basis: 2 x anti-diagonal ones ---
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            Rational expect = (i + j == 6) ? Rational(2) : Rational(0);
            check(bilinear(basis_f(i), basis_f(j)) == expect, "Gram 2J at " +
                  std::to_string(i) + "," + std::to_string(j));
        }

    // --- multiplication table in coordinates ---
    // table[p][q] = coords of basis(p) * basis(q), p,q in 0..7
    std::array<std::array<std::array<Rational, 8>, 8>, 8> table;
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) table[p][q] = coords(mul(basis(p), basis(q)));

    // --- structure tensor T(i,j,k) = <f_i f_j, f_k> ---
    std::vector<std::array<long, 4>> tensor;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k) {
                Rational t = bilinear(mul(basis_f(i), basis_f(j)), basis_f(k));
                if (is_zero(t)) continue;
                check(t.get_den() == 1, "tensor integrality");
                tensor.push_back({i, j, k, static_cast<long>(t.get_num().get_si())});
            }
    // alternating
    {
        std::map<std::array<int, 3>, long> dense;
        for (const auto& e : tensor) dense[{(int)e[0], (int)e[1], (int)e[2]}] = e[3];
        auto at = [&](int i, int j, int k) {
            auto it = dense.find({i, j, k});
            return it == dense.end() ? 0L : it->second;
        };
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                for (int k = 0; k < 7; ++k) {
                    check(at(i, j, k) == -at(j, i, k), "antisymmetry in 1,2");
                    check(at(i, j, k) == -at(i, k, j), "antisymmetry in 2,3");
                }
        // grading under tau exponents (-3..3)
        for (const auto& e : tensor)
            check((e[0] - 3) + (e[1] - 3) + (e[2] - 3) == 0, "tensor grading");
    }

    // --- derivations: D(x y) = D(x) y + x D(y), unknowns d[c][j], c in
    // 0..7 (output component, 7 = the unit), j in 0..6 (input f_j) ---
    const int unknowns = 8 * 7;
    auto var = [](int c, int j) { return c * 7 + j; };
    std::vector<RowVec> eqs;
    for (int p = 0; p < 7; ++p)
        for (int q = 0; q < 7; ++q) {
            // component-c equation of D(f_p f_q) - D(f_p) f_q - f_p D(f_q) = 0
            for (int c = 0; c < 8; ++c) {
                RowVec row(unknowns, Rational(0));
                // D(f_p f_q): expand f_p f_q in basis, unit part killed by D
                for (int k = 0; k < 7; ++k) {
                    const Rational& m = table[p][q][k];
                    if (!is_zero(m)) row[var(c, k)] += m;
                }
                // - D(f_p) f_q = - sum_e d[e][p] (basis_e f_q)
                for (int e = 0; e < 8; ++e) {
                    const Rational& m = table[e][q][c];
                    if (!is_zero(m)) row[var(e, p)] -= m;
                }
                // - f_p D(f_q) = - sum_e d[e][q] (f_p basis_e)
                for (int e = 0; e < 8; ++e) {
                    const Rational& m = table[p][e][c];
                    if (!is_zero(m)) row[var(e, q)] -= m;
                }
                eqs.push_back(std::move(row));
            }
        }
    std::vector<RowVec> dbasis = right_nullspace(eqs, unknowns);
    check(dbasis.size() == 14, "derivation algebra dimension 14, got " +
          std::to_string(dbasis.size()));
    for (const auto& d : dbasis)
        for (int j = 0; j < 7; ++j)
            check(is_zero(d[var(7, j)]), "derivations stay imaginary");

    auto as_matrix = [&](const RowVec& d) {
        MatQ m(7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) m.at(i, j) = d[var(i, j)];
        return m;
    };

    // --- two commuting diagonal derivations h1, h2 and the tau direction ---
    // Torus weights: diag pattern (m1, -m3, -m2, 0, m2, m3, -m1).
    auto solve_diagonal = [&](long m1, long m2, long m3) {
        const long want[7] = {m1, -m3, -m2, 0, m2, m3, -m1};
        // Solve sum_t x_t dbasis[t] == diag(want) as a least-constrained
        // exact system: unknowns x_t plus nothing else.
        std::vector<RowVec> sys;  // rows: [coeffs | rhs] -> use nullspace of augmented? do direct elimination
        // Build augmented system A x = b with 49 equations.
        std::vector<RowVec> a;
        RowVec b;
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                RowVec row(dbasis.size() + 1, Rational(0));
                for (std::size_t t = 0; t < dbasis.size(); ++t)
                    row[t] = dbasis[t][var(i, j)];
                row[dbasis.size()] = (i == j) ? Rational(-want[i]) : Rational(0);
                a.push_back(std::move(row));
            }
        // x solves A x = diag  <=>  (x, 1) in nullspace of [A | -diag]
        auto null = right_nullspace(a, static_cast<int>(dbasis.size()) + 1);
        for (const auto& v : null)
            if (!is_zero(v[dbasis.size()])) {
                Rational s = v[dbasis.size()];
                RowVec combined(unknowns, Rational(0));
                for (std::size_t t = 0; t < dbasis.size(); ++t) {
                    Rational c = v[t] / s;
                    for (int u = 0; u < unknowns; ++u) combined[u] += c * dbasis[t][u];
                }
                return as_matrix(combined);
            }
        check(false, "diagonal derivation not found");
        return MatQ(7);
    };
    MatQ h1 = solve_diagonal(1, 0, -1);
    MatQ h2 = solve_diagonal(0, 1, -1);
    MatQ hc = solve_diagonal(-3, 1, 2);  // tau direction: diag(-3..3)
    for (int i = 0; i < 7; ++i) check(hc.at(i, i) == i - 3, "hc is diag(-3..3)");

    // --- root spaces ---
    struct Root {
        int a, b;     // values on (h1, h2)
        long height;  // value on hc
        MatQ x = MatQ(7);
    };
    // chi1, chi2, chi3 = -chi1-chi2 (short); differences (long)
    const int root_values[12][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1}, {-1, -1}, {1, 1},
                                    {1, -1}, {-1, 1}, {2, 1},  {-2, -1}, {1, 2},  {-1, -2}};
    const long root_heights[12] = {-3, 3, 1, -1, 2, -2, -4, 4, -5, 5, -1, 1};
    std::vector<Root> roots;
    for (int r = 0; r < 12; ++r) {
        // solve in the 14-dim space: [h1, X] = a X, [h2, X] = b X
        std::vector<RowVec> sys;
        auto add_constraint = [&](const MatQ& h, int value) {
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) {
                    RowVec row(dbasis.size(), Rational(0));
                    for (std::size_t t = 0; t < dbasis.size(); ++t) {
                        MatQ x = as_matrix(dbasis[t]);
                        MatQ comm = h * x - x * h;
                        row[t] = comm.at(i, j) - Rational(value) * x.at(i, j);
                    }
                    sys.push_back(std::move(row));
                }
        };
        add_constraint(h1, root_values[r][0]);
        add_constraint(h2, root_values[r][1]);
        auto null = right_nullspace(sys, static_cast<int>(dbasis.size()));
        check(null.size() == 1, "root space dimension 1 for root " + std::to_string(r) +
              ", got " + std::to_string(null.size()));
        RowVec combined(unknowns, Rational(0));
        for (std::size_t t = 0; t < dbasis.size(); ++t)
            for (int u = 0; u < unknowns; ++u) combined[u] += null[0][t] * dbasis[t][u];
        MatQ x = as_matrix(combined);
        // scale to primitive integral with positive leading entry
        mpz_class lcm_den(1), gcd_num(0);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                if (!is_zero(x.at(i, j))) {
                    mpz_class den = x.at(i, j).get_den();
                    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
                }
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                x.at(i, j) *= Rational(lcm_den);
                if (!is_zero(x.at(i, j))) {
                    mpz_class num = abs(x.at(i, j).get_num());
                    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
                }
            }
        bool flip = false;
        for (int i = 0; i < 49 && !is_zero(gcd_num); ++i) {
            Rational& e = x.at(i / 7, i % 7);
            if (!is_zero(e)) {
                flip = sgn(e) < 0;
                break;
            }
        }
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                x.at(i, j) /= Rational(gcd_num);
                if (flip) x.at(i, j) = -x.at(i, j);
                check(x.at(i, j).get_den() == 1, "integral root matrix");
            }
        roots.push_back(Root{root_values[r][0], root_values[r][1], root_heights[r], x});
        // height sanity: [hc, X] = height X
        MatQ comm = hc * x - x * hc;
        MatQ scaled(7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) scaled.at(i, j) = Rational(root_heights[r]) * x.at(i, j);
        check(comm == scaled, "height of root " + std::to_string(r));
    }

    // --- order positives by (height, a, b); negatives aligned ---
    std::vector<int> pos_idx;
    for (int r = 0; r < 12; ++r)
        if (roots[r].height > 0) pos_idx.push_back(r);
    check(pos_idx.size() == 6, "six positive roots");
    std::sort(pos_idx.begin(), pos_idx.end(), [&](int x, int y) {
        auto kx = std::array<long, 3>{roots[x].height, roots[x].a, roots[x].b};
        auto ky = std::array<long, 3>{roots[y].height, roots[y].a, roots[y].b};
        return kx < ky;
    });
    auto find_negative = [&](int r) {
        for (int s = 0; s < 12; ++s)
            if (roots[s].a == -roots[r].a && roots[s].b == -roots[r].b) return s;
        check(false, "negative root missing");
        return -1;
    };

    std::vector<MatQ> pos, neg;
    for (int r : pos_idx) {
        pos.push_back(roots[r].x);
        neg.push_back(roots[find_negative(r)].x);
    }

    // --- final validation: nilpotency, so(J), exp preserves form+tensor ---
    const MatQ j = gram_matrix(7);
    auto dense_t = [&]() {
        std::map<std::array<int, 3>, long> d;
        for (const auto& e : tensor) d[{(int)e[0], (int)e[1], (int)e[2]}] = e[3];
        return d;
    }();
    auto tensor_at = [&](int a, int b, int c) {
        auto it = dense_t.find({a, b, c});
        return it == dense_t.end() ? 0L : it->second;
    };
    auto preserves_tensor = [&](const MatQ& m) {
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
                for (int c = 0; c < 7; ++c) {
                    Rational acc(0);
                    for (const auto& e : tensor)
                        acc += Rational(e[3]) * m.at(e[0], a) * m.at(e[1], b) * m.at(e[2], c);
                    if (acc != tensor_at(a, b, c)) return false;
                }
        return true;
    };
    const Rational params[4] = {Rational(1), Rational(1, 2), Rational(-2), Rational(3)};
    auto validate_nilpotent = [&](const MatQ& x) {
        MatQ x2 = x * x;
        MatQ x3 = x2 * x;
        check(x3 == MatQ(7), "cube vanishes");
        check(x.transpose() * j + j * x == MatQ(7), "in so(J)");
        for (const auto& s : params) {
            MatQ g = exp_nilpotent(x, s);
            check(determinant(g) == 1, "exp determinant 1");
            check(g.transpose() * j * g == j, "exp preserves J");
            check(preserves_tensor(g), "exp preserves tensor");
        }
    };
    for (const auto& x : pos) validate_nilpotent(x);
    for (const auto& x : neg) validate_nilpotent(x);

    // --- emit the .cpp ---
    std::ofstream cpp(argv[1]);
    cpp << "// Frozen split-G2 tables in the fixed weight basis\n";
    cpp << "// (v1, 2*w3, 2*w2, u, v2, v3, 2*w1) of imaginary split octonions,\n";
    cpp << "// torus exponents (-3,-2,-1,0,1,2,3). Derived and cross-checked by\n";
    cpp << "// tools/gen_g2_data.cpp; data/g2_structure.json is the same content\n";
    cpp << "// as a versioned data file. Do not edit by hand.\n";
    cpp << "#include \"freecert/groups.hpp\"\n\n";
    cpp << "namespace freecert {\n\nnamespace {\n\n";
    cpp << "constexpr long kTensor[][4] = {\n";
    for (std::size_t i = 0; i < tensor.size(); ++i) {
        const auto& e = tensor[i];
        cpp << "    {" << e[0] << ", " << e[1] << ", " << e[2] << ", " << e[3] << "},";
        if (i % 4 == 3 || i + 1 == tensor.size()) cpp << "\n";
    }
    cpp << "};\n\n";
    auto emit_mats = [&](const char* name, const std::vector<MatQ>& mats) {
        cpp << "constexpr long " << name << "[6][49] = {\n";
        for (const auto& m : mats) {
            cpp << "    {";
            for (int i = 0; i < 7; ++i) {
                if (i) cpp << "\n     ";
                for (int jj = 0; jj < 7; ++jj) {
                    cpp << m.at(i, jj).get_num().get_str() << ",";
                    if (jj + 1 < 7) cpp << " ";
                }
            }
            cpp << "},\n";
        }
        cpp << "};\n\n";
    };
    emit_mats("kPositive", pos);
    emit_mats("kNegative", neg);
    cpp << "std::vector<MatQ> load(const long (*data)[49]) {\n"
           "    std::vector<MatQ> out;\n"
           "    for (int m = 0; m < 6; ++m) {\n"
           "        MatQ x(7);\n"
           "        for (int i = 0; i < 7; ++i)\n"
           "            for (int j = 0; j < 7; ++j) x.at(i, j) = data[m][i * 7 + j];\n"
           "        out.push_back(std::move(x));\n"
           "    }\n"
           "    return out;\n"
           "}\n\n}  // namespace\n\n";
    cpp << "const std::vector<G2TensorEntry>& g2_structure_tensor() {\n"
           "    static const std::vector<G2TensorEntry> tensor = [] {\n"
           "        std::vector<G2TensorEntry> t;\n"
           "        for (const auto& e : kTensor)\n"
           "            t.push_back(G2TensorEntry{static_cast<int>(e[0]), static_cast<int>(e[1]),\n"
           "                                      static_cast<int>(e[2]), e[3]});\n"
           "        return t;\n"
           "    }();\n"
           "    return tensor;\n"
           "}\n\n"
           "const std::vector<MatQ>& g2_positive_nilpotents() {\n"
           "    static const std::vector<MatQ> mats = load(kPositive);\n"
           "    return mats;\n"
           "}\n\n"
           "const std::vector<MatQ>& g2_negative_nilpotents() {\n"
           "    static const std::vector<MatQ> mats = load(kNegative);\n"
           "    return mats;\n"
           "}\n\n"
           "int g2_data_version() { return 1; }\n\n"
           "}  // namespace freecert\n";
    cpp.close();

    // --- emit the JSON data file ---
    std::ofstream js(argv[2]);
    js << "{\n  \"version\": 1,\n";
    js << "  \"basis\": \"imaginary split octonions (v1, 2*w3, 2*w2, u, v2, v3, 2*w1), "
          "torus exponents (-3,-2,-1,0,1,2,3), Gram form J = anti-diagonal ones "
          "(invariant bilinear form equals 2*J)\",\n";
    js << "  \"tensor\": [\n";
    for (std::size_t i = 0; i < tensor.size(); ++i) {
        const auto& e = tensor[i];
        js << "    [" << e[0] << ", " << e[1] << ", " << e[2] << ", " << e[3] << "]"
           << (i + 1 == tensor.size() ? "\n" : ",\n");
    }
    js << "  ],\n";
    auto emit_json_mats = [&](const char* name, const std::vector<MatQ>& mats, bool last) {
        js << "  \"" << name << "\": [\n";
        for (std::size_t m = 0; m < mats.size(); ++m) {
            js << "    [";
            for (int i = 0; i < 7; ++i) {
                js << "[";
                for (int jj = 0; jj < 7; ++jj)
                    js << mats[m].at(i, jj).get_num().get_str() << (jj + 1 < 7 ? ", " : "");
                js << (i + 1 < 7 ? "], " : "]");
            }
            js << (m + 1 < mats.size() ? "],\n" : "]\n");
        }
        js << (last ? "  ]\n" : "  ],\n");
    };
    emit_json_mats("positive_nilpotents", pos, false);
    emit_json_mats("negative_nilpotents", neg, true);
    js << "}\n";
    js.close();

    std::cout << "tensor entries: " << tensor.size() << "\n";
    std::cout << "wrote " << argv[1] << " and " << argv[2] << "\n";
    return 0;
}
