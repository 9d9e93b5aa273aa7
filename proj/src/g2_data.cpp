// Frozen split-G2 tables in the fixed weight basis
// (v1, 2*w3, 2*w2, u, v2, v3, 2*w1) of imaginary split octonions,
// torus exponents (-3,-2,-1,0,1,2,3). Derived and cross-checked by
// tools/gen_g2_data.cpp; data/g2_structure.json is the same content
// as a versioned data file. Do not edit by hand.
#include "freecert/groups.hpp"

namespace freecert {

namespace {

constexpr long kTensor[][4] = {
    {0, 3, 6, -2},    {0, 4, 5, -1},    {0, 5, 4, 1},    {0, 6, 3, 2},
    {1, 2, 6, -8},    {1, 3, 5, 2},    {1, 5, 3, -2},    {1, 6, 2, 8},
    {2, 1, 6, 8},    {2, 3, 4, 2},    {2, 4, 3, -2},    {2, 6, 1, -8},
    {3, 0, 6, 2},    {3, 1, 5, -2},    {3, 2, 4, -2},    {3, 4, 2, 2},
    {3, 5, 1, 2},    {3, 6, 0, -2},    {4, 0, 5, 1},    {4, 2, 3, 2},
    {4, 3, 2, -2},    {4, 5, 0, -1},    {5, 0, 4, -1},    {5, 1, 3, 2},
    {5, 3, 1, -2},    {5, 4, 0, 1},    {6, 0, 3, -2},    {6, 1, 2, -8},
    {6, 2, 1, 8},    {6, 3, 0, 2},
};

constexpr long kPositive[6][49] = {
    {0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 1, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, -1, 0, 0,
     0, 0, 0, 0, 0, 0, 0,},
    {0, 0, 0, 0, 0, 0, 0,
     1, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, -4, 0, 0, 0, 0,
     0, 0, 0, 4, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, -1, 0,},
    {0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     1, 0, 0, 0, 0, 0, 0,
     0, 4, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, -4, 0, 0, 0,
     0, 0, 0, 0, -1, 0, 0,},
    {0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     1, 0, 0, 0, 0, 0, 0,
     0, -2, 0, 0, 0, 0, 0,
     0, 0, 2, 0, 0, 0, 0,
     0, 0, 0, -1, 0, 0, 0,},
    {0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     1, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, -1, 0, 0, 0, 0,},
    {0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     1, 0, 0, 0, 0, 0, 0,
     0, -1, 0, 0, 0, 0, 0,},
};

constexpr long kNegative[6][49] = {
    {0, 0, 0, 0, 0, 0, 0,
     0, 0, 1, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, -1, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,},
    {0, 2, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, -1, 0, 0, 0,
     0, 0, 0, 0, 1, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, -2,
     0, 0, 0, 0, 0, 0, 0,},
    {0, 0, 2, 0, 0, 0, 0,
     0, 0, 0, 1, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, -1, 0,
     0, 0, 0, 0, 0, 0, -2,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,},
    {0, 0, 0, 4, 0, 0, 0,
     0, 0, 0, 0, -1, 0, 0,
     0, 0, 0, 0, 0, 1, 0,
     0, 0, 0, 0, 0, 0, -4,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,},
    {0, 0, 0, 0, 1, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, -1,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,},
    {0, 0, 0, 0, 0, 1, 0,
     0, 0, 0, 0, 0, 0, -1,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,
     0, 0, 0, 0, 0, 0, 0,},
};

std::vector<MatQ> load(const long (*data)[49]) {
    std::vector<MatQ> out;
    for (int m = 0; m < 6; ++m) {
        MatQ x(7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) x.at(i, j) = data[m][i * 7 + j];
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

const std::vector<G2TensorEntry>& g2_structure_tensor() {
    static const std::vector<G2TensorEntry> tensor = [] {
        std::vector<G2TensorEntry> t;
        for (const auto& e : kTensor)
            t.push_back(G2TensorEntry{static_cast<int>(e[0]), static_cast<int>(e[1]),
                                      static_cast<int>(e[2]), e[3]});
        return t;
    }();
    return tensor;
}

const std::vector<MatQ>& g2_positive_nilpotents() {
    static const std::vector<MatQ> mats = load(kPositive);
    return mats;
}

const std::vector<MatQ>& g2_negative_nilpotents() {
    static const std::vector<MatQ> mats = load(kNegative);
    return mats;
}

int g2_data_version() { return 1; }

}  // namespace freecert
