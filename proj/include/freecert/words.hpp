#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freecert/groups.hpp"

namespace freecert {

/// One letter x_index^sign of a free group; index is 1-based, sign is +-1.
struct Letter {
    int index = 1;
    int sign = 1;

    bool operator==(const Letter& other) const {
        return index == other.index && sign == other.sign;
    }
    bool operator!=(const Letter& other) const { return !(*this == other); }
};

/// Enumeration code: x1 < x1^-1 < x2 < x2^-1 < ...; inverting a letter
/// flips the low bit.
inline int letter_code(const Letter& l) { return 2 * (l.index - 1) + (l.sign < 0 ? 1 : 0); }
inline Letter letter_from_code(int code) {
    return Letter{code / 2 + 1, (code % 2) ? -1 : 1};
}
inline Letter letter_inverse(const Letter& l) { return Letter{l.index, -l.sign}; }
inline bool cancels(const Letter& a, const Letter& b) {
    return a.index == b.index && a.sign == -b.sign;
}

/// Word in a free group as an explicit letter sequence. Construction does
/// not reduce; callers that require reducedness say so via is_reduced().
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool is_reduced() const;
    FreeWord freely_reduced() const;
    FreeWord inverse() const;

    /// "x1 x2^-1"; empty word prints as "1".
    std::string str() const;

    bool operator==(const FreeWord& other) const { return letters_ == other.letters_; }

private:
    std::vector<Letter> letters_;
};

/// Length-then-lexicographic order on reduced words (letter order as in
/// letter_code); used to merge parallel verification results.
bool word_order_less(const FreeWord& a, const FreeWord& b);

/// Streams every reduced word of length 1..max_len over rank `rank`
/// exactly once, in length-then-lexicographic order. Optionally pinned to
/// a fixed first letter so independent consumers can partition the space.
/// Deterministic and restartable.
class ReducedWordEnumerator {
public:
    ReducedWordEnumerator(int rank, std::size_t max_len);
    ReducedWordEnumerator(int rank, std::size_t max_len, Letter first);

    /// Fills `out` and returns true, or returns false when exhausted.
    bool next(FreeWord& out);
    void reset();

private:
    bool fill_smallest_from(std::size_t pos);

    int rank_;
    std::size_t max_len_;
    std::optional<int> first_code_;
    std::vector<int> codes_;
    bool fresh_ = true;
    bool exhausted_ = false;
};

/// 2r (2r-1)^(len-1) reduced words of length len >= 1.
unsigned long long reduced_word_count(int rank, std::size_t len);
unsigned long long reduced_word_count_up_to(int rank, std::size_t max_len);

/// Conjugate of a single variable letter: coefficient * x_index^sign *
/// coefficient^-1.
struct BasicWord {
    Element coefficient;
    int index = 1;
    int sign = 1;
};

/// Word with coefficients: an element of the free product of the group
/// with a free group. Stored canonically reduced — adjacent constants
/// merged, identity constants dropped, adjacent cancelling letters
/// removed — so the identity is the empty sequence and equality of values
/// is equality of part sequences.
class FreeProductWord {
public:
    using Part = std::variant<Element, Letter>;

    FreeProductWord() = default;

    /// Canonical reduction of an arbitrary part sequence. The result
    /// evaluates identically to the input under every assignment.
    static FreeProductWord reduce(const std::vector<Part>& raw);

    const std::vector<Part>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }

    /// Largest variable index appearing (0 when none).
    int max_variable_index() const;

    FreeProductWord inverse() const;
    FreeProductWord concat(const FreeProductWord& other) const;

    /// Product of the constants, i.e. the evaluation at (1, ..., 1).
    Element constant_evaluation(const GroupSpec& spec) const;

    /// Substitutes assignment[i-1] for x_i and multiplies out. Re-checks
    /// membership of every constant and assigned value.
    Element evaluate(const std::vector<Element>& assignment, const GroupSpec& spec) const;

    /// w(1,...,1)^-1 * w, reduced; evaluates to the identity at the
    /// trivial assignment.
    FreeProductWord normalized(const GroupSpec& spec) const;

    /// Writes a normalized word as a product of basic words via the prefix
    /// construction: the j-th variable letter y_j with preceding constants
    /// g_0 ... g_{j-1} contributes (g_0...g_{j-1}) y_j (g_0...g_{j-1})^-1.
    /// Adjacent results with mutually inverse types and equal coefficients
    /// are cancelled. Throws NotNormalized when w(1,...,1) != 1.
    std::vector<BasicWord> decompose_basic(const GroupSpec& spec) const;

    bool operator==(const FreeProductWord& other) const;

private:
    std::vector<Part> parts_;
};

/// Product of basic words, reduced.
FreeProductWord compose_basic(const std::vector<BasicWord>& words);

}  // namespace freecert
