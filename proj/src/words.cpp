#include "freecert/words.hpp"

#include <sstream>

namespace freecert {

bool FreeWord::is_reduced() const {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (cancels(letters_[i], letters_[i + 1])) return false;
    return true;
}

FreeWord FreeWord::freely_reduced() const {
    std::vector<Letter> stack;
    for (const Letter& l : letters_) {
        if (!stack.empty() && cancels(stack.back(), l))
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return FreeWord(std::move(stack));
}

FreeWord FreeWord::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back(letter_inverse(*it));
    return FreeWord(std::move(out));
}

std::string FreeWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << " ";
        os << "x" << letters_[i].index;
        if (letters_[i].sign < 0) os << "^-1";
    }
    return os.str();
}

bool word_order_less(const FreeWord& a, const FreeWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ca = letter_code(a.letters()[i]);
        int cb = letter_code(b.letters()[i]);
        if (ca != cb) return ca < cb;
    }
    return false;
}

ReducedWordEnumerator::ReducedWordEnumerator(int rank, std::size_t max_len)
    : rank_(rank), max_len_(max_len) {
    if (rank < 1) throw Error("rank must be >= 1");
}

ReducedWordEnumerator::ReducedWordEnumerator(int rank, std::size_t max_len, Letter first)
    : rank_(rank), max_len_(max_len), first_code_(letter_code(first)) {
    if (rank < 1) throw Error("rank must be >= 1");
    if (first.index < 1 || first.index > rank) throw Error("first letter out of rank");
}

// Fills positions pos.. with the smallest letters avoiding cancellation.
bool ReducedWordEnumerator::fill_smallest_from(std::size_t pos) {
    for (std::size_t p = pos; p < codes_.size(); ++p) {
        int avoid = p == 0 ? -1 : (codes_[p - 1] ^ 1);
        codes_[p] = (avoid == 0) ? 1 : 0;
    }
    return true;
}

bool ReducedWordEnumerator::next(FreeWord& out) {
    const int top = 2 * rank_;
    if (exhausted_) return false;
    if (fresh_) {
        fresh_ = false;
        if (max_len_ == 0) {
            exhausted_ = true;
            return false;
        }
        codes_.assign(1, first_code_ ? *first_code_ : 0);
    } else {
        const std::size_t start = first_code_ ? 1 : 0;
        std::size_t p = codes_.size();
        bool bumped = false;
        while (p > start) {
            --p;
            int avoid = p == 0 ? -1 : (codes_[p - 1] ^ 1);
            int c = codes_[p] + 1;
            while (c < top && c == avoid) ++c;
            if (c < top) {
                codes_[p] = c;
                fill_smallest_from(p + 1);
                bumped = true;
                break;
            }
        }
        if (!bumped) {
            if (codes_.size() >= max_len_) {
                exhausted_ = true;
                return false;
            }
            codes_.assign(codes_.size() + 1, 0);
            if (first_code_) codes_[0] = *first_code_;
            fill_smallest_from(first_code_ ? 1 : 0);
        }
    }
    std::vector<Letter> letters;
    letters.reserve(codes_.size());
    for (int c : codes_) letters.push_back(letter_from_code(c));
    out = FreeWord(std::move(letters));
    return true;
}

void ReducedWordEnumerator::reset() {
    fresh_ = true;
    exhausted_ = false;
    codes_.clear();
}

unsigned long long reduced_word_count(int rank, std::size_t len) {
    if (len == 0) return 1;
    unsigned long long count = 2ULL * rank;
    for (std::size_t i = 1; i < len; ++i) count *= 2ULL * rank - 1;
    return count;
}

unsigned long long reduced_word_count_up_to(int rank, std::size_t max_len) {
    unsigned long long total = 0;
    for (std::size_t l = 1; l <= max_len; ++l) total += reduced_word_count(rank, l);
    return total;
}

FreeProductWord FreeProductWord::reduce(const std::vector<Part>& raw) {
    FreeProductWord out;
    auto& stack = out.parts_;
    auto push_constant = [&](const Element& g) {
        Element merged = g;
        if (!stack.empty() && std::holds_alternative<Element>(stack.back())) {
            merged = multiply(std::get<Element>(stack.back()), g);
            stack.pop_back();
        }
        if (!merged.matrix.is_identity()) stack.emplace_back(std::move(merged));
    };
    for (const Part& part : raw) {
        if (std::holds_alternative<Element>(part)) {
            push_constant(std::get<Element>(part));
            continue;
        }
        const Letter& l = std::get<Letter>(part);
        if (!stack.empty() && std::holds_alternative<Letter>(stack.back()) &&
            cancels(std::get<Letter>(stack.back()), l)) {
            stack.pop_back();
        } else {
            stack.emplace_back(l);
        }
    }
    return out;
}

int FreeProductWord::max_variable_index() const {
    int max = 0;
    for (const Part& p : parts_)
        if (std::holds_alternative<Letter>(p))
            max = std::max(max, std::get<Letter>(p).index);
    return max;
}

FreeProductWord FreeProductWord::inverse() const {
    std::vector<Part> raw;
    raw.reserve(parts_.size());
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (std::holds_alternative<Element>(*it))
            raw.emplace_back(inverse_element(std::get<Element>(*it)));
        else
            raw.emplace_back(letter_inverse(std::get<Letter>(*it)));
    }
    return reduce(raw);
}

FreeProductWord FreeProductWord::concat(const FreeProductWord& other) const {
    std::vector<Part> raw = parts_;
    raw.insert(raw.end(), other.parts_.begin(), other.parts_.end());
    return reduce(raw);
}

Element FreeProductWord::constant_evaluation(const GroupSpec& spec) const {
    Element acc = identity_element(spec);
    for (const Part& p : parts_)
        if (std::holds_alternative<Element>(p)) acc = multiply(acc, std::get<Element>(p));
    return acc;
}

Element FreeProductWord::evaluate(const std::vector<Element>& assignment,
                                  const GroupSpec& spec) const {
    if (max_variable_index() > static_cast<int>(assignment.size()))
        throw Error("assignment has " + std::to_string(assignment.size()) +
                    " entries, word uses x" + std::to_string(max_variable_index()));
    for (const Element& a : assignment) {
        MembershipCheck check = membership(spec, a.matrix);
        if (!check.ok) throw MembershipViolation("assigned value: " + check.reason);
    }
    std::vector<Element> inverses;
    inverses.reserve(assignment.size());
    for (const Element& a : assignment) inverses.push_back(inverse_element(a));

    Element acc = identity_element(spec);
    for (const Part& p : parts_) {
        if (std::holds_alternative<Element>(p)) {
            const Element& g = std::get<Element>(p);
            MembershipCheck check = membership(spec, g.matrix);
            if (!check.ok) throw MembershipViolation("constant: " + check.reason);
            acc = multiply(acc, g);
        } else {
            const Letter& l = std::get<Letter>(p);
            acc = multiply(acc, l.sign > 0 ? assignment[l.index - 1] : inverses[l.index - 1]);
        }
    }
    return acc;
}

FreeProductWord FreeProductWord::normalized(const GroupSpec& spec) const {
    Element at_one = constant_evaluation(spec);
    if (at_one.matrix.is_identity()) return *this;
    std::vector<Part> raw;
    raw.reserve(parts_.size() + 1);
    raw.emplace_back(inverse_element(at_one));
    raw.insert(raw.end(), parts_.begin(), parts_.end());
    return reduce(raw);
}

std::vector<BasicWord> FreeProductWord::decompose_basic(const GroupSpec& spec) const {
    if (!constant_evaluation(spec).matrix.is_identity())
        throw NotNormalized("word does not evaluate to the identity at (1,...,1)");
    std::vector<BasicWord> out;
    Element prefix = identity_element(spec);
    for (const Part& p : parts_) {
        if (std::holds_alternative<Element>(p)) {
            prefix = multiply(prefix, std::get<Element>(p));
            continue;
        }
        const Letter& l = std::get<Letter>(p);
        BasicWord b{prefix, l.index, l.sign};
        // mutually inverse types with the same coefficient cancel
        if (!out.empty() && out.back().index == b.index && out.back().sign == -b.sign &&
            out.back().coefficient.matrix == b.coefficient.matrix) {
            out.pop_back();
        } else {
            out.push_back(std::move(b));
        }
    }
    return out;
}

bool FreeProductWord::operator==(const FreeProductWord& other) const {
    if (parts_.size() != other.parts_.size()) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const Part& a = parts_[i];
        const Part& b = other.parts_[i];
        if (a.index() != b.index()) return false;
        if (std::holds_alternative<Letter>(a)) {
            if (std::get<Letter>(a) != std::get<Letter>(b)) return false;
        } else if (std::get<Element>(a).matrix != std::get<Element>(b).matrix) {
            return false;
        }
    }
    return true;
}

FreeProductWord compose_basic(const std::vector<BasicWord>& words) {
    std::vector<FreeProductWord::Part> raw;
    raw.reserve(words.size() * 3);
    for (const BasicWord& b : words) {
        raw.emplace_back(b.coefficient);
        raw.emplace_back(Letter{b.index, b.sign});
        raw.emplace_back(inverse_element(b.coefficient));
    }
    return FreeProductWord::reduce(raw);
}

}  // namespace freecert
