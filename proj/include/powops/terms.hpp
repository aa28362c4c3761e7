#ifndef POWOPS_TERMS_HPP
#define POWOPS_TERMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powops/modp.hpp"

namespace powops {

/// Which algebra a word lives in.
///   B: generalized (Dyer-Lashof / homological) convention, arbitrary integer
///      indices.
///   A: classical Steenrod (cohomological) convention, nonnegative indices.
enum class Side : unsigned char { B, A };

std::string side_name(Side s);

/// A single operation letter: Q^s / Sq^s at p = 2, beta^eps P^s at odd p.
struct OpLetter {
    int bockstein = 0;  // 0 or 1; always 0 at p = 2
    long long index = 0;

    friend bool operator==(const OpLetter&, const OpLetter&) = default;
    friend auto operator<=>(const OpLetter& a, const OpLetter& b)
    {
        if (a.bockstein != b.bockstein)
            return a.bockstein <=> b.bockstein;
        return a.index <=> b.index;
    }
};

/// A composite of operation letters; the leftmost letter acts last.
/// The empty word is the identity operation.
class OpWord {
public:
    OpWord(Prime p, Side side, std::vector<OpLetter> letters = {});

    Prime prime() const { return prime_; }
    Side side() const { return side_; }
    const std::vector<OpLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }

    /// Concatenation (composition of operations).
    OpWord concat(const OpWord& rhs) const;

private:
    Prime prime_;
    Side side_;
    std::vector<OpLetter> letters_;
};

/// Canonical total order on words: by length, then lexicographically by
/// (bockstein, index) pairs.
bool word_less(const OpWord& a, const OpWord& b);
bool word_equal(const OpWord& a, const OpWord& b);

struct WordLess {
    bool operator()(const OpWord& a, const OpWord& b) const { return word_less(a, b); }
};

/// Degree of the operation the word represents.
///   side B, p = 2:  sum s_i            (Q^s raises degree by s)
///   side B, odd p:  sum 2 s_i(p-1) - eps_i
///   side A, p = 2:  sum s_i            (cohomological degree of Sq^I)
///   side A, odd p:  sum 2 s_i(p-1) + eps_i
long long degree(const OpWord& w);

/// p^(number of letters).  Side B only; weight is a power-operation notion.
long long weight(const OpWord& w);

/// Excess: head threshold minus degree of the tail.  Side B only.
/// Empty word has excess +infinity, reported as nullopt.
///   p = 2:  s_1 - sum_{i>=2} s_i
///   odd p:  (2 s_1 - eps_1) - sum_{i>=2} (2 s_i(p-1) - eps_i)
std::optional<long long> excess(const OpWord& w);

/// Adjacent-pair admissibility; exact complement of the Adem step domain.
bool pair_admissible(const OpLetter& a, const OpLetter& b, Prime p, Side side);

/// Word admissibility: no Adem or instability relation applies.
///   side B: all adjacent pairs admissible.
///   side A: adjacent pairs admissible and every index >= 1, except that at
///   odd p the final letter may be the Bockstein beta = b P^0.
bool is_admissible(const OpWord& w);

/// A finite formal F_p-linear combination of words, all sharing (prime, side),
/// stored in canonical sorted order with no zero coefficients.  On side A,
/// words are normalized on insertion: a letter with index 0 and no Bockstein
/// is the identity and is deleted; a letter with negative index annihilates
/// the word.
class LinComb {
public:
    LinComb(Prime p, Side side);

    /// The zero combination.
    static LinComb zero(Prime p, Side side);
    /// A single word with coefficient 1.
    static LinComb of(const OpWord& w);
    /// The identity operation (empty word).
    static LinComb one(Prime p, Side side);

    Prime prime() const { return prime_; }
    Side side() const { return side_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<OpWord, Fp, WordLess>& terms() const { return terms_; }

    /// Adds coeff * w, normalizing side-A words first.
    void add(const OpWord& w, Fp coeff);

    LinComb operator+(const LinComb& rhs) const;
    LinComb operator-(const LinComb& rhs) const;
    LinComb operator*(Fp scalar) const;
    /// Bilinear extension of word concatenation (composition product).
    LinComb operator*(const LinComb& rhs) const;

    LinComb& operator+=(const LinComb& rhs);

    friend bool operator==(const LinComb& a, const LinComb& b);
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    Prime prime_;
    Side side_;
    std::map<OpWord, Fp, WordLess> terms_;
};

/// Side-A normalization: returns nullopt if the word is annihilated (negative
/// index), otherwise the word with identity letters removed.
std::optional<std::vector<OpLetter>> normalize_side_a(const std::vector<OpLetter>& letters);

/// Throws std::invalid_argument unless the letter is valid for (p, side).
void check_letter(const OpLetter& l, Prime p, Side side);

/// Canonical printer; emits the grammar the parser accepts.
std::string to_string(const OpWord& w);
std::string to_string(const LinComb& x);

}  // namespace powops

#endif
