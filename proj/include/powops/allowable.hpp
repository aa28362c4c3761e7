#ifndef POWOPS_ALLOWABLE_HPP
#define POWOPS_ALLOWABLE_HPP

#include <memory>
#include <string>
#include <vector>

#include "powops/adem.hpp"
#include "powops/terms.hpp"

namespace powops {

struct Generator {
    std::string name;
    long long degree = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Graded basis of the generating vector space; names are unique.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Generator> gens);

    size_t size() const { return gens_.size(); }
    const Generator& at(size_t i) const { return gens_.at(i); }
    const std::vector<Generator>& generators() const { return gens_; }
    /// Index of the named generator, or npos.
    size_t find(const std::string& name) const;

    static constexpr size_t npos = static_cast<size_t>(-1);

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<Generator> gens_;
};

/// One factor of a monomial: an admissible side-B word applied to a
/// generator.  The empty word marks the bare generator.  Nonempty words have
/// excess strictly above the generator degree; at odd p a word whose excess
/// equals the degree and whose head carries the Bockstein is also allowed
/// (such words are not p-th powers and generate freely).
struct Factor {
    OpWord word;
    size_t gen = 0;
    long long exponent = 1;
};

bool factor_key_less(const Factor& a, const Factor& b);

/// Product of factors with positive exponents, factors canonically sorted.
/// Odd-degree factors have exponent 1 at odd primes.
struct AlgebraMonomial {
    std::vector<Factor> factors;
    long long degree = 0;  // cached total degree

    bool is_unit() const { return factors.empty(); }
    long long product_length() const;
};

/// Monomial order: total degree, then product length, then lexicographic on
/// (word, generator, exponent).
bool monomial_less(const AlgebraMonomial& a, const AlgebraMonomial& b);

struct MonomialLess {
    bool operator()(const AlgebraMonomial& a, const AlgebraMonomial& b) const
    {
        return monomial_less(a, b);
    }
};

/// Element of the free allowable algebra over a generator set: an F_p-linear
/// combination of canonical monomials.
class AlgebraElement {
public:
    AlgebraElement(Prime p, std::shared_ptr<const GeneratorSet> gens);

    static AlgebraElement zero(Prime p, std::shared_ptr<const GeneratorSet> gens);
    static AlgebraElement one(Prime p, std::shared_ptr<const GeneratorSet> gens);
    static AlgebraElement generator(Prime p, std::shared_ptr<const GeneratorSet> gens,
                                    size_t index);

    Prime prime() const { return prime_; }
    const std::shared_ptr<const GeneratorSet>& gens() const { return gens_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<AlgebraMonomial, Fp, MonomialLess>& terms() const { return terms_; }

    void add(const AlgebraMonomial& m, Fp coeff);

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(Fp scalar) const;
    /// Graded-commutative product (Koszul signs at odd p; odd-degree squares
    /// vanish).
    AlgebraElement operator*(const AlgebraElement& rhs) const;
    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement pow(long long n) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b)
    {
        return !(a == b);
    }

    std::string str() const;

private:
    Prime prime_;
    std::shared_ptr<const GeneratorSet> gens_;
    std::map<AlgebraMonomial, Fp, MonomialLess> terms_;
};

/// Canonical element represented by an admissible word applied to a
/// generator: zero below the instability threshold, a p-th power at the
/// threshold (Bockstein-headed words stay at odd p), a basis factor above it.
AlgebraElement word_on_generator(const OpWord& word, size_t gen, Prime p,
                                 const std::shared_ptr<const GeneratorSet>& gens);

/// Evaluates a side-B operation on an element using additivity, instability,
/// the p-th power rule, unitality, the Cartan formula and Adem reduction.
/// The result is expressed in the admissible basis.
AlgebraElement apply_op(const LinComb& op, const AlgebraElement& x,
                        adem::RewriteCache* cache = nullptr);

/// Basis of the free allowable algebra in one degree, words capped in length.
/// Requires positively graded generators (the enumeration is infinite
/// otherwise).
std::vector<AlgebraMonomial> free_basis(Prime p, const GeneratorSet& V, long long degree,
                                        long long length_cap);

/// Image under the suspension-stage map: products die, single operation
/// factors move to the generator one degree higher.
AlgebraElement suspension_image(const AlgebraElement& x);

/// A finite enumeration window for completion stages.
struct WindowSpec {
    long long degree = 0;
    long long excess_floor = 0;
    long long length_cap = 1;

    friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

/// All admissible side-B words of the window's degree with excess at or above
/// the floor and length in [1, length_cap], in canonical order.
std::vector<OpWord> completion_basis(const WindowSpec& w, Prime p);
/// Serial reference for the OpenMP enumeration above.
std::vector<OpWord> completion_basis_serial(const WindowSpec& w, Prime p);

/// Projection between completion stages: words below the target floor die,
/// the rest are fixed.  Carries a surjectivity certificate.
struct StructureMap {
    WindowSpec source;
    WindowSpec target;
    std::vector<OpWord> source_basis;
    std::vector<OpWord> target_basis;
    std::vector<OpWord> killed;
    bool surjective = false;
};

StructureMap structure_map(const WindowSpec& source, const WindowSpec& target, Prime p);

/// Quotient to the Steenrod algebra: Q^s -> Sq^{-s} (beta^eps P^s ->
/// beta^eps P^{-s}), then side-A normalization and Adem reduction.
LinComb steenrodize(const LinComb& x, adem::RewriteCache* cache = nullptr);

/// All admissible side-A words of one cohomological degree.
std::vector<OpWord> steenrod_basis(long long degree, Prime p);

/// Dimension oracle for the mod-2 Steenrod algebra: multisets of parts
/// 2^i - 1 summing to the degree.
long long milnor_dim(long long degree);

}  // namespace powops

#endif
