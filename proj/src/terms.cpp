#include "powops/terms.hpp"

#include <sstream>

namespace powops {

std::string side_name(Side s)
{
    return s == Side::B ? "B" : "A";
}

void check_letter(const OpLetter& l, Prime p, Side side)
{
    if (l.bockstein != 0 && l.bockstein != 1)
        throw std::invalid_argument("OpLetter: bockstein must be 0 or 1");
    if (p.value() == 2 && l.bockstein != 0)
        throw std::invalid_argument("OpLetter: no Bockstein at p = 2");
    (void)side;  // side-A index positivity is handled by normalization
}

OpWord::OpWord(Prime p, Side side, std::vector<OpLetter> letters)
    : prime_(p), side_(side), letters_(std::move(letters))
{
    for (const auto& l : letters_)
        check_letter(l, prime_, side_);
}

OpWord OpWord::concat(const OpWord& rhs) const
{
    if (prime_ != rhs.prime_ || side_ != rhs.side_)
        throw std::invalid_argument("OpWord::concat: mixed prime or side");
    std::vector<OpLetter> ls = letters_;
    ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
    return OpWord(prime_, side_, std::move(ls));
}

bool word_less(const OpWord& a, const OpWord& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    return a.letters() < b.letters();
}

bool word_equal(const OpWord& a, const OpWord& b)
{
    return a.letters() == b.letters();
}

long long degree(const OpWord& w)
{
    long long p = w.prime().value();
    long long d = 0;
    for (const auto& l : w.letters()) {
        if (p == 2)
            d += l.index;
        else if (w.side() == Side::B)
            d += 2 * l.index * (p - 1) - l.bockstein;
        else
            d += 2 * l.index * (p - 1) + l.bockstein;
    }
    return d;
}

long long weight(const OpWord& w)
{
    if (w.side() != Side::B)
        throw std::invalid_argument("weight: defined on side B only");
    long long result = 1;
    for (size_t i = 0; i < w.length(); ++i)
        result *= w.prime().value();
    return result;
}

std::optional<long long> excess(const OpWord& w)
{
    if (w.side() != Side::B)
        throw std::invalid_argument("excess: defined on side B only");
    if (w.empty())
        return std::nullopt;
    long long p = w.prime().value();
    const auto& ls = w.letters();
    long long head = (p == 2) ? ls[0].index : 2 * ls[0].index - ls[0].bockstein;
    long long tail = 0;
    for (size_t i = 1; i < ls.size(); ++i)
        tail += (p == 2) ? ls[i].index : 2 * ls[i].index * (p - 1) - ls[i].bockstein;
    return head - tail;
}

bool pair_admissible(const OpLetter& a, const OpLetter& b, Prime p, Side side)
{
    long long pv = p.value();
    if (side == Side::B) {
        if (pv == 2)
            return a.index <= 2 * b.index;
        return a.index <= pv * b.index - b.bockstein;
    }
    if (pv == 2)
        return a.index >= 2 * b.index;
    return a.index >= pv * b.index + b.bockstein;
}

bool is_admissible(const OpWord& w)
{
    const auto& ls = w.letters();
    for (size_t i = 0; i + 1 < ls.size(); ++i)
        if (!pair_admissible(ls[i], ls[i + 1], w.prime(), w.side()))
            return false;
    if (w.side() == Side::A) {
        for (size_t i = 0; i < ls.size(); ++i) {
            if (ls[i].index >= 1)
                continue;
            // a trailing Bockstein b P^0 is the one admissible zero-index letter
            bool trailing_beta = w.prime().value() != 2 && i + 1 == ls.size() &&
                                 ls[i].bockstein == 1 && ls[i].index == 0;
            if (!trailing_beta)
                return false;
        }
    }
    return true;
}

std::optional<std::vector<OpLetter>> normalize_side_a(const std::vector<OpLetter>& letters)
{
    std::vector<OpLetter> out;
    out.reserve(letters.size());
    for (const auto& l : letters) {
        if (l.index < 0)
            return std::nullopt;
        if (l.index == 0 && l.bockstein == 0)
            continue;  // Sq^0 = P^0 = 1
        out.push_back(l);
    }
    return out;
}

LinComb::LinComb(Prime p, Side side) : prime_(p), side_(side) {}

LinComb LinComb::zero(Prime p, Side side)
{
    return LinComb(p, side);
}

LinComb LinComb::of(const OpWord& w)
{
    LinComb x(w.prime(), w.side());
    x.add(w, Fp(1, w.prime()));
    return x;
}

LinComb LinComb::one(Prime p, Side side)
{
    return of(OpWord(p, side, {}));
}

void LinComb::add(const OpWord& w, Fp coeff)
{
    if (w.prime() != prime_ || w.side() != side_)
        throw std::invalid_argument("LinComb::add: mixed prime or side");
    if (coeff.is_zero())
        return;
    OpWord key = w;
    if (side_ == Side::A) {
        auto norm = normalize_side_a(w.letters());
        if (!norm)
            return;
        key = OpWord(prime_, side_, std::move(*norm));
    }
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LinComb LinComb::operator+(const LinComb& rhs) const
{
    LinComb out = *this;
    out += rhs;
    return out;
}

LinComb& LinComb::operator+=(const LinComb& rhs)
{
    if (rhs.prime_ != prime_ || rhs.side_ != side_)
        throw std::invalid_argument("LinComb: mixed prime or side");
    for (const auto& [w, c] : rhs.terms_)
        add(w, c);
    return *this;
}

LinComb LinComb::operator-(const LinComb& rhs) const
{
    LinComb out = *this;
    for (const auto& [w, c] : rhs.terms_)
        out.add(w, -c);
    return out;
}

LinComb LinComb::operator*(Fp scalar) const
{
    LinComb out(prime_, side_);
    for (const auto& [w, c] : terms_)
        out.add(w, c * scalar);
    return out;
}

LinComb LinComb::operator*(const LinComb& rhs) const
{
    if (rhs.prime_ != prime_ || rhs.side_ != side_)
        throw std::invalid_argument("LinComb: mixed prime or side");
    LinComb out(prime_, side_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : rhs.terms_)
            out.add(w1.concat(w2), c1 * c2);
    return out;
}

bool operator==(const LinComb& a, const LinComb& b)
{
    if (a.prime_ != b.prime_ || a.side_ != b.side_ || a.terms_.size() != b.terms_.size())
        return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt) {
        if (!word_equal(it->first, jt->first) || it->second != jt->second)
            return false;
    }
    return true;
}

std::string to_string(const OpWord& w)
{
    if (w.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& l : w.letters()) {
        if (!first)
            out << ' ';
        first = false;
        if (w.prime().value() == 2)
            out << (w.side() == Side::B ? "Q^" : "Sq^") << l.index;
        else
            out << (l.bockstein ? "b P^" : "P^") << l.index;
    }
    return out.str();
}

std::string to_string(const LinComb& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        if (!first)
            out << " + ";
        first = false;
        if (w.empty())
            out << c.residue();
        else if (c.residue() == 1)
            out << to_string(w);
        else
            out << c.residue() << ' ' << to_string(w);
    }
    return out.str();
}

}  // namespace powops
