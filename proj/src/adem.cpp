#include "powops/adem.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powops {
namespace adem {

namespace {

long long ceil_div(long long a, long long b)
{
    long long q = a / b;
    if (a % b != 0 && (a > 0) == (b > 0))
        ++q;
    return q;
}

Fp signed_coeff(Fp c, long long exponent)
{
    return (exponent % 2 != 0) ? -c : c;
}

// Q^r Q^s = sum_i binom(i-s-1, 2i-r) Q^{r+s-i} Q^i, for r > 2s.
// Nonzero terms need 2i-r >= 0 and 2i-r <= i-s-1.
void step_b2(LinComb& out, long long r, long long s, Prime p)
{
    for (long long i = ceil_div(r, 2); i <= r - s - 1; ++i) {
        Fp c = binom_mod_p(i - s - 1, 2 * i - r, p);
        out.add(OpWord(p, Side::B, {{0, r + s - i}, {0, i}}), c);
    }
}

// Side B, odd p.  For the right letter P^s (r > ps):
//   P^r P^s = sum (-1)^{r+i} binom((p-1)(i-s)-1, pi-r) P^{r+s-i} P^i
// and for the right letter beta P^s (r >= ps):
//   P^r bP^s = sum (-1)^{r+i} binom((p-1)(i-s), pi-r) bP^{r+s-i} P^i
//            - sum (-1)^{r+i} binom((p-1)(i-s)-1, pi-r-1) P^{r+s-i} bP^i.
// A left Bockstein is applied formally afterwards, deleting beta beta terms.
void step_b_odd(LinComb& out, int e1, long long r, int e2, long long s, Prime p)
{
    long long pv = p.value();
    if (e2 == 0) {
        for (long long i = ceil_div(r, pv); i <= r - (pv - 1) * s - 1; ++i) {
            Fp c = signed_coeff(binom_mod_p((pv - 1) * (i - s) - 1, pv * i - r, p), r + i);
            out.add(OpWord(p, Side::B, {{e1, r + s - i}, {0, i}}), c);
        }
        return;
    }
    if (e1 == 0) {
        for (long long i = ceil_div(r, pv); i <= r - (pv - 1) * s; ++i) {
            Fp c = signed_coeff(binom_mod_p((pv - 1) * (i - s), pv * i - r, p), r + i);
            out.add(OpWord(p, Side::B, {{1, r + s - i}, {0, i}}), c);
        }
    }
    // with e1 = 1 the first sum acquires beta beta and is deleted
    for (long long i = ceil_div(r + 1, pv); i <= r - (pv - 1) * s; ++i) {
        Fp c = signed_coeff(binom_mod_p((pv - 1) * (i - s) - 1, pv * i - r - 1, p), r + i);
        out.add(OpWord(p, Side::B, {{e1, r + s - i}, {1, i}}), -c);
    }
}

// Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c, for a < 2b.
// Terms with c < 0 are annihilated by side-A normalization.
void step_a2(LinComb& out, long long a, long long b, Prime p)
{
    for (long long c = a - b + 1; 2 * c <= a; ++c) {
        Fp coeff = binom_mod_p(b - c - 1, a - 2 * c, p);
        out.add(OpWord(p, Side::A, {{0, a + b - c}, {0, c}}), coeff);
    }
}

// Side A, odd p, classical reduced-power relations.  For P^b right (a < pb):
//   P^a P^b = sum (-1)^{a+c} binom((p-1)(b-c)-1, a-pc) P^{a+b-c} P^c
// and for beta P^b right (a <= pb):
//   P^a bP^b = sum (-1)^{a+c} binom((p-1)(b-c), a-pc) bP^{a+b-c} P^c
//            - sum (-1)^{a+c} binom((p-1)(b-c)-1, a-pc-1) P^{a+b-c} bP^c.
void step_a_odd(LinComb& out, int e1, long long a, int e2, long long b, Prime p)
{
    long long pv = p.value();
    if (e2 == 0) {
        for (long long c = a - (pv - 1) * b + 1; pv * c <= a; ++c) {
            Fp coeff = signed_coeff(binom_mod_p((pv - 1) * (b - c) - 1, a - pv * c, p), a + c);
            out.add(OpWord(p, Side::A, {{e1, a + b - c}, {0, c}}), coeff);
        }
        return;
    }
    if (e1 == 0) {
        for (long long c = a - (pv - 1) * b; pv * c <= a; ++c) {
            Fp coeff = signed_coeff(binom_mod_p((pv - 1) * (b - c), a - pv * c, p), a + c);
            out.add(OpWord(p, Side::A, {{1, a + b - c}, {0, c}}), coeff);
        }
    }
    for (long long c = a - (pv - 1) * b; pv * c <= a - 1; ++c) {
        Fp coeff = signed_coeff(binom_mod_p((pv - 1) * (b - c) - 1, a - pv * c - 1, p), a + c);
        out.add(OpWord(p, Side::A, {{e1, a + b - c}, {1, c}}), -coeff);
    }
}

}  // namespace

LinComb adem_step(const OpLetter& a, const OpLetter& b, Prime p, Side side)
{
    if (pair_admissible(a, b, p, side))
        throw std::invalid_argument("adem_step: pair is admissible");
    check_letter(a, p, side);
    check_letter(b, p, side);
    LinComb out(p, side);
    if (side == Side::B) {
        if (p.value() == 2)
            step_b2(out, a.index, b.index, p);
        else
            step_b_odd(out, a.bockstein, a.index, b.bockstein, b.index, p);
    } else {
        if (p.value() == 2)
            step_a2(out, a.index, b.index, p);
        else
            step_a_odd(out, a.bockstein, a.index, b.bockstein, b.index, p);
    }
    return out;
}

size_t RewriteCache::KeyHash::operator()(const Key& k) const
{
    size_t h = std::hash<long long>()(k.prime);
    auto mix = [&h](long long v) {
        h ^= std::hash<long long>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(static_cast<long long>(k.side));
    mix(k.a.bockstein * 2 + k.b.bockstein);
    mix(k.a.index);
    mix(k.b.index);
    return h;
}

const LinComb& RewriteCache::get_or_compute(const OpLetter& a, const OpLetter& b, Prime p,
                                            Side side)
{
    Key key{p.value(), side, a, b};
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it != map_.end())
            return it->second;
    }
    LinComb value = adem_step(a, b, p, side);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.try_emplace(key, std::move(value));
    return it->second;
}

size_t RewriteCache::size() const
{
    std::shared_lock lock(mutex_);
    return map_.size();
}

long long moment(const OpWord& w)
{
    long long pv = w.prime().value();
    const auto& ls = w.letters();
    long long m = 0;
    long long n = static_cast<long long>(ls.size());
    for (long long j = 0; j < n; ++j) {
        long long pos = (w.side() == Side::B) ? n - j : j + 1;
        long long u;
        if (pv == 2)
            u = ls[j].index;
        else if (w.side() == Side::B)
            u = 2 * ls[j].index * (pv - 1) - ls[j].bockstein;
        else
            u = 2 * ls[j].index * (pv - 1) + ls[j].bockstein;
        m += pos * u;
    }
    return m;
}

namespace {

constexpr size_t kNoRedex = static_cast<size_t>(-1);

// Scans for the first inadmissible adjacent pair; kNoRedex when admissible.
size_t find_redex(const std::vector<OpLetter>& ls, Prime p, Side side, Strategy strategy)
{
    size_t n = ls.size();
    if (n < 2)
        return kNoRedex;
    if (strategy == Strategy::Leftmost) {
        for (size_t i = 0; i + 1 < n; ++i)
            if (!pair_admissible(ls[i], ls[i + 1], p, side))
                return i;
    } else {
        for (size_t i = n - 1; i-- > 0;)
            if (!pair_admissible(ls[i], ls[i + 1], p, side))
                return i;
    }
    return kNoRedex;
}

void reduce_term(const OpWord& word, Fp coeff, LinComb& out, const ReduceOptions& opts)
{
    Prime p = word.prime();
    Side side = word.side();
    std::vector<std::pair<std::vector<OpLetter>, Fp>> work;
    work.emplace_back(word.letters(), coeff);
    long long steps = 0;
    while (!work.empty()) {
        auto [ls, c] = std::move(work.back());
        work.pop_back();
        size_t i = find_redex(ls, p, side, opts.strategy);
        if (i == kNoRedex) {
            out.add(OpWord(p, side, std::move(ls)), c);
            continue;
        }
        if (++steps > opts.step_budget)
            throw BudgetError("reduce: step budget exhausted");
        const LinComb& expansion =
            opts.cache ? opts.cache->get_or_compute(ls[i], ls[i + 1], p, side)
                       : adem_step(ls[i], ls[i + 1], p, side);
        for (const auto& [pair_word, pc] : expansion.terms()) {
            std::vector<OpLetter> next;
            next.reserve(ls.size() + pair_word.length());
            next.insert(next.end(), ls.begin(), ls.begin() + static_cast<long>(i));
            next.insert(next.end(), pair_word.letters().begin(), pair_word.letters().end());
            next.insert(next.end(), ls.begin() + static_cast<long>(i) + 2, ls.end());
            if (side == Side::A) {
                auto norm = normalize_side_a(next);
                if (!norm)
                    continue;
                next = std::move(*norm);
            }
            if (opts.on_step)
                opts.on_step(OpWord(p, side, ls), OpWord(p, side, next));
            work.emplace_back(std::move(next), c * pc);
        }
    }
}

}  // namespace

LinComb reduce(const LinComb& x, const ReduceOptions& opts)
{
    LinComb out(x.prime(), x.side());
    for (const auto& [w, c] : x.terms())
        reduce_term(w, c, out, opts);
    return out;
}

LinComb reduce_word(const OpWord& w, const ReduceOptions& opts)
{
    return reduce(LinComb::of(w), opts);
}

std::vector<LinComb> reduce_batch_serial(const std::vector<LinComb>& xs,
                                         const ReduceOptions& opts)
{
    std::vector<LinComb> out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        out.push_back(reduce(x, opts));
    return out;
}

std::vector<LinComb> reduce_batch(const std::vector<LinComb>& xs, const ReduceOptions& opts)
{
#ifdef _OPENMP
    std::vector<LinComb> out(xs.size(), LinComb(Prime(2), Side::B));
    std::exception_ptr error;
#pragma omp parallel
    {
        ReduceOptions local = opts;
        RewriteCache local_cache;
        if (!local.cache)
            local.cache = &local_cache;
#pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(xs.size()); ++i) {
            try {
                out[static_cast<size_t>(i)] = reduce(xs[static_cast<size_t>(i)], local);
            } catch (...) {
#pragma omp critical
                if (!error)
                    error = std::current_exception();
            }
        }
    }
    if (error)
        std::rethrow_exception(error);
    return out;
#else
    return reduce_batch_serial(xs, opts);
#endif
}

}  // namespace adem
}  // namespace powops
