#include "kreg/free_lie.hpp"

#include <stdexcept>

namespace kreg {
namespace {

std::size_t standardSplit(std::string_view w) {
    for (std::size_t s = 1; s < w.size(); ++s) {
        if (isLyndon(w.substr(s))) return s;
    }
    return 0;
}

int moebius(std::size_t n) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

}  // namespace

bool isLyndon(std::string_view w) {
    if (w.empty()) return false;
    for (char c : w) {
        if (c != 'X' && c != 'Y') return false;
    }
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (!(w < w.substr(k))) return false;
    }
    return true;
}

LyndonWord::LyndonWord(std::string letters) : letters_(std::move(letters)) {
    if (!isLyndon(letters_)) throw std::invalid_argument("'" + letters_ + "' is not a Lyndon word over {X, Y}");
    split_ = standardSplit(letters_);
}

LyndonWord LyndonWord::left() const {
    if (isGenerator()) throw std::logic_error("generator has no factorization");
    return LyndonWord(letters_.substr(0, split_));
}

LyndonWord LyndonWord::right() const {
    if (isGenerator()) throw std::logic_error("generator has no factorization");
    return LyndonWord(letters_.substr(split_));
}

std::string LyndonWord::bracketing() const {
    if (isGenerator()) return letters_;
    return "[" + left().bracketing() + "," + right().bracketing() + "]";
}

std::vector<std::vector<LyndonWord>> lyndonBasis(std::size_t maxDegree) {
    if (maxDegree == 0) throw std::invalid_argument("lyndonBasis: maxDegree must be >= 1");
    std::vector<std::vector<LyndonWord>> out(maxDegree);
    std::string w = "X";
    while (!w.empty()) {
        out[w.size() - 1].emplace_back(w);
        const std::size_t m = w.size();
        while (w.size() < maxDegree) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == 'Y') w.pop_back();
        if (!w.empty()) w.back() = 'Y';
    }
    return out;
}

std::vector<LyndonWord> lyndonBasisFlat(std::size_t maxDegree) {
    std::vector<LyndonWord> flat;
    for (auto& degree : lyndonBasis(maxDegree)) {
        for (auto& w : degree) flat.push_back(std::move(w));
    }
    return flat;
}

std::uint64_t wittDimension(std::size_t j) {
    if (j == 0 || j > 62) throw std::invalid_argument("wittDimension: degree must be in [1, 62]");
    std::int64_t sum = 0;
    for (std::size_t d = 1; d <= j; ++d) {
        if (j % d) continue;
        sum += moebius(d) * (std::int64_t{1} << (j / d));
    }
    return static_cast<std::uint64_t>(sum) / j;
}

std::uint64_t cumulativeWittDimension(std::size_t cap) {
    std::uint64_t total = 0;
    for (std::size_t j = 1; j <= cap; ++j) total += wittDimension(j);
    return total;
}

WordEvaluator::WordEvaluator(const LieAlgebra& alg, Vec x, Vec y) : alg_(alg), x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != alg.dim() || y_.size() != alg.dim()) throw std::invalid_argument("WordEvaluator: length mismatch");
}

const Vec& WordEvaluator::operator()(const LyndonWord& w) { return eval(w.letters(), w.split()); }

const Vec& WordEvaluator::eval(const std::string& letters, std::size_t split) {
    if (letters.size() == 1) return letters[0] == 'X' ? x_ : y_;
    if (auto it = memo_.find(letters); it != memo_.end()) return it->second;
    const std::string u = letters.substr(0, split);
    const std::string v = letters.substr(split);
    const Vec& lhs = eval(u, standardSplit(u));
    const Vec& rhs = eval(v, standardSplit(v));
    Vec value = alg_.bracket(lhs, rhs);
    return memo_.emplace(letters, std::move(value)).first->second;
}

DualWordEvaluator::DualWordEvaluator(const LieAlgebra& alg, Vec x, Vec y, Vec dx, Vec dy)
    : alg_(alg), gx_{std::move(x), std::move(dx)}, gy_{std::move(y), std::move(dy)} {
    const std::size_t n = alg.dim();
    if (gx_.value.size() != n || gy_.value.size() != n || gx_.deriv.size() != n || gy_.deriv.size() != n) {
        throw std::invalid_argument("DualWordEvaluator: length mismatch");
    }
}

const DualVector& DualWordEvaluator::operator()(const LyndonWord& w) { return eval(w.letters(), w.split()); }

const DualVector& DualWordEvaluator::eval(const std::string& letters, std::size_t split) {
    if (letters.size() == 1) return letters[0] == 'X' ? gx_ : gy_;
    if (auto it = memo_.find(letters); it != memo_.end()) return it->second;
    const std::string u = letters.substr(0, split);
    const std::string v = letters.substr(split);
    const DualVector& a = eval(u, standardSplit(u));
    const DualVector& b = eval(v, standardSplit(v));
    // [a + t a', b + t b'] = [a, b] + t ([a, b'] + [a', b])
    DualVector out{alg_.bracket(a.value, b.value), alg_.bracket(a.value, b.deriv) + alg_.bracket(a.deriv, b.value)};
    return memo_.emplace(letters, std::move(out)).first->second;
}

Vec evaluateWord(const LieAlgebra& alg, const LyndonWord& w, const Vec& x, const Vec& y) {
    WordEvaluator ev(alg, x, y);
    return ev(w);
}

DualVector evaluateWordDual(const LieAlgebra& alg, const LyndonWord& w, const Vec& x, const Vec& y, const Vec& dx,
                            const Vec& dy) {
    DualWordEvaluator ev(alg, x, y, dx, dy);
    return ev(w);
}

}  // namespace kreg
