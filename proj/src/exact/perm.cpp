#include "operad/exact/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace operad {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

Perm Perm::from_one_based(const std::vector<int>& images) {
    std::vector<int> v = images;
    for (int& x : v) --x;
    return Perm(std::move(v));
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p = identity(n);
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("transposition out of range");
    std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
    return p;
}

std::vector<Perm> Perm::all(int n) {
    std::vector<Perm> out;
    Perm p = identity(n);
    do out.push_back(p);
    while (std::next_permutation(p.img_.begin(), p.img_.end()));
    return out;
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    Perm p;
    p.img_ = std::move(v);
    return p;
}

int Perm::sign() const {
    std::vector<bool> seen(img_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

Perm operator*(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw std::invalid_argument("composing permutations of different degree");
    Perm p;
    p.img_.resize(t.img_.size());
    for (std::size_t i = 0; i < t.img_.size(); ++i) p.img_[i] = s(t.img_[i]);
    return p;
}

std::string Perm::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? " " : "") + std::to_string(img_[i] + 1);
    return s + "]";
}

}  // namespace operad
