#pragma once

#include <string>
#include <vector>

namespace operad {

// Permutation of {0..n-1}; images()[i] is the image of i. Printed 1-based.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static Perm from_one_based(const std::vector<int>& images);
    // Transposition of a and b (0-based).
    static Perm transposition(int n, int a, int b);
    // All of S_n in lexicographic order of image lists.
    static std::vector<Perm> all(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    int sign() const;
    bool is_identity() const;

    // (s * t)(i) = s(t(i))
    friend Perm operator*(const Perm& s, const Perm& t);
    bool operator==(const Perm& o) const = default;
    auto operator<=>(const Perm& o) const = default;

    std::string str() const;

private:
    std::vector<int> img_;
};

}  // namespace operad
