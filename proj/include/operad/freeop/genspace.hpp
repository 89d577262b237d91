#pragma once

#include "operad/exact/matrix.hpp"

#include <string>
#include <vector>

namespace operad {

enum class Kind { symmetric, regular };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);

// Space of binary generators. A symmetric space carries the action of the
// transposition (12): column j of action12 is the image of generator j. A regular
// space is the generating space V' of a non-symmetric operad, with V = V' (x) k[S2].
class GenSpace {
public:
    GenSpace() = default;
    static GenSpace symmetric(std::vector<std::string> names, Matrix action12);
    static GenSpace regular(std::vector<std::string> names);
    static GenSpace trivial(const std::string& name);
    static GenSpace sign(const std::string& name);
    // Free S2-module on the given names; generator g is followed by g' = g^(12).
    static GenSpace regular_action(const std::vector<std::string>& names);

    Kind kind() const { return kind_; }
    bool is_symmetric() const { return kind_ == Kind::symmetric; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const Matrix& action12() const { return action12_; }
    // Index of a generator name; throws on unknown names.
    std::size_t index(const std::string& name) const;

    bool operator==(const GenSpace& o) const {
        return kind_ == o.kind_ && names_ == o.names_ && action12_ == o.action12_;
    }

private:
    Kind kind_ = Kind::symmetric;
    std::vector<std::string> names_;
    Matrix action12_;
};

// Dual generating space: the action becomes -transpose(action12) (symmetric) and
// the dual basis is untwisted (regular).
GenSpace dual_genspace(const GenSpace& g);

// V (x) W on basis (i,j) -> i*dim W + j, with action A_V (x) A_W times `twist`.
GenSpace tensor_genspace(const GenSpace& v, const GenSpace& w, int twist);

// Symmetric space V' (x) k[S2] of a regular space V'.
GenSpace symmetrize_genspace(const GenSpace& g);

}  // namespace operad
