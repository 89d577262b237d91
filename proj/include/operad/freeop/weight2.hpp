#pragma once

#include "operad/exact/matrix.hpp"
#include "operad/exact/perm.hpp"
#include "operad/exact/rational.hpp"
#include "operad/freeop/genspace.hpp"
#include "operad/freeop/tree.hpp"

#include <string>

namespace operad {

// Weight-two coordinates, i.e. F(V)(3).
//
// Symmetric: basis mu o_alpha nu at index alpha*d^2 + mu*d + nu, where mu is the
// root (upper) label, nu the inner (lower) label and
//   alpha = I   : mu(nu(x1,x2),x3)
//   alpha = II  : mu(nu(x2,x3),x1)
//   alpha = III : mu(nu(x3,x1),x2).
// Regular: basis mu o_c nu at index c*d^2 + mu*d + nu with
//   c = o1 : mu(nu(x1,x2),x3)
//   c = o2 : mu(x1,nu(x2,x3)).
enum Comp : int { kCompI = 0, kCompII = 1, kCompIII = 2 };
enum PlanarComp : int { kComp1 = 0, kComp2 = 1 };

struct Weight2Index {
    int comp;
    std::size_t upper;
    std::size_t lower;
};

std::size_t weight2_dim(const GenSpace& g);
std::uint32_t weight2_index(const GenSpace& g, int comp, std::size_t upper, std::size_t lower);
Weight2Index weight2_decode(const GenSpace& g, std::uint32_t i);
// The defining (not necessarily basis-ordered) tree of a weight-two basis element.
TreeCode weight2_tree(const GenSpace& g, std::uint32_t i);
std::string weight2_basis_str(const GenSpace& g, std::uint32_t i);
std::string weight2_str(const GenSpace& g, const SparseVector& v);
const char* comp_name(Kind k, int comp);

// Change of basis between weight-two coordinates and the arity-3 FreeSpan basis.
// Identity for the regular kind.
Matrix weight2_to_tree3(const GenSpace& g);
Matrix tree3_to_weight2(const GenSpace& g);

// Leaf relabelling x_i -> x_sigma(i) written in weight-two coordinates: the
// transposition (12) fixes type I, exchanges II and III, and applies action12 to
// the lower label; the 3-cycle 1->2->3->1 sends type alpha to alpha+I.
SparseVector s3_action(const GenSpace& g, const SparseVector& v, const Perm& sigma);
SparseVector s3_transposition(const GenSpace& g, const SparseVector& v);
SparseVector s3_cycle(const GenSpace& g, const SparseVector& v);

// Gram matrix of the pairing F(V)(3) x F(V^vee)(3) -> k in weight-two coordinates:
// identity (symmetric) or +1 on the o1 block and -1 on the o2 block (regular).
Matrix weight2_form(const GenSpace& g);
Rational weight2_pairing(const GenSpace& v, const SparseVector& x, const GenSpace& dual, const SparseVector& y);

}  // namespace operad
