#pragma once

#include "operad/defcomplex/algebra.hpp"
#include "operad/defcomplex/cooperad.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace operad {

// Hom(P^c, End(A)) for a regular (non-symmetric) quadratic operad P, identified with
// the Hadamard product P! (x) End(A): an arity-n element assigns to each basis element
// b of P!(n) a map A^(x)n -> A. All products use the same sign convention:
//   f * g   = sum_i (-1)^((i-1)(q-1)) f o_i g      (q = arity g, slots 1-based)
//   [f, g]  = f * g - (-1)^(|f||g|) g * f,   |f| = arity f - 1
//   del f   = [alpha, f],   alpha = sum_g g^vee (x) g_A
// With this convention del f = (-1)^|f| d f, where d is the alternating sum of the
// cosimplicial faces d^0 = m o_2 f, d^i = f o_i m, d^(n+1) = m o_1 f and m = alpha.
class ConvolutionContext {
public:
    // Throws std::invalid_argument for symmetric P.
    ConvolutionContext(const QuadPresentation& p, AlgebraStructure a, int max_arity = 4);

    const DualCooperadTrunc& cooperad() const { return *coop_; }
    const AlgebraStructure& algebra() const { return alg_; }
    int max_arity() const { return coop_->max_arity(); }
    std::size_t algebra_dim() const { return alg_.dim(); }
    // dim Hom(A^(x)n, A)
    std::size_t end_dim(int n) const;
    // dim P!(n) * dim Hom(A^(x)n, A)
    std::size_t element_dim(int n) const { return coop_->dim(n) * end_dim(n); }

private:
    std::shared_ptr<const DualCooperadTrunc> coop_;
    AlgebraStructure alg_;
};

class ConvolutionElement {
public:
    ConvolutionElement() = default;
    ConvolutionElement(const ConvolutionContext& ctx, int arity);

    int arity() const { return arity_; }
    int degree() const { return arity_ - 1; }
    // Entry (b, out, inputs) with inputs a base-dim A multi-index, first input most significant.
    const std::vector<Rational>& data() const { return data_; }
    std::vector<Rational>& data() { return data_; }
    bool is_zero() const;

    ConvolutionElement& operator+=(const ConvolutionElement& o);
    ConvolutionElement& operator-=(const ConvolutionElement& o);
    friend ConvolutionElement operator+(ConvolutionElement a, const ConvolutionElement& b) { return a += b; }
    friend ConvolutionElement operator-(ConvolutionElement a, const ConvolutionElement& b) { return a -= b; }
    friend ConvolutionElement operator*(const Rational& s, ConvolutionElement a);
    bool operator==(const ConvolutionElement& o) const { return arity_ == o.arity_ && data_ == o.data_; }

private:
    int arity_ = 0;
    std::vector<Rational> data_;
};

// f o_i g with a 0-based slot i, no sign.
ConvolutionElement partial(const ConvolutionContext& ctx, const ConvolutionElement& f, int i,
                           const ConvolutionElement& g);
ConvolutionElement star(const ConvolutionContext& ctx, const ConvolutionElement& f, const ConvolutionElement& g);
ConvolutionElement bracket(const ConvolutionContext& ctx, const ConvolutionElement& f, const ConvolutionElement& g);
ConvolutionElement twisting_cochain(const ConvolutionContext& ctx);
ConvolutionElement differential(const ConvolutionContext& ctx, const ConvolutionElement& f);

// d^i(f) for 0 <= i <= arity f + 1.
ConvolutionElement face(const ConvolutionContext& ctx, const ConvolutionElement& f, int i);
ConvolutionElement cosimplicial_d(const ConvolutionContext& ctx, const ConvolutionElement& f);
// f cup g = m(f, g); d(f cup g) = d f cup g + (-1)^(arity f) f cup d g.
ConvolutionElement cup(const ConvolutionContext& ctx, const ConvolutionElement& f, const ConvolutionElement& g);
// alpha(f, g) = (alpha o_1 f) o_(p+1) g, no sign.
ConvolutionElement alpha_composite(const ConvolutionContext& ctx, const ConvolutionElement& f,
                                   const ConvolutionElement& g);
// {f, g} = (-1)^((|f|+1)|g|) alpha(f, g) + (-1)^|f| alpha(g, f), the normalization for which
// {f, g} = del f * g + (-1)^|f| f * del g - del(f * g).
ConvolutionElement degree_minus_one_bracket(const ConvolutionContext& ctx, const ConvolutionElement& f,
                                            const ConvolutionElement& g);

// Entries drawn uniformly from {-2, ..., 2}.
ConvolutionElement random_element(const ConvolutionContext& ctx, int arity, std::mt19937& rng);

struct InvariantCheck {
    std::string name;
    bool ok;
    int instances;
};
// Maurer-Cartan, del^2 = 0, del = (-1)^|f| d, cosimplicial identities, right pre-Lie
// symmetry, graded Jacobi, the {f,g} identity and the cup Leibniz rule, each on
// `samples` random inputs whose results stay inside the truncation (max arity >= 3).
std::vector<InvariantCheck> check_invariants(const ConvolutionContext& ctx, int samples, unsigned seed);

}  // namespace operad
