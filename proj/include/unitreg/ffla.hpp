#pragma once

#include "unitreg/ffmatrix.hpp"
#include "unitreg/subspace.hpp"

namespace unitreg {

// (V, W, f) with V = GF(p)^n, W a subspace and Wf contained in W.
// Construction validates the invariance and throws InvarianceViolated
// otherwise.
class InvariantSubspacePair {
 public:
  InvariantSubspacePair(Subspace w, FFMatrix f);

  std::int64_t p() const { return f_.p(); }
  int n() const { return f_.rows(); }
  const Subspace& w() const { return w_; }
  const FFMatrix& f() const { return f_; }

 private:
  Subspace w_;
  FFMatrix f_;
};

// The k x k matrix (k = dim W) of the restriction of f to W, written in
// the coordinates of W's RREF basis: row i holds the coordinates of
// (w_i)f. Exact because Wf ⊆ W.
FFMatrix restriction_matrix(const InvariantSubspacePair& pair);

// Canonical x with x*m = b: free variables zero under the deterministic
// pivot order. The `within` overload constrains x to a subspace of the
// domain side and solves in its basis coordinates. Throws NoSolution when
// b is not hit.
std::vector<std::int64_t> preimage(const FFMatrix& m, const std::vector<std::int64_t>& b);
std::vector<std::int64_t> preimage(const FFMatrix& m, const std::vector<std::int64_t>& b,
                                   const Subspace& within);

// The subspace transversals U and UW = U ∩ W of ker(f) and ker(f|W):
// canonical preimages inside W of a basis of R(f|W), together with
// canonical preimages of an extension to a basis of R(f), span U.
// Postconditions: dim U = rank f, U ∩ N(f) = {0}, UW = U ∩ W,
// dim UW = rank(f|W), UW ∩ N(f|W) = {0}.
struct TransversalSubspaces {
  Subspace u;
  Subspace uw;
};

TransversalSubspaces transversal_subspace(const InvariantSubspacePair& pair);

// Pulls the RREF basis of R(f) back through the transversal subspace U and
// reports whether its union with a basis of N(f) is a basis of the ambient
// space. Requires U ∩ N(f) = {0} and dim U = rank f (PreconditionViolated
// otherwise).
bool basis_union_check(const FFMatrix& f, const Subspace& u);

}  // namespace unitreg
