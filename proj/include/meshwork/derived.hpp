#pragma once

#include "meshwork/collection.hpp"

namespace meshwork {

/// A'(C) = { h : h^{-1}A in C }.
Subset derived_set(const Subset& A, const Collection& C);

/// F * G = { A : A'(G) in F }, over all 2^n subsets.
Collection collection_product(const Collection& F, const Collection& G);

/// C <= {S} * C, i.e. every member's derived set along C is the whole
/// universe.
bool is_translation_invariant(const Collection& C);

/// C <= C * C.
bool is_idempotent_collection(const Collection& C);

}  // namespace meshwork
