#pragma once

#include "gnet/network.hpp"

#include <vector>

namespace gnet {

// Quarter turn: a+bi -> -b+ai (multiplication by i). Order four; maps the
// canonical diamond onto itself and flips edge axes.
Node rho(Node v);

// Reflection across the second/fourth-quadrant diagonal: a+bi -> -b-ai.
// An involution; also flips edge axes.
Node sigma(Node v);

enum class SymAtom { Rho, Sigma };

// Composition word, applied right to left so that {Rho, Sigma} reads as
// "rho after sigma", matching the usual rho*sigma notation.
struct SymmetryWord {
    std::vector<SymAtom> atoms;
};

Node apply(const SymmetryWord& w, Node v);

// canonical_mod(v + t): the translation automorphism that realises
// vertex-transitivity.
Node translate(Node v, Node t, const DenseModulus& m);

}  // namespace gnet
