#include "gnet/symmetry.hpp"

namespace gnet {

Node rho(Node v) {
    return v * GInt{0, 1};
}

Node sigma(Node v) {
    return {-v.im, -v.re};
}

Node apply(const SymmetryWord& w, Node v) {
    for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it)
        v = (*it == SymAtom::Rho) ? rho(v) : sigma(v);
    return v;
}

Node translate(Node v, Node t, const DenseModulus& m) {
    return canonical_mod(v + t, m);
}

}  // namespace gnet
