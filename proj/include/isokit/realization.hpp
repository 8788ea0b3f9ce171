#pragma once

#include "isokit/isotropy_data.hpp"

#include <variant>
#include <vector>

namespace isokit {

/// Isotropy data of (S^2)^n: C(n, j) points (V_j, +1) for each j.
IsotropyData sphere_power_data(unsigned n);

/// Isotropy data of the representation sphere S(V_j + R): {(V_j, +1), (V_j, -1)}.
/// Throws DataError if j > n.
IsotropyData rep_sphere_data(unsigned n, unsigned j);

/// Formal manifold
///   |m0| copies of (S^2)^n, orientation-reversed when m0 < 0,
///   disjoint union rep_spheres[j] copies of S(V_j + R) for j = 0..n.
struct Witness {
    unsigned n = 0;
    Integer m0 = 0;
    std::vector<Integer> rep_spheres;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Data that fails m[j] = C(n, j) m[0]. residuals[j] = m[j] - C(n, j) m[0]
/// for every j, zero entries included.
struct NotRealizable {
    unsigned n = 0;
    std::vector<Integer> residuals;

    /// Indices j with a nonzero residual.
    std::vector<unsigned> violated() const;

    friend bool operator==(const NotRealizable&, const NotRealizable&) = default;
};

using Realization = std::variant<Witness, NotRealizable>;

Realization realize(const IsotropyData& d);

IsotropyData witness_to_data(const Witness& w);

/// True iff the witness induces exactly d as a multiset.
bool verify_witness(const IsotropyData& d, const Witness& w);

} // namespace isokit
