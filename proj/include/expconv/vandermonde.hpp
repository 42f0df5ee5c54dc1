#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expconv/scalar.hpp"

namespace expconv {

struct RootCluster {
    Complex root;
    int multiplicity{1};
};

/// Ordered multiset of distinct roots with multiplicities. Distinctness is
/// enforced at the kRootMergeTol scale; add() merges instead of duplicating.
class RootMultiset {
public:
    RootMultiset() = default;
    explicit RootMultiset(std::vector<RootCluster> clusters);
    static RootMultiset single(Complex root, int multiplicity = 1);

    void add(Complex root, int multiplicity = 1);
    const std::vector<RootCluster>& clusters() const { return clusters_; }
    bool empty() const { return clusters_.empty(); }
    int total() const;
    RootMultiset merged_with(const RootMultiset& o) const;
    bool conjugate_closed(double tol = kRootMergeTol) const;

private:
    void validate() const;
    std::vector<RootCluster> clusters_;
};

/// One linear system V A = B with bookkeeping for diagnostics.
struct VandermondeSystem {
    int n{0};
    std::vector<Complex> matrix; // row-major n*n
    std::vector<Complex> rhs;
    std::vector<Complex> column_roots; // root owning each column (error reports)
    std::optional<std::vector<Complex>> solution;
    double residual{std::numeric_limits<double>::quiet_NaN()}; // ||VA-B||_inf after solve

    Complex& at(int i, int j) { return matrix[static_cast<std::size_t>(i) * n + j]; }
    Complex at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * n + j]; }
};

/// Simple Vandermonde V_ij = r_j^{i-1} with B = (0,..,0,1).
/// Throws DuplicateRoots when two roots coincide at merge tolerance.
VandermondeSystem build_simple(std::span<const Complex> roots);

/// Confluent system: cluster s of multiplicity n_s contributes columns
/// j = 1..n_s with entries C(i-1, j-1) r_s^{i-j} for i >= j, zero above.
VandermondeSystem build_confluent(const RootMultiset& rm);

/// Gaussian elimination with scaled partial pivoting; stores solution and
/// residual in the system. Throws NumericallySingular below kPivotRelTol.
const std::vector<Complex>& solve(VandermondeSystem& sys);
const std::vector<Complex>& solve_with_rhs(VandermondeSystem& sys, std::vector<Complex> rhs);

double rhs_inf_norm(const VandermondeSystem& sys);

/// One record per linear solve, threaded out of the convolution and solver
/// pipelines so callers can audit every residual.
struct SolveRecord {
    std::string stage;
    double residual;
    double rhs_inf;
};
using SolveLog = std::vector<SolveRecord>;

} // namespace expconv
