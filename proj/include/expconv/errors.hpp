#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace expconv {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// evaluate() hit the support point of an impulse atom.
struct ImpulseAtPoint : Error {
    using Error::Error;
};

/// differentiate_right() on a signal that still carries an impulse atom.
struct UnsupportedImpulseDerivative : Error {
    using Error::Error;
};

/// realify() on a signal whose root set is not closed under conjugation.
struct NotConjugateClosed : Error {
    using Error::Error;
};

/// build_simple() given two roots closer than the merge tolerance.
struct DuplicateRoots : Error {
    using Error::Error;
};

/// Gaussian elimination met a pivot below the relative threshold.
struct NumericallySingular : Error {
    using Error::Error;
};

/// Root finder failed the residual acceptance test; carries the best iterate.
struct NoConvergence : Error {
    NoConvergence(const std::string& msg, std::vector<std::complex<double>> roots,
                  std::vector<double> res)
        : Error(msg), best_roots(std::move(roots)), residuals(std::move(res)) {}
    std::vector<std::complex<double>> best_roots;
    std::vector<double> residuals;
};

/// Two cluster representatives ended up within twice the clustering threshold.
struct AmbiguousClustering : Error {
    using Error::Error;
};

/// Discrete atom with root 0 requested where the theory needs r != 0.
struct ZeroRootAtom : Error {
    using Error::Error;
};

/// Forcing input outside the exponential-times-polynomial class.
struct InputNotExponential : Error {
    using Error::Error;
};

/// Problem carries fewer (or more) initial values than its order.
struct InsufficientInitialValues : Error {
    using Error::Error;
};

/// Monomial/power-convolution basis conversion beyond exact factorial range.
struct DegreeTooHigh : Error {
    using Error::Error;
};

/// Integer binomial left the 64-bit range.
struct BinomialOverflow : Error {
    using Error::Error;
};

/// advance() would push support or impulse atoms below k = 0.
struct AdvanceOutOfSupport : Error {
    using Error::Error;
};

/// Problem file or CLI input could not be understood.
struct ParseError : Error {
    using Error::Error;
};

} // namespace expconv
